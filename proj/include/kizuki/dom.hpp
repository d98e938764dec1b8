#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kizuki::dom {

enum class NodeType { Document, Element, Text, Comment };

/// One DOM node. Elements own their children; the tree is immutable after
/// parsing and safe to share across threads.
struct Node {
    NodeType type = NodeType::Element;
    std::string tag;     // lowercase; empty for non-elements
    std::string text;    // Text/Comment payload, entities decoded
    std::vector<std::pair<std::string, std::string>> attrs;
    std::vector<std::unique_ptr<Node>> children;
    Node* parent = nullptr;

    const std::string* attr(std::string_view name) const;
    bool has_attr(std::string_view name) const;
    bool is_element(std::string_view name) const {
        return type == NodeType::Element && tag == name;
    }
};

struct Document {
    std::unique_ptr<Node> root;  // NodeType::Document

    /// Pre-order walk over all element nodes.
    template <typename Fn>
    void for_each_element(Fn&& fn) const {
        walk(root.get(), fn);
    }

private:
    template <typename Fn>
    static void walk(const Node* n, Fn& fn) {
        if (n->type == NodeType::Element) fn(*n);
        for (const auto& c : n->children) walk(c.get(), fn);
    }
};

/// Error-recovering tag-soup parser. Never throws on malformed input:
/// stray brackets become text, unclosed tags are closed at EOF, mismatched
/// end tags are dropped.
Document parse(std::string_view html);

/// Decodes character references (&amp;, &#x48;, ...). Unknown names are
/// left verbatim. Numeric references in the C1 range are mapped through
/// windows-1252, matching browser behavior.
std::string decode_entities(std::string_view text);

/// Root-to-node path such as "/html[0]/body[0]/img[2]"; the index counts
/// preceding same-tag siblings, which makes the path unique per document.
std::string node_path(const Node& node);

/// Resolves a node_path back to the node, or nullptr.
const Node* resolve_path(const Document& doc, std::string_view path);

/// Value of the root `lang` attribute, if any `html` element declares one.
std::optional<std::string> declared_language(const Document& doc);

} // namespace kizuki::dom
