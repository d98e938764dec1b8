#include "kizuki/dom.hpp"

#include "kizuki/unicode.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstring>
#include <unordered_map>
#include <unordered_set>

namespace kizuki::dom {

namespace {

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c += 32;
    return out;
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        char x = a[i], y = b[i];
        if (x >= 'A' && x <= 'Z') x += 32;
        if (y >= 'A' && y <= 'Z') y += 32;
        if (x != y) return false;
    }
    return true;
}

const std::unordered_set<std::string_view> kVoidElements = {
    "area", "base", "br", "col", "embed", "hr", "img", "input",
    "link", "meta", "param", "source", "track", "wbr",
};

// script/style content is opaque; textarea/title decode entities only.
const std::unordered_set<std::string_view> kRawText = {
    "script", "style", "xmp", "noembed", "noframes",
};
const std::unordered_set<std::string_view> kRcdata = {"textarea", "title"};

// Elements whose open tag implicitly closes a current <p>.
const std::unordered_set<std::string_view> kClosesP = {
    "address", "article", "aside", "blockquote", "div", "dl", "fieldset",
    "figure", "footer", "form", "h1", "h2", "h3", "h4", "h5", "h6",
    "header", "hr", "main", "nav", "ol", "p", "pre", "section", "table", "ul",
};

const std::unordered_map<std::string_view, char32_t> kNamedEntities = {
    {"amp", '&'}, {"lt", '<'}, {"gt", '>'}, {"quot", '"'}, {"apos", '\''},
    {"nbsp", 0xA0}, {"iexcl", 0xA1}, {"cent", 0xA2}, {"pound", 0xA3},
    {"curren", 0xA4}, {"yen", 0xA5}, {"brvbar", 0xA6}, {"sect", 0xA7},
    {"uml", 0xA8}, {"copy", 0xA9}, {"ordf", 0xAA}, {"laquo", 0xAB},
    {"not", 0xAC}, {"shy", 0xAD}, {"reg", 0xAE}, {"macr", 0xAF},
    {"deg", 0xB0}, {"plusmn", 0xB1}, {"sup2", 0xB2}, {"sup3", 0xB3},
    {"acute", 0xB4}, {"micro", 0xB5}, {"para", 0xB6}, {"middot", 0xB7},
    {"cedil", 0xB8}, {"sup1", 0xB9}, {"ordm", 0xBA}, {"raquo", 0xBB},
    {"frac14", 0xBC}, {"frac12", 0xBD}, {"frac34", 0xBE}, {"iquest", 0xBF},
    {"Agrave", 0xC0}, {"Aacute", 0xC1}, {"Acirc", 0xC2}, {"Atilde", 0xC3},
    {"Auml", 0xC4}, {"Aring", 0xC5}, {"AElig", 0xC6}, {"Ccedil", 0xC7},
    {"Egrave", 0xC8}, {"Eacute", 0xC9}, {"Ecirc", 0xCA}, {"Euml", 0xCB},
    {"Igrave", 0xCC}, {"Iacute", 0xCD}, {"Icirc", 0xCE}, {"Iuml", 0xCF},
    {"ETH", 0xD0}, {"Ntilde", 0xD1}, {"Ograve", 0xD2}, {"Oacute", 0xD3},
    {"Ocirc", 0xD4}, {"Otilde", 0xD5}, {"Ouml", 0xD6}, {"times", 0xD7},
    {"Oslash", 0xD8}, {"Ugrave", 0xD9}, {"Uacute", 0xDA}, {"Ucirc", 0xDB},
    {"Uuml", 0xDC}, {"Yacute", 0xDD}, {"THORN", 0xDE}, {"szlig", 0xDF},
    {"agrave", 0xE0}, {"aacute", 0xE1}, {"acirc", 0xE2}, {"atilde", 0xE3},
    {"auml", 0xE4}, {"aring", 0xE5}, {"aelig", 0xE6}, {"ccedil", 0xE7},
    {"egrave", 0xE8}, {"eacute", 0xE9}, {"ecirc", 0xEA}, {"euml", 0xEB},
    {"igrave", 0xEC}, {"iacute", 0xED}, {"icirc", 0xEE}, {"iuml", 0xEF},
    {"eth", 0xF0}, {"ntilde", 0xF1}, {"ograve", 0xF2}, {"oacute", 0xF3},
    {"ocirc", 0xF4}, {"otilde", 0xF5}, {"ouml", 0xF6}, {"divide", 0xF7},
    {"oslash", 0xF8}, {"ugrave", 0xF9}, {"uacute", 0xFA}, {"ucirc", 0xFB},
    {"uuml", 0xFC}, {"yacute", 0xFD}, {"thorn", 0xFE}, {"yuml", 0xFF},
    {"OElig", 0x152}, {"oelig", 0x153}, {"Scaron", 0x160}, {"scaron", 0x161},
    {"Yuml", 0x178}, {"fnof", 0x192}, {"circ", 0x2C6}, {"tilde", 0x2DC},
    {"ensp", 0x2002}, {"emsp", 0x2003}, {"thinsp", 0x2009}, {"zwnj", 0x200C},
    {"zwj", 0x200D}, {"lrm", 0x200E}, {"rlm", 0x200F}, {"ndash", 0x2013},
    {"mdash", 0x2014}, {"lsquo", 0x2018}, {"rsquo", 0x2019}, {"sbquo", 0x201A},
    {"ldquo", 0x201C}, {"rdquo", 0x201D}, {"bdquo", 0x201E}, {"dagger", 0x2020},
    {"Dagger", 0x2021}, {"bull", 0x2022}, {"hellip", 0x2026}, {"permil", 0x2030},
    {"prime", 0x2032}, {"Prime", 0x2033}, {"lsaquo", 0x2039}, {"rsaquo", 0x203A},
    {"oline", 0x203E}, {"euro", 0x20AC}, {"trade", 0x2122}, {"larr", 0x2190},
    {"uarr", 0x2191}, {"rarr", 0x2192}, {"darr", 0x2193}, {"harr", 0x2194},
    {"minus", 0x2212}, {"lowast", 0x2217}, {"radic", 0x221A}, {"infin", 0x221E},
    {"cap", 0x2229}, {"cup", 0x222A}, {"ne", 0x2260}, {"equiv", 0x2261},
    {"le", 0x2264}, {"ge", 0x2265}, {"loz", 0x25CA}, {"spades", 0x2660},
    {"clubs", 0x2663}, {"hearts", 0x2665}, {"diams", 0x2666},
    {"Alpha", 0x391}, {"Beta", 0x392}, {"Gamma", 0x393}, {"Delta", 0x394},
    {"Epsilon", 0x395}, {"Zeta", 0x396}, {"Eta", 0x397}, {"Theta", 0x398},
    {"Iota", 0x399}, {"Kappa", 0x39A}, {"Lambda", 0x39B}, {"Mu", 0x39C},
    {"Nu", 0x39D}, {"Xi", 0x39E}, {"Omicron", 0x39F}, {"Pi", 0x3A0},
    {"Rho", 0x3A1}, {"Sigma", 0x3A3}, {"Tau", 0x3A4}, {"Upsilon", 0x3A5},
    {"Phi", 0x3A6}, {"Chi", 0x3A7}, {"Psi", 0x3A8}, {"Omega", 0x3A9},
    {"alpha", 0x3B1}, {"beta", 0x3B2}, {"gamma", 0x3B3}, {"delta", 0x3B4},
    {"epsilon", 0x3B5}, {"zeta", 0x3B6}, {"eta", 0x3B7}, {"theta", 0x3B8},
    {"iota", 0x3B9}, {"kappa", 0x3BA}, {"lambda", 0x3BB}, {"mu", 0x3BC},
    {"nu", 0x3BD}, {"xi", 0x3BE}, {"omicron", 0x3BF}, {"pi", 0x3C0},
    {"rho", 0x3C1}, {"sigmaf", 0x3C2}, {"sigma", 0x3C3}, {"tau", 0x3C4},
    {"upsilon", 0x3C5}, {"phi", 0x3C6}, {"chi", 0x3C7}, {"psi", 0x3C8},
    {"omega", 0x3C9},
};

// Browsers map numeric references in 0x80..0x9F through windows-1252.
constexpr char16_t kC1ToCp1252[32] = {
    0x20AC, 0x0081, 0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0x008D, 0x017D, 0x008F,
    0x0090, 0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0x009D, 0x017E, 0x0178,
};

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
           c == ':' || c == '.';
}

class Parser {
public:
    explicit Parser(std::string_view html) : in_(html) {}

    Document run() {
        Document doc;
        doc.root = std::make_unique<Node>();
        doc.root->type = NodeType::Document;
        stack_.push_back(doc.root.get());

        while (pos_ < in_.size()) {
            size_t lt = in_.find('<', pos_);
            if (lt == std::string_view::npos) {
                add_text(in_.substr(pos_));
                break;
            }
            if (lt > pos_) add_text(in_.substr(pos_, lt - pos_));
            pos_ = lt;
            parse_markup();
        }
        return doc;
    }

private:
    Node* current() { return stack_.back(); }

    void add_text(std::string_view raw) {
        if (raw.empty()) return;
        Node* cur = current();
        // merge adjacent text nodes
        if (!cur->children.empty() && cur->children.back()->type == NodeType::Text) {
            cur->children.back()->text += decode_entities(raw);
            return;
        }
        auto node = std::make_unique<Node>();
        node->type = NodeType::Text;
        node->text = decode_entities(raw);
        node->parent = cur;
        cur->children.push_back(std::move(node));
    }

    void add_raw_text(std::string_view raw, bool decode) {
        if (raw.empty()) return;
        auto node = std::make_unique<Node>();
        node->type = NodeType::Text;
        node->text = decode ? decode_entities(raw) : std::string(raw);
        node->parent = current();
        current()->children.push_back(std::move(node));
    }

    void parse_markup() {
        // pos_ points at '<'
        if (in_.compare(pos_, 4, "<!--") == 0) {
            parse_comment();
            return;
        }
        if (pos_ + 1 < in_.size() && (in_[pos_ + 1] == '!' || in_[pos_ + 1] == '?')) {
            size_t end = in_.find('>', pos_);
            pos_ = end == std::string_view::npos ? in_.size() : end + 1;
            return;
        }
        if (pos_ + 1 < in_.size() && in_[pos_ + 1] == '/') {
            parse_close_tag();
            return;
        }
        if (pos_ + 1 >= in_.size() ||
            !std::isalpha(static_cast<unsigned char>(in_[pos_ + 1]))) {
            add_text(in_.substr(pos_, 1));  // stray '<'
            pos_ += 1;
            return;
        }
        parse_open_tag();
    }

    void parse_comment() {
        size_t end = in_.find("-->", pos_ + 4);
        size_t body_end = end == std::string_view::npos ? in_.size() : end;
        auto node = std::make_unique<Node>();
        node->type = NodeType::Comment;
        node->text = std::string(in_.substr(pos_ + 4, body_end - pos_ - 4));
        node->parent = current();
        current()->children.push_back(std::move(node));
        pos_ = end == std::string_view::npos ? in_.size() : end + 3;
    }

    void parse_close_tag() {
        size_t p = pos_ + 2;
        size_t name_start = p;
        while (p < in_.size() && is_name_char(in_[p])) ++p;
        std::string name = to_lower_ascii(in_.substr(name_start, p - name_start));
        size_t end = in_.find('>', p);
        pos_ = end == std::string_view::npos ? in_.size() : end + 1;
        if (name.empty()) return;

        // pop up to the matching open element; ignore unmatched end tags
        for (size_t i = stack_.size(); i-- > 1;) {
            if (stack_[i]->tag == name) {
                stack_.resize(i);
                return;
            }
        }
    }

    void parse_open_tag() {
        size_t p = pos_ + 1;
        size_t name_start = p;
        while (p < in_.size() && is_name_char(in_[p])) ++p;
        std::string tag = to_lower_ascii(in_.substr(name_start, p - name_start));

        auto node = std::make_unique<Node>();
        node->tag = tag;
        bool self_closing = false;

        while (p < in_.size() && in_[p] != '>') {
            if (std::isspace(static_cast<unsigned char>(in_[p]))) {
                ++p;
                continue;
            }
            if (in_[p] == '/') {
                ++p;
                if (p < in_.size() && in_[p] == '>') self_closing = true;
                continue;
            }
            parse_attribute(*node, p);
        }
        pos_ = p == in_.size() ? p : p + 1;

        close_implied(tag);
        Node* parent = current();
        node->parent = parent;
        Node* raw = node.get();
        parent->children.push_back(std::move(node));

        bool is_void = kVoidElements.count(tag) > 0;
        if (!is_void && !self_closing) {
            if (kRawText.count(tag) || kRcdata.count(tag)) {
                stack_.push_back(raw);
                consume_raw_content(tag, kRcdata.count(tag) > 0);
                stack_.pop_back();
            } else {
                stack_.push_back(raw);
            }
        }
    }

    void parse_attribute(Node& node, size_t& p) {
        size_t name_start = p;
        while (p < in_.size() && in_[p] != '=' && in_[p] != '>' && in_[p] != '/' &&
               !std::isspace(static_cast<unsigned char>(in_[p])))
            ++p;
        std::string name = to_lower_ascii(in_.substr(name_start, p - name_start));
        std::string value;
        while (p < in_.size() && std::isspace(static_cast<unsigned char>(in_[p]))) ++p;
        if (p < in_.size() && in_[p] == '=') {
            ++p;
            while (p < in_.size() && std::isspace(static_cast<unsigned char>(in_[p]))) ++p;
            if (p < in_.size() && (in_[p] == '"' || in_[p] == '\'')) {
                char quote = in_[p++];
                size_t vstart = p;
                while (p < in_.size() && in_[p] != quote) ++p;
                value = decode_entities(in_.substr(vstart, p - vstart));
                if (p < in_.size()) ++p;
            } else {
                size_t vstart = p;
                while (p < in_.size() && in_[p] != '>' &&
                       !std::isspace(static_cast<unsigned char>(in_[p])))
                    ++p;
                value = decode_entities(in_.substr(vstart, p - vstart));
            }
        }
        if (!name.empty()) node.attrs.emplace_back(std::move(name), std::move(value));
    }

    // Consume content of a raw-text/RCDATA element up to its end tag.
    void consume_raw_content(std::string_view tag, bool decode) {
        size_t search = pos_;
        while (true) {
            size_t lt = in_.find("</", search);
            if (lt == std::string_view::npos) {
                add_raw_text(in_.substr(pos_), decode);
                pos_ = in_.size();
                return;
            }
            size_t name_end = lt + 2 + tag.size();
            if (name_end <= in_.size() && iequals(in_.substr(lt + 2, tag.size()), tag) &&
                (name_end == in_.size() || in_[name_end] == '>' || in_[name_end] == '/' ||
                 std::isspace(static_cast<unsigned char>(in_[name_end])))) {
                add_raw_text(in_.substr(pos_, lt - pos_), decode);
                size_t gt = in_.find('>', lt);
                pos_ = gt == std::string_view::npos ? in_.size() : gt + 1;
                return;
            }
            search = lt + 2;
        }
    }

    // A few implied-end-tag rules cover the common tag-soup cases.
    void close_implied(std::string_view incoming) {
        auto close_if_current = [&](std::string_view t) {
            if (current()->tag == t) stack_.pop_back();
        };
        if (incoming == "li") close_if_current("li");
        if (incoming == "option") close_if_current("option");
        if (incoming == "tr" || incoming == "td" || incoming == "th") {
            close_if_current("td");
            close_if_current("th");
            if (incoming == "tr") close_if_current("tr");
        }
        if (kClosesP.count(incoming)) {
            static const std::unordered_set<std::string_view> inline_tags = {
                "a", "b", "em", "font", "i", "small", "span", "strong", "u",
            };
            for (size_t i = stack_.size(); i-- > 1;) {
                if (stack_[i]->tag == "p") {
                    stack_.resize(i);
                    break;
                }
                if (!inline_tags.count(stack_[i]->tag)) break;
            }
        }
    }

    std::string_view in_;
    size_t pos_ = 0;
    std::vector<Node*> stack_;
};

} // namespace

std::string decode_entities(std::string_view text) {
    if (text.find('&') == std::string_view::npos) return std::string(text);
    std::string out;
    out.reserve(text.size());
    size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (c != '&') {
            out.push_back(c);
            ++pos;
            continue;
        }
        size_t semi = text.find(';', pos + 1);
        if (semi == std::string_view::npos || semi == pos + 1 || semi - pos > 32) {
            out.push_back('&');
            ++pos;
            continue;
        }
        std::string_view name = text.substr(pos + 1, semi - pos - 1);
        if (name[0] == '#') {
            uint32_t value = 0;
            bool ok = false;
            if (name.size() > 1 && (name[1] == 'x' || name[1] == 'X')) {
                auto [p, ec] = std::from_chars(name.data() + 2, name.data() + name.size(),
                                               value, 16);
                ok = ec == std::errc() && p == name.data() + name.size();
            } else {
                auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(),
                                               value, 10);
                ok = ec == std::errc() && p == name.data() + name.size();
            }
            if (ok) {
                char32_t cp = value;
                if (cp >= 0x80 && cp <= 0x9F) cp = kC1ToCp1252[cp - 0x80];
                if (cp == 0) cp = uni::kReplacement;
                uni::append_utf8(out, cp);
                pos = semi + 1;
                continue;
            }
        } else {
            auto it = kNamedEntities.find(name);
            if (it != kNamedEntities.end()) {
                uni::append_utf8(out, it->second);
                pos = semi + 1;
                continue;
            }
        }
        out.push_back('&');
        ++pos;
    }
    return out;
}

const std::string* Node::attr(std::string_view name) const {
    for (const auto& [k, v] : attrs)
        if (k == name) return &v;
    return nullptr;
}

bool Node::has_attr(std::string_view name) const { return attr(name) != nullptr; }

Document parse(std::string_view html) { return Parser(html).run(); }

std::string node_path(const Node& node) {
    std::vector<const Node*> chain;
    for (const Node* n = &node; n != nullptr && n->type == NodeType::Element; n = n->parent)
        chain.push_back(n);
    std::string path;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const Node* n = *it;
        size_t index = 0;
        if (n->parent) {
            for (const auto& sib : n->parent->children) {
                if (sib.get() == n) break;
                if (sib->type == NodeType::Element && sib->tag == n->tag) ++index;
            }
        }
        path += '/';
        path += n->tag;
        path += '[';
        path += std::to_string(index);
        path += ']';
    }
    return path;
}

const Node* resolve_path(const Document& doc, std::string_view path) {
    const Node* cur = doc.root.get();
    size_t pos = 0;
    while (pos < path.size()) {
        if (path[pos] != '/') return nullptr;
        ++pos;
        size_t bracket = path.find('[', pos);
        size_t close = path.find(']', pos);
        if (bracket == std::string_view::npos || close == std::string_view::npos)
            return nullptr;
        std::string_view tag = path.substr(pos, bracket - pos);
        size_t index = 0;
        auto [p, ec] = std::from_chars(path.data() + bracket + 1, path.data() + close, index);
        if (ec != std::errc()) return nullptr;
        (void)p;
        const Node* next = nullptr;
        size_t seen = 0;
        for (const auto& child : cur->children) {
            if (child->type == NodeType::Element && child->tag == tag) {
                if (seen == index) {
                    next = child.get();
                    break;
                }
                ++seen;
            }
        }
        if (!next) return nullptr;
        cur = next;
        pos = close + 1;
    }
    return cur == doc.root.get() ? nullptr : cur;
}

std::optional<std::string> declared_language(const Document& doc) {
    std::optional<std::string> result;
    doc.for_each_element([&](const Node& n) {
        if (result) return;
        if (n.tag == "html") {
            if (const std::string* lang = n.attr("lang")) result = *lang;
        }
    });
    return result;
}

} // namespace kizuki::dom
