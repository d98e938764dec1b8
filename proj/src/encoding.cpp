#include "kizuki/encoding.hpp"

#include "kizuki/unicode.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>

namespace kizuki::enc {

namespace {

struct SingleByteCharset {
    const char* name;
    const char16_t* high;  // mappings for 0x80..0xFF
};

#include "generated/charset_tables.inc"

std::string normalize_charset(std::string_view name) {
    std::string out;
    for (char c : name) {
        if (c >= 'A' && c <= 'Z') c += 32;
        if (c == '_' || c == ' ') c = '-';
        if (c == '"' || c == '\'') continue;
        out.push_back(c);
    }
    // common aliases
    if (out == "utf8") return "utf-8";
    if (out == "latin1" || out == "latin-1" || out == "l1" || out == "iso8859-1" ||
        out == "iso-ir-100" || out == "cp819")
        return "iso-8859-1";
    if (out == "cp874" || out == "iso-8859-11" || out == "iso8859-11") return "windows-874";
    if (out.rfind("cp12", 0) == 0 && out.size() == 6) return "windows-1" + out.substr(2);
    if (out.rfind("iso8859-", 0) == 0) return "iso-8859-" + out.substr(8);
    if (out == "koi8" || out == "koi8r") return "koi8-r";
    if (out == "ucs-2" || out == "utf16") return "utf-16";
    return out;
}

const char16_t* single_byte_table(std::string_view normalized) {
    // iso-8859-1 maps the high half to itself
    static char16_t identity[128];
    static bool init = [] {
        for (int i = 0; i < 128; ++i) identity[i] = static_cast<char16_t>(0x80 + i);
        return true;
    }();
    (void)init;
    if (normalized == "iso-8859-1" || normalized == "us-ascii") return identity;
    for (const auto& cs : kSingleByteCharsets)
        if (normalized == cs.name) return cs.high;
    return nullptr;
}

std::string decode_single_byte(std::string_view bytes, const char16_t* high) {
    std::string out;
    out.reserve(bytes.size());
    for (unsigned char b : bytes) {
        if (b < 0x80)
            out.push_back(static_cast<char>(b));
        else
            uni::append_utf8(out, high[b - 0x80]);
    }
    return out;
}

std::string decode_utf16(std::string_view bytes, bool big_endian) {
    std::string out;
    out.reserve(bytes.size() / 2);
    size_t n = bytes.size() & ~size_t{1};
    size_t i = 0;
    auto read = [&](size_t at) -> char32_t {
        unsigned char a = bytes[at], b = bytes[at + 1];
        return big_endian ? (a << 8 | b) : (b << 8 | a);
    };
    while (i < n) {
        char32_t unit = read(i);
        i += 2;
        if (unit >= 0xD800 && unit <= 0xDBFF && i < n) {
            char32_t low = read(i);
            if (low >= 0xDC00 && low <= 0xDFFF) {
                i += 2;
                uni::append_utf8(out, 0x10000 + ((unit - 0xD800) << 10) + (low - 0xDC00));
                continue;
            }
        }
        if (unit >= 0xD800 && unit <= 0xDFFF) unit = uni::kReplacement;
        uni::append_utf8(out, unit);
    }
    return out;
}

std::string decode_utf8_lossy(std::string_view bytes) {
    if (uni::valid_utf8(bytes)) return std::string(bytes);
    std::string out;
    out.reserve(bytes.size());
    uni::for_each_codepoint(bytes, [&](char32_t cp) { uni::append_utf8(out, cp); });
    return out;
}

std::optional<std::string> try_decode(std::string_view bytes, std::string_view charset) {
    std::string norm = normalize_charset(charset);
    if (norm == "utf-8") return decode_utf8_lossy(bytes);
    if (norm == "utf-16" || norm == "utf-16le") return decode_utf16(bytes, false);
    if (norm == "utf-16be") return decode_utf16(bytes, true);
    if (const char16_t* high = single_byte_table(norm)) return decode_single_byte(bytes, high);
    return std::nullopt;  // unknown charset; caller falls through the chain
}

} // namespace

bool known_charset(std::string_view name) {
    std::string norm = normalize_charset(name);
    return norm == "utf-8" || norm == "utf-16" || norm == "utf-16le" ||
           norm == "utf-16be" || single_byte_table(norm) != nullptr;
}

std::optional<std::string> charset_from_content_type(std::string_view content_type) {
    std::string lower;
    lower.reserve(content_type.size());
    for (char c : content_type) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    size_t pos = lower.find("charset=");
    if (pos == std::string::npos) return std::nullopt;
    pos += 8;
    size_t end = lower.find_first_of("; \t", pos);
    std::string value = lower.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    value.erase(std::remove(value.begin(), value.end(), '"'), value.end());
    value.erase(std::remove(value.begin(), value.end(), '\''), value.end());
    if (value.empty()) return std::nullopt;
    return value;
}

std::optional<std::string> sniff_meta_charset(std::string_view bytes) {
    std::string_view head = bytes.substr(0, std::min<size_t>(bytes.size(), 1024));
    std::string lower;
    lower.reserve(head.size());
    for (char c : head) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

    size_t pos = 0;
    while ((pos = lower.find("charset", pos)) != std::string::npos) {
        size_t p = pos + 7;
        while (p < lower.size() && std::isspace(static_cast<unsigned char>(lower[p]))) ++p;
        if (p >= lower.size() || lower[p] != '=') {
            pos += 7;
            continue;
        }
        ++p;
        while (p < lower.size() && (std::isspace(static_cast<unsigned char>(lower[p])) ||
                                    lower[p] == '"' || lower[p] == '\''))
            ++p;
        size_t start = p;
        while (p < lower.size() && (std::isalnum(static_cast<unsigned char>(lower[p])) ||
                                    lower[p] == '-' || lower[p] == '_'))
            ++p;
        if (p > start) return lower.substr(start, p - start);
        pos += 7;
    }
    return std::nullopt;
}

std::string decode_html(std::string_view bytes, std::string_view header_charset) {
    // byte-order marks take precedence
    if (bytes.size() >= 3 && std::memcmp(bytes.data(), "\xEF\xBB\xBF", 3) == 0)
        return decode_utf8_lossy(bytes.substr(3));
    if (bytes.size() >= 2 && std::memcmp(bytes.data(), "\xFF\xFE", 2) == 0)
        return decode_utf16(bytes.substr(2), false);
    if (bytes.size() >= 2 && std::memcmp(bytes.data(), "\xFE\xFF", 2) == 0)
        return decode_utf16(bytes.substr(2), true);

    if (!header_charset.empty()) {
        if (auto decoded = try_decode(bytes, header_charset)) return *decoded;
    }
    if (auto meta = sniff_meta_charset(bytes)) {
        if (auto decoded = try_decode(bytes, *meta)) return *decoded;
    }
    return decode_utf8_lossy(bytes);
}

} // namespace kizuki::enc
