#include "kizuki/unicode.hpp"

#include <algorithm>
#include <iterator>

namespace kizuki::uni {

namespace {

struct CodepointRange {
    char32_t lo;
    char32_t hi;
};

struct FoldPair {
    char32_t from;
    char32_t to;
};

#include "generated/unicode_letters.inc"
#include "generated/unicode_marks.inc"
#include "generated/unicode_fold.inc"

template <size_t N>
bool in_ranges(const CodepointRange (&ranges)[N], char32_t cp) {
    auto it = std::upper_bound(std::begin(ranges), std::end(ranges), cp,
                               [](char32_t v, const CodepointRange& r) { return v < r.lo; });
    return it != std::begin(ranges) && cp <= std::prev(it)->hi;
}

// Latin letter ranges: Basic Latin, Latin-1, Extended-A/B, IPA-adjacent
// Latin, Extended Additional, Extended-C/D/E, fullwidth forms.
constexpr CodepointRange kLatinLetters[] = {
    {0x0041, 0x005A}, {0x0061, 0x007A}, {0x00AA, 0x00AA}, {0x00BA, 0x00BA},
    {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x02B8}, {0x1E00, 0x1EFF},
    {0x2C60, 0x2C7F}, {0xA720, 0xA7FF}, {0xAB30, 0xAB6F}, {0xFB00, 0xFB06},
    {0xFF21, 0xFF3A}, {0xFF41, 0xFF5A},
};

constexpr CodepointRange kCjkLetters[] = {
    {0x1100, 0x11FF},   // Hangul jamo
    {0x3005, 0x3007},   // ideographic iteration/closing marks counted as Han
    {0x3041, 0x3096}, {0x309D, 0x309F},                    // Hiragana
    {0x30A1, 0x30FA}, {0x30FC, 0x30FF}, {0x31F0, 0x31FF},  // Katakana
    {0x3105, 0x312F}, {0x31A0, 0x31BF},                    // Bopomofo
    {0x3131, 0x318E},                                      // Hangul compat jamo
    {0x3400, 0x4DBF}, {0x4E00, 0x9FFF},                    // Han
    {0xA960, 0xA97C}, {0xAC00, 0xD7A3}, {0xD7B0, 0xD7FB},  // Hangul
    {0xF900, 0xFAD9},                                      // Han compat
    {0xFF66, 0xFF9D},                                      // halfwidth Katakana
    {0xFFA0, 0xFFDC},                                      // halfwidth Hangul
    {0x20000, 0x2A6DF}, {0x2A700, 0x2EBE0}, {0x2F800, 0x2FA1D},
    {0x30000, 0x3134A},
};

constexpr CodepointRange kSpacelessNonCjk[] = {
    {0x0E01, 0x0E5B},   // Thai
    {0x0E81, 0x0EDF},   // Lao
    {0x1000, 0x109F},   // Myanmar
    {0x1780, 0x17DD},   // Khmer
};

// Pictographic blocks plus the emoji-sequence plumbing codepoints. A
// pragmatic stand-in for the Extended_Pictographic property.
constexpr CodepointRange kEmoji[] = {
    {0x200D, 0x200D},   // ZWJ
    {0x20E3, 0x20E3},   // keycap combiner
    {0x231A, 0x231B}, {0x23E9, 0x23F3}, {0x23F8, 0x23FA},
    {0x25AA, 0x25AB}, {0x25B6, 0x25B6}, {0x25C0, 0x25C0}, {0x25FB, 0x25FE},
    {0x2600, 0x27BF},
    {0x2934, 0x2935}, {0x2B05, 0x2B07}, {0x2B1B, 0x2B1C},
    {0x2B50, 0x2B50}, {0x2B55, 0x2B55},
    {0x3030, 0x3030}, {0x303D, 0x303D}, {0x3297, 0x3297}, {0x3299, 0x3299},
    {0xFE0E, 0xFE0F},   // variation selectors
    {0x1F000, 0x1F02F}, {0x1F0A0, 0x1F0FF}, {0x1F170, 0x1F251},
    {0x1F300, 0x1F5FF}, {0x1F600, 0x1F64F}, {0x1F680, 0x1F6FF},
    {0x1F780, 0x1F7FF}, {0x1F900, 0x1F9FF}, {0x1FA00, 0x1FA6F},
    {0x1FA70, 0x1FAFF},
};

} // namespace

char32_t decode_utf8(std::string_view text, size_t& pos) {
    const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
    unsigned char b0 = bytes[pos];
    if (b0 < 0x80) {
        pos += 1;
        return b0;
    }
    size_t len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        pos += 1;
        return kReplacement;
    }
    if (pos + len > text.size()) {
        pos += 1;
        return kReplacement;
    }
    for (size_t i = 1; i < len; ++i) {
        unsigned char b = bytes[pos + i];
        if ((b & 0xC0) != 0x80) {
            pos += 1;
            return kReplacement;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    // reject overlong forms, surrogates and out-of-range values
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        pos += 1;
        return kReplacement;
    }
    pos += len;
    return cp;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = kReplacement;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool is_letter(char32_t cp) { return in_ranges(kLetterRanges, cp); }
bool is_mark(char32_t cp) { return in_ranges(kMarkRanges, cp); }
bool is_latin_letter(char32_t cp) { return in_ranges(kLatinLetters, cp) && is_letter(cp); }
bool is_cjk_letter(char32_t cp) { return in_ranges(kCjkLetters, cp) && is_letter(cp); }

bool is_spaceless_script_letter(char32_t cp) {
    if (is_cjk_letter(cp)) return true;
    return in_ranges(kSpacelessNonCjk, cp) && is_letter(cp);
}

bool is_emoji(char32_t cp) { return in_ranges(kEmoji, cp); }

char32_t fold_char(char32_t cp) {
    auto it = std::lower_bound(std::begin(kFoldPairs), std::end(kFoldPairs), cp,
                               [](const FoldPair& p, char32_t v) { return p.from < v; });
    if (it != std::end(kFoldPairs) && it->from == cp) return it->to;
    return cp;
}

std::string fold(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for_each_codepoint(text, [&](char32_t cp) { append_utf8(out, fold_char(cp)); });
    return out;
}

size_t length(std::string_view text) {
    size_t n = 0;
    for_each_codepoint(text, [&](char32_t) { ++n; });
    return n;
}

bool is_space(char32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
        case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
        case 0x202F: case 0x205F: case 0x3000: case 0xFEFF:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

std::string normalize_whitespace(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    bool seen_content = false;
    for_each_codepoint(text, [&](char32_t cp) {
        if (is_space(cp)) {
            pending_space = seen_content;
            return;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        seen_content = true;
        append_utf8(out, cp);
    });
    return out;
}

std::string trim(std::string_view text) {
    size_t pos = 0, start = 0;
    size_t end_pos = 0;
    bool in_content = false;
    size_t last_content_end = 0;
    while (pos < text.size()) {
        size_t at = pos;
        char32_t cp = decode_utf8(text, pos);
        if (!is_space(cp)) {
            if (!in_content) {
                start = at;
                in_content = true;
            }
            last_content_end = pos;
        }
        end_pos = pos;
    }
    (void)end_pos;
    if (!in_content) return {};
    return std::string(text.substr(start, last_content_end - start));
}

bool valid_utf8(std::string_view bytes) {
    size_t pos = 0;
    while (pos < bytes.size()) {
        size_t at = pos;
        char32_t cp = decode_utf8(bytes, pos);
        if (cp == kReplacement && bytes[at] != '\xEF') return false;
        if (cp == kReplacement) {
            // could be a literal U+FFFD; re-check the raw bytes
            if (pos - at != 3) return false;
        }
    }
    return true;
}

} // namespace kizuki::uni
