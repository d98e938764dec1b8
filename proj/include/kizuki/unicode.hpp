#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace kizuki::uni {

inline constexpr char32_t kReplacement = 0xFFFD;

/// Decodes the UTF-8 sequence starting at text[pos]. Invalid sequences
/// yield U+FFFD and advance by one byte, so iteration always terminates.
char32_t decode_utf8(std::string_view text, size_t& pos);

void append_utf8(std::string& out, char32_t cp);

/// Calls fn(cp) for every Unicode scalar value in text.
template <typename Fn>
void for_each_codepoint(std::string_view text, Fn&& fn) {
    size_t pos = 0;
    while (pos < text.size()) fn(decode_utf8(text, pos));
}

// General-category classes, from the frozen Unicode tables in src/generated/.
bool is_letter(char32_t cp);  // L*
bool is_mark(char32_t cp);    // M*

/// Latin-script letters: Basic Latin, Latin-1 and the Latin Extended blocks.
bool is_latin_letter(char32_t cp);

/// Han, Hiragana, Katakana or Hangul letter.
bool is_cjk_letter(char32_t cp);

/// Letter of a script written without inter-word spaces (CJK plus
/// Thai/Lao/Khmer/Myanmar). Whitespace tokenization is meaningless there.
bool is_spaceless_script_letter(char32_t cp);

/// Pictographic/emoji codepoint, including ZWJ, variation selectors,
/// keycap combiner and regional indicators.
bool is_emoji(char32_t cp);

char32_t fold_char(char32_t cp);

/// Lowercase fold of the whole string (simple 1:1 folding).
std::string fold(std::string_view text);

/// Number of codepoints in the string.
size_t length(std::string_view text);

bool is_space(char32_t cp);

/// Trims Unicode whitespace and collapses internal whitespace runs to a
/// single ASCII space.
std::string normalize_whitespace(std::string_view text);

std::string trim(std::string_view text);

/// Validates a byte string as UTF-8; true when no replacement is needed.
bool valid_utf8(std::string_view bytes);

} // namespace kizuki::uni
