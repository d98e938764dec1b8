#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace kizuki::enc {

/// Decodes an HTML byte stream to UTF-8 using the fallback chain:
/// declared charset (HTTP header) -> <meta charset> sniffed from the first
/// 1024 bytes -> lossy UTF-8. The terminal stage replaces invalid sequences
/// with U+FFFD, so decoding always produces a string.
std::string decode_html(std::string_view bytes, std::string_view header_charset = {});

/// Charset name from a `<meta charset=...>` or http-equiv declaration in
/// the first 1024 bytes, if present.
std::optional<std::string> sniff_meta_charset(std::string_view bytes);

/// Charset parameter of a Content-Type header value, if any.
std::optional<std::string> charset_from_content_type(std::string_view content_type);

/// True when the (normalized) charset name has a decoder here.
bool known_charset(std::string_view name);

} // namespace kizuki::enc
