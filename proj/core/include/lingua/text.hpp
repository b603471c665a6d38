#pragma once

#include <string>
#include <string_view>

namespace lingua {

/// Decodes UTF-8 into code points. Malformed sequences decode to U+FFFD,
/// one replacement per offending byte, so decoding never fails.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(char32_t cp);
std::string encode_utf8(std::u32string_view cps);

/// Lowercase mapping for ASCII, Latin-1 Supplement and Latin Extended-A.
/// Code points without a mapping in those blocks pass through unchanged.
char32_t to_lower_cp(char32_t cp);

/// Word separators: space, tab, carriage return, newline.
constexpr bool is_word_separator(char32_t cp) {
    return cp == U' ' || cp == U'\t' || cp == U'\r' || cp == U'\n';
}

}  // namespace lingua
