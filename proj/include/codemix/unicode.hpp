#ifndef CODEMIX_UNICODE_HPP
#define CODEMIX_UNICODE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace codemix::uni {

// Decodes UTF-8 into code points. Invalid byte sequences become U+FFFD,
// one replacement per rejected byte; decoding never throws.
std::vector<char32_t> decode_utf8(std::string_view s);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(const std::vector<char32_t>& cps);
std::string encode_utf8(const char32_t* cps, std::size_t n);

std::size_t count_codepoints(std::string_view s);

bool is_space(char32_t cp);
bool is_devanagari_letter(char32_t cp);  // letters and dependent signs, not danda/digits
bool is_latin_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_word_char(char32_t cp);  // letters of any script, digits, combining marks
bool is_format_char(char32_t cp);  // ZWJ/ZWNJ and other invisible format controls
bool is_latin_upper(char32_t cp);

char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view s);

// Canonical composition (normalization form C).
std::string nfc(std::string_view s);

}  // namespace codemix::uni

#endif  // CODEMIX_UNICODE_HPP
