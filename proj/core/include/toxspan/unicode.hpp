#pragma once

#include <string>
#include <string_view>

namespace toxspan {

// All corpus text is handled as sequences of unicode scalar values
// (std::u32string); span offsets index characters, never bytes. UTF-8 appears
// only at file boundaries.

// Throws validation_error on malformed UTF-8, naming the byte position.
std::u32string utf8_decode(std::string_view bytes);

std::string utf8_encode(std::u32string_view text);

inline char32_t lower_ascii(char32_t c) {
  return (c >= U'A' && c <= U'Z') ? c + 32 : c;
}

std::u32string lower_ascii(std::u32string_view s);

inline bool is_ascii_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

// ASCII whitespace plus the common unicode space separators.
bool is_space_char(char32_t c);

// Characters that form the body of a token: ASCII alphanumerics and any
// non-space character outside ASCII. Everything else is punctuation for the
// tokenizer's peeling rule.
bool is_word_char(char32_t c);

inline bool is_punct_char(char32_t c) {
  return !is_word_char(c) && !is_space_char(c);
}

} // namespace toxspan
