#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace glossgraph {

// Small ASCII-only text helpers shared across modules. Non-ASCII bytes are
// passed through unchanged; offsets everywhere in this codebase are byte
// offsets into UTF-8 strings.

std::string ascii_lower(std::string_view s);

inline bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || static_cast<unsigned char>(c) >= 0x80;
}

/// Lowercased word tokens, split on any non-alphanumeric byte.
std::vector<std::string> word_tokens(std::string_view text);

/// Crude singular form: strips one trailing 's' from words of length >= 4
/// unless they end in "ss". Used only for matching, never for display.
std::string singular(std::string_view word);

/// Case-folded equality, tolerant of singular/plural variation.
bool norm_eq(std::string_view a, std::string_view b);

std::string capitalize_first(std::string_view s);

/// "an" before a vowel-initial word, else "a".
std::string_view indefinite_article(std::string_view noun);

std::string_view trim(std::string_view s);

std::vector<std::string> split_ws(std::string_view s);

}  // namespace glossgraph
