#include "glossgraph/text.hpp"

namespace glossgraph {

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> word_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (is_word_char(c)) {
      current.push_back(c);
    } else if (!current.empty()) {
      tokens.push_back(ascii_lower(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(ascii_lower(current));
  return tokens;
}

std::string singular(std::string_view word) {
  std::string w = ascii_lower(word);
  if (w.size() >= 4 && w.back() == 's' && w[w.size() - 2] != 's') {
    w.pop_back();
  }
  return w;
}

bool norm_eq(std::string_view a, std::string_view b) {
  std::string la = ascii_lower(a);
  std::string lb = ascii_lower(b);
  return la == lb || singular(la) == singular(lb);
}

std::string capitalize_first(std::string_view s) {
  std::string out(s);
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') {
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
  }
  return out;
}

std::string_view indefinite_article(std::string_view noun) {
  if (!noun.empty()) {
    char c = noun[0];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return "an";
  }
  return "a";
}

std::string_view trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      if (!current.empty()) {
        parts.push_back(current);
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) parts.push_back(current);
  return parts;
}

}  // namespace glossgraph
