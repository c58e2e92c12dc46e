#pragma once

// Tokenizer shared by the text formats: whitespace-separated words,
// `#` starts a comment running to end of line.

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "twyb/error.hpp"
#include "twyb/modular.hpp"

namespace twyb::text {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    Token t{std::string(), line, col};
    while (i < src.size() && src[i] != ' ' && src[i] != '\t' && src[i] != '\r' && src[i] != '\n' &&
           src[i] != '#') {
      t.text.push_back(src[i]);
      ++i;
      ++col;
    }
    out.push_back(std::move(t));
  }
  return out;
}

inline i64 to_integer(const Token& t) {
  i64 v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e) throw ParseError("expected an integer, got '" + t.text + "'", t.line, t.column);
  return v;
}

/// Cursor over a token list with positioned diagnostics.
class Cursor {
 public:
  explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const noexcept { return pos_ >= tokens_.size(); }
  const Token& peek() const {
    if (done()) throw ParseError("unexpected end of input", last_line(), 1);
    return tokens_[pos_];
  }
  const Token& next() {
    const Token& t = peek();
    ++pos_;
    return t;
  }
  i64 next_integer() { return to_integer(next()); }
  void expect(std::string_view word) {
    const Token& t = next();
    if (t.text != word)
      throw ParseError("expected '" + std::string(word) + "', got '" + t.text + "'", t.line, t.column);
  }

 private:
  std::size_t last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace twyb::text
