#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "aft/errors.hpp"

namespace aft::detail {

/// Character cursor shared by the input grammars: tracks line/column,
/// treats `%` to end of line as whitespace.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  /// Skips whitespace and comments; true if anything was skipped.
  bool skip_space() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
    return pos_ != start;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  /// Consumes `s` if it is next; records the token end.
  bool accept(std::string_view s) {
    if (!starts_with(s)) return false;
    for (std::size_t i = 0; i < s.size(); ++i) advance();
    mark_token_end();
    return true;
  }

  void expect(std::string_view s, const std::string& what) {
    skip_space();
    if (!accept(s)) fail("expected " + what);
  }

  /// Reads [first][A-Za-z0-9_]* where `first` decides the leading character.
  template <typename First>
  std::string identifier(First&& first) {
    std::string out;
    if (at_end() || !first(peek())) return out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      out += peek();
      advance();
    }
    mark_token_end();
    return out;
  }

  int line() const { return line_; }
  int column() const { return column_; }

  /// Reports at the current character, or just after the last token when
  /// the input ended.
  [[noreturn]] void fail(const std::string& message) const {
    if (at_end()) throw ParseError(message + ", found end of input", end_line_, end_column_);
    throw ParseError(message + ", found '" + std::string(1, peek()) + "'", line_, column_);
  }

  [[noreturn]] void fail_at(const std::string& message, int line, int column) const {
    throw ParseError(message, line, column);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void mark_token_end() {
    end_line_ = line_;
    end_column_ = column_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  int end_line_ = 1;
  int end_column_ = 1;
};

}  // namespace aft::detail
