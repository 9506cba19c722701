#pragma once

#include "gammaseq/abelian/presentation.hpp"
#include "gammaseq/errors.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace gammaseq {

namespace detail {

class GroupExprParser {
 public:
  explicit GroupExprParser(std::string_view text) : text_(text) {}

  std::vector<Integer> parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty group expression", pos_);
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      if (!at_end()) throw ParseError("unexpected '" + std::string(1, peek()) + "' after 0", pos_);
      return {};
    }
    std::vector<Integer> orders;
    term(orders);
    for (skip_ws(); !at_end(); skip_ws()) {
      if (peek() != '+') throw ParseError("expected '+', got '" + std::string(1, peek()) + "'", pos_);
      ++pos_;
      skip_ws();
      term(orders);
    }
    return orders;
  }

 private:
  static constexpr std::size_t max_rank = 4096;

  void term(std::vector<Integer>& orders) {
    if (at_end()) throw ParseError("expected a term, got end of input", pos_);
    if (peek() != 'Z') throw ParseError("expected 'Z', got '" + std::string(1, peek()) + "'", pos_);
    ++pos_;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      Integer r = number();
      if (r < 1) throw ParseError("rank must be at least 1", at);
      if (r > max_rank) throw ParseError("rank above " + std::to_string(max_rank), at);
      orders.insert(orders.end(), static_cast<std::size_t>(r), Integer(0));
    } else if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      Integer d = number();
      if (d < 2) throw ParseError("cyclic order must be at least 2", at);
      orders.push_back(d);
    } else {
      orders.push_back(0);
    }
  }

  Integer number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) {
      throw ParseError(at_end() ? std::string("expected a number, got end of input")
                                : "expected a number, got '" + std::string(1, peek()) + "'",
                       start);
    }
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// The orders of the terms as written (0 for Z), before canonicalization.
inline std::vector<Integer> parse_group_terms(std::string_view text) { return detail::GroupExprParser(text).parse(); }

/// Parses `term (+ term)*` with term one of Z, Z^r (r >= 1), Z/d (d >= 2),
/// or the single token 0 for the trivial group; whitespace is ignored.
/// The result is in invariant-factor form, so "Z/6 + Z/4" gives Z/2 + Z/12.
/// Throws ParseError with the byte offset of the failure.
inline FgAbGroup parse_group(std::string_view text) {
  const std::vector<Integer> orders = parse_group_terms(text);
  if (orders.empty()) return FgAbGroup();
  return canonicalize(diagonal(orders));
}

}  // namespace gammaseq
