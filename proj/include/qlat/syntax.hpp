#pragma once

// Text syntax shared by the CLI and the C API.
//
//   algebra  := ["-"] term { ("+" | "-") term }
//   term     := [scalar ["*"]] monomial | scalar
//   monomial := "V(" element "," element ")"
//   scalar   := rational ["i"] | "i" | "(" rational ("+"|"-") rational "i" ")"
//
// A bare scalar c stands for c V(e,e). Element syntax is instance-specific.

#include <string_view>
#include <vector>

#include "qlat/algebra.hpp"

namespace qlat {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space();
  bool consume(char c);
  void expect(char c);
  void expect_end();
  [[noreturn]] void error(const std::string& message) const;

  /// Text up to the next `stop` character at bracket depth zero.
  std::string_view take_until(char stop);

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Monomial parse_monomial_at(const Monoid& m, Cursor& c);
Scalar parse_scalar(std::string_view text);
AlgebraElement parse_algebra(const MonoidPtr& m, std::string_view text);

/// Comma-separated list of elements, optionally wrapped in braces.
std::vector<Element> parse_element_list(const Monoid& m, std::string_view text);

}  // namespace qlat
