#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "snc/ast.hpp"

namespace snc {

/// Syntax error or out-of-range index, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses one expression over S_n. Bare `x`/`y` are accepted when n = 1.
Ast parse_expression(std::string_view text, int n);

}  // namespace snc
