#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "yangcheck/rational_function.hpp"

namespace yc {

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

// Syntax tree of the expression grammar
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' '-'? integer)?
//   atom  := integer | identifier | '(' expr ')'
struct Expr {
  enum class Kind { integer, identifier, add, sub, mul, div, neg, pow };
  Kind kind = Kind::integer;
  std::string text;  // digits or identifier
  long exponent = 0;
  size_t position = 0;
  std::vector<std::unique_ptr<Expr>> args;
};

std::unique_ptr<Expr> parse_expression(std::string_view input);

// Evaluates with identifiers resolved by Var::parse; unknown names are errors.
RationalFunction evaluate_rational(const Expr& e);
RationalFunction parse_rational(std::string_view input);
Polynomial parse_polynomial(std::string_view input);

}  // namespace yc
