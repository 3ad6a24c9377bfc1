#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "poisson_ore/poly.hpp"

namespace poisson_ore {

/// Syntax tree for polynomial expressions.
struct ExprAst {
  enum class Kind { number, imaginary_unit, variable, add, sub, mul, neg, pow };

  Kind kind;
  GaussRat value;           // number
  std::string name;         // variable
  unsigned exponent = 0;    // pow
  std::size_t position = 0;  // offset in the source
  std::vector<std::unique_ptr<ExprAst>> children;
};

/// Grammar (whitespace ignored, no implicit multiplication):
///
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | '+' unary | power
///   power  := atom ('^' INTEGER)?
///   atom   := INTEGER ('/' INTEGER)? | 'i' | VARIABLE | '(' expr ')'
///
/// Throws ParseError with the offending offset.
std::unique_ptr<ExprAst> parse_expr(std::string_view src);

/// Lower a tree into `ring`; throws UnknownVariable.
Poly lower(const ExprAst& ast, const Ring& ring);

/// parse_expr + lower. Variables must belong to `ring`.
Poly parse_poly(std::string_view src, const Ring& ring = ring_t());

/// Comma-separated list of expressions (commas inside parentheses are not
/// expected in this grammar). Empty input gives an empty list.
std::vector<Poly> parse_poly_list(std::string_view src, const Ring& ring);

}  // namespace poisson_ore
