#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gamma_ideal/gamma_poly.hpp"
#include "gamma_ideal/gaussian_rational.hpp"

namespace gamma_ideal {

/// Syntax tree of a polynomial expression.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('+' | '-') unary | factor
///   factor := atom ('^' uint)?
///   atom   := number | number 'i' | 'i' | 's' | 'G' '(' uint ')'
///           | '(' expr ')' | '(' expr ')' 'i'
///
/// A trailing `i` glued to a number or closing parenthesis multiplies by the
/// imaginary unit, so "(3/2)i" is 3i/2. Division is only allowed by
/// expressions that lower to a nonzero constant.
struct ExprAst {
  enum class Kind { Literal, Variable, Gamma, Negate, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Literal;
  GaussianRational literal;   // Literal
  std::size_t index = 0;      // Gamma
  unsigned exponent = 0;      // Pow
  std::size_t position = 0;   // offset in the source text
  std::vector<ExprAst> children;
};

/// Throws ParseError on malformed text or a G index >= arity.
ExprAst parse_poly(std::string_view text, std::size_t arity);

/// Lowers to canonical form; ParseError on division by a non-constant or zero.
GammaPoly lower(const ExprAst& ast, std::size_t arity);

/// parse_poly followed by lower.
GammaPoly parse_gamma_poly(std::string_view text, std::size_t arity);

/// Fully parenthesised rendering of the tree.
std::string to_string(const ExprAst& ast);

/// A constant expression (no `s`, no `G`), e.g. "(1+2i)/3".
GaussianRational parse_scalar(std::string_view text);

/// Comma-separated constants, e.g. "0, 1, 2, 1/2, (1+2i)/3".
std::vector<GaussianRational> parse_shift_list(std::string_view text);

/// Floating-point complex literal: "2.5", "-1e-3", "0.5+2i", "-i", "3.1i".
std::complex<double> parse_complex(std::string_view text);

}  // namespace gamma_ideal
