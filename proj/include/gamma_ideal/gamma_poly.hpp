#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>

#include "gamma_ideal/monomial.hpp"
#include "gamma_ideal/uni_poly.hpp"

namespace gamma_ideal {

/// Polynomial sum_i Phi_i(X) * Y^i in X and Y_0..Y_{n-1}, stored sparsely as
/// a map from monomial to its (nonzero) coefficient polynomial in X.
///
/// Evaluating at X = s, Y_k = Gamma(s + a_k) gives the analytic expression
/// the rest of the library reasons about.
class GammaPoly {
 public:
  using TermMap = std::map<Monomial, UniPoly>;

  explicit GammaPoly(std::size_t arity = 0) : arity_(arity) {}

  static GammaPoly constant(std::size_t arity, const GaussianRational& c);
  /// The polynomial X.
  static GammaPoly x(std::size_t arity);
  /// The polynomial Y_index.
  static GammaPoly gamma(std::size_t arity, std::size_t index);
  static GammaPoly term(const Monomial& m, const UniPoly& coefficient);

  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Number of stored monomials.
  std::size_t size() const noexcept { return terms_.size(); }
  /// Ascending lex order; rbegin() is the highest term.
  const TermMap& terms() const noexcept { return terms_; }
  UniPoly coefficient(const Monomial& m) const;

  /// Adds coefficient * m in place, dropping the entry if it cancels.
  void add_term(const Monomial& m, const UniPoly& coefficient);

  GammaPoly operator-() const;
  GammaPoly& operator+=(const GammaPoly& rhs);
  GammaPoly& operator-=(const GammaPoly& rhs);
  friend GammaPoly operator+(GammaPoly a, const GammaPoly& b) { return a += b; }
  friend GammaPoly operator-(GammaPoly a, const GammaPoly& b) { return a -= b; }
  friend GammaPoly operator*(const GammaPoly& a, const GammaPoly& b);
  friend GammaPoly operator*(const UniPoly& c, const GammaPoly& p);

  friend bool operator==(const GammaPoly& a, const GammaPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  GammaPoly pow(unsigned exponent) const;

 private:
  void require_same_arity(const GammaPoly& other) const;

  std::size_t arity_;
  TermMap terms_;
};

struct HighestTerm {
  Monomial monomial;
  UniPoly coefficient;
};

/// Lex-maximal stored monomial and its coefficient; DomainError on zero.
HighestTerm highest_term(const GammaPoly& p);

/// Degree of the highest monomial; DomainError on zero.
std::size_t height(const GammaPoly& p);

/// Canonical text form in the surface syntax (`s`, `G(k)`), terms in
/// descending lex order, X-powers descending within a monomial. Parsing the
/// result with the same arity reproduces an equal polynomial.
std::string to_string(const GammaPoly& p);

std::ostream& operator<<(std::ostream& os, const GammaPoly& p);

}  // namespace gamma_ideal
