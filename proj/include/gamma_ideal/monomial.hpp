#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace gamma_ideal {

/// Power product Y_0^{i_0} ... Y_{n-1}^{i_{n-1}} of fixed arity n.
///
/// The built-in ordering is the lexicographic order in which the exponent
/// of Y_0 is most significant: m1 < m2 iff at the first index where the
/// exponents differ, m1 has the smaller one. Only monomials of equal arity
/// are ever compared through it; lex_compare() checks that explicitly.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}
  Monomial(std::initializer_list<Exponent> exponents) : exps_(exponents) {}

  /// Y_index^power
  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

  std::size_t arity() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t index) const { return exps_[index]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  bool is_one() const;

  void set(std::size_t index, Exponent power) { exps_.at(index) = power; }

  /// Componentwise exponent sum.
  Monomial operator*(const Monomial& rhs) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Lexicographic comparison; throws UsageError on arity mismatch.
std::strong_ordering lex_compare(const Monomial& m1, const Monomial& m2);

/// Sum of exponents.
std::size_t monomial_degree(const Monomial& m);

}  // namespace gamma_ideal
