#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gamma_ideal/gaussian_rational.hpp"

namespace gamma_ideal {

/// Univariate polynomial in X over the Gaussian rationals, dense and
/// trimmed: the leading stored coefficient is nonzero, and the zero
/// polynomial stores nothing.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(GaussianRational constant);  // NOLINT: scalars embed implicitly
  UniPoly(long constant) : UniPoly(GaussianRational(constant)) {}  // NOLINT
  explicit UniPoly(std::vector<GaussianRational> coefficients);

  static UniPoly x() { return monomial(1, 1); }
  /// c * X^power
  static UniPoly monomial(const GaussianRational& c, std::size_t power);
  /// X + a
  static UniPoly linear(const GaussianRational& a);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Empty for the zero polynomial, which has degree minus infinity.
  std::optional<std::size_t> degree() const noexcept;
  /// Coefficient of X^power; zero beyond the degree.
  GaussianRational coefficient(std::size_t power) const;
  std::span<const GaussianRational> coefficients() const noexcept { return coeffs_; }
  /// Requires a nonzero polynomial.
  const GaussianRational& leading() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  UniPoly pow(unsigned exponent) const;
  /// p(X + h)
  UniPoly shifted(const GaussianRational& h) const;

  GaussianRational operator()(const GaussianRational& x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  /// Human-readable form in the variable `var`, e.g. "X^2 + 3*X + 2".
  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();

  std::vector<GaussianRational> coeffs_;
};

struct DivisionResult {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division num = quotient*den + remainder with remainder zero or
/// of degree strictly below degree(den). Throws DomainError if den is zero.
DivisionResult euclid_divide(const UniPoly& num, const UniPoly& den);

/// (X + a)(X + a + 1)...(X + a + count - 1); the constant 1 when count is 0.
UniPoly rising_factorial(const GaussianRational& a, std::size_t count);

}  // namespace gamma_ideal
