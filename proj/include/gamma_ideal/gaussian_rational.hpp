#pragma once

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <string>

namespace gamma_ideal {

/// Exact complex scalar re + im*i with rational parts. This is the
/// coefficient field for polynomials and the field the shifts live in.
/// Both parts are kept canonical (lowest terms, positive denominator).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT: implicit by design of literals
  GaussianRational(mpq_class re, mpq_class im = 0);

  /// Builds num/den + 0i; den must be nonzero.
  static GaussianRational ratio(long num, long den);
  static GaussianRational imaginary_unit() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_integer() const { return is_real() && re_.get_den() == 1; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  /// Throws DomainError on a zero divisor.
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Canonical text: "3", "-3/2", "i", "-2i", "(3/2)i", "(1/2 + (3/2)i)".
  /// The output parses back to the same value.
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

}  // namespace gamma_ideal
