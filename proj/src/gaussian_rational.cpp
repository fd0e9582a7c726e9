#include "gamma_ideal/gaussian_rational.hpp"

#include "gamma_ideal/errors.hpp"

namespace gamma_ideal {

namespace {

std::string rational_text(const mpq_class& q) { return q.get_str(); }

// Magnitude of an imaginary coefficient followed by `i`; sign handled by caller.
std::string imaginary_text(const mpq_class& magnitude) {
  if (magnitude == 1) return "i";
  if (magnitude.get_den() == 1) return magnitude.get_str() + "i";
  return "(" + magnitude.get_str() + ")i";
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::ratio(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return {q, 0};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (is_real() && rhs.is_real()) {
    re_ *= rhs.re_;
    return *this;
  }
  mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
  mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (rhs.is_real()) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  const mpq_class n = rhs.norm();
  *this *= rhs.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (is_real()) return rational_text(re_);
  if (sgn(re_) == 0) {
    const std::string body = imaginary_text(abs(im_));
    return sgn(im_) < 0 ? "-" + body : body;
  }
  return "(" + rational_text(re_) + (sgn(im_) < 0 ? " - " : " + ") + imaginary_text(abs(im_)) + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) { return os << value.to_string(); }

}  // namespace gamma_ideal
