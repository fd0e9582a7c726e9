#include "gamma_ideal/uni_poly.hpp"

#include <utility>

#include "gamma_ideal/errors.hpp"

namespace gamma_ideal {

UniPoly::UniPoly(GaussianRational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<GaussianRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(const GaussianRational& c, std::size_t power) {
  if (c.is_zero()) return {};
  std::vector<GaussianRational> coeffs(power + 1);
  coeffs[power] = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::linear(const GaussianRational& a) { return UniPoly({a, GaussianRational(1)}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> UniPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

GaussianRational UniPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : GaussianRational();
}

const GaussianRational& UniPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

UniPoly UniPoly::pow(unsigned exponent) const {
  UniPoly result(1);
  UniPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

UniPoly UniPoly::shifted(const GaussianRational& h) const {
  // Horner in the shifted variable: p(X+h) = (...(c_n (X+h) + c_{n-1})(X+h) + ...) + c_0.
  const UniPoly step = linear(h);
  UniPoly out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out *= step;
    out += UniPoly(*it);
  }
  return out;
}

GaussianRational UniPoly::operator()(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> UniPoly::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const GaussianRational& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string text = c.to_string();
    bool negative = c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    if (negative) text = (-c).to_string();
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0) out += text;
    else if (text == "1") out += power;
    else out += text + "*" + power;
  }
  return out;
}

DivisionResult euclid_divide(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw DomainError("euclid_divide: zero divisor");
  const std::size_t den_deg = *den.degree();
  const GaussianRational& lead = den.leading();
  std::vector<GaussianRational> rem(num.coefficients().begin(), num.coefficients().end());
  if (rem.size() <= den_deg) return {UniPoly(), num};

  std::vector<GaussianRational> quot(rem.size() - den_deg);
  const auto den_coeffs = den.coefficients();
  for (std::size_t k = rem.size(); k-- > den_deg;) {
    if (rem[k].is_zero()) continue;
    const GaussianRational factor = rem[k] / lead;
    const std::size_t shift = k - den_deg;
    quot[shift] = factor;
    for (std::size_t j = 0; j <= den_deg; ++j) rem[shift + j] -= factor * den_coeffs[j];
  }
  rem.resize(den_deg);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly rising_factorial(const GaussianRational& a, std::size_t count) {
  UniPoly out(1);
  GaussianRational offset = a;
  for (std::size_t k = 0; k < count; ++k) {
    out *= UniPoly::linear(offset);
    offset += GaussianRational(1);
  }
  return out;
}

}  // namespace gamma_ideal
