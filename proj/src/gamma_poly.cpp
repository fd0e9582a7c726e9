#include "gamma_ideal/gamma_poly.hpp"

#include <numeric>
#include <sstream>

#include "gamma_ideal/errors.hpp"

namespace gamma_ideal {

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power) {
  if (index >= arity) throw UsageError("variable index " + std::to_string(index) + " out of range");
  Monomial m(arity);
  m.exps_[index] = power;
  return m;
}

bool Monomial::is_one() const {
  for (Exponent e : exps_)
    if (e != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  if (arity() != rhs.arity()) throw UsageError("monomial arity mismatch");
  Monomial out = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) out.exps_[k] += rhs.exps_[k];
  return out;
}

std::strong_ordering lex_compare(const Monomial& m1, const Monomial& m2) {
  if (m1.arity() != m2.arity()) throw UsageError("lex_compare: arity mismatch");
  for (std::size_t k = 0; k < m1.arity(); ++k) {
    if (m1[k] != m2[k]) return m1[k] < m2[k] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t monomial_degree(const Monomial& m) {
  const auto e = m.exponents();
  return std::accumulate(e.begin(), e.end(), std::size_t{0});
}

GammaPoly GammaPoly::constant(std::size_t arity, const GaussianRational& c) {
  return term(Monomial(arity), UniPoly(c));
}

GammaPoly GammaPoly::x(std::size_t arity) { return term(Monomial(arity), UniPoly::x()); }

GammaPoly GammaPoly::gamma(std::size_t arity, std::size_t index) {
  return term(Monomial::variable(arity, index), UniPoly(1));
}

GammaPoly GammaPoly::term(const Monomial& m, const UniPoly& coefficient) {
  GammaPoly p(m.arity());
  p.add_term(m, coefficient);
  return p;
}

UniPoly GammaPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? UniPoly() : it->second;
}

void GammaPoly::add_term(const Monomial& m, const UniPoly& coefficient) {
  if (m.arity() != arity_) throw UsageError("term arity does not match polynomial arity");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

void GammaPoly::require_same_arity(const GammaPoly& other) const {
  if (arity_ != other.arity_) {
    throw UsageError("polynomial arity mismatch: " + std::to_string(arity_) + " vs " +
                     std::to_string(other.arity_));
  }
}

GammaPoly GammaPoly::operator-() const {
  GammaPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

GammaPoly& GammaPoly::operator+=(const GammaPoly& rhs) {
  require_same_arity(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

GammaPoly& GammaPoly::operator-=(const GammaPoly& rhs) {
  require_same_arity(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

GammaPoly operator*(const GammaPoly& a, const GammaPoly& b) {
  a.require_same_arity(b);
  GammaPoly out(a.arity_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

GammaPoly operator*(const UniPoly& c, const GammaPoly& p) {
  GammaPoly out(p.arity_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : p.terms_) out.add_term(m, c * coeff);
  return out;
}

GammaPoly GammaPoly::pow(unsigned exponent) const {
  GammaPoly result = constant(arity_, 1);
  GammaPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

HighestTerm highest_term(const GammaPoly& p) {
  if (p.is_zero()) throw DomainError("highest term of the zero polynomial");
  const auto& [m, c] = *p.terms().rbegin();
  return {m, c};
}

std::size_t height(const GammaPoly& p) { return monomial_degree(highest_term(p).monomial); }

namespace {

bool prints_negative(const GaussianRational& c) {
  if (c.is_real()) return sgn(c.re()) < 0;
  return sgn(c.re()) == 0 && sgn(c.im()) < 0;
}

std::string monomial_text(const Monomial& m, std::size_t x_power) {
  std::string out;
  auto append = [&out](const std::string& factor) {
    if (!out.empty()) out += "*";
    out += factor;
  };
  if (x_power == 1) append("s");
  else if (x_power > 1) append("s^" + std::to_string(x_power));
  for (std::size_t k = 0; k < m.arity(); ++k) {
    if (m[k] == 0) continue;
    std::string g = "G(" + std::to_string(k) + ")";
    if (m[k] > 1) g += "^" + std::to_string(m[k]);
    append(g);
  }
  return out;
}

}  // namespace

std::string to_string(const GammaPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, coeff] = *it;
    const auto coeffs = coeff.coefficients();
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      const GaussianRational& c = coeffs[k];
      if (c.is_zero()) continue;
      const bool negative = prints_negative(c);
      const std::string magnitude = negative ? (-c).to_string() : c.to_string();
      const std::string rest = monomial_text(m, k);
      if (!out.empty()) out += negative ? " - " : " + ";
      else if (negative) out += "-";
      if (rest.empty()) out += magnitude;
      else if (magnitude == "1") out += rest;
      else out += magnitude + "*" + rest;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GammaPoly& p) { return os << to_string(p); }

}  // namespace gamma_ideal
