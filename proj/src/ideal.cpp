#include "gamma_ideal/ideal.hpp"

#include <map>
#include <stdexcept>

#include "gamma_ideal/errors.hpp"

namespace gamma_ideal {

namespace {

void require_arity(const GammaPoly& p, const ShiftSystem& sys, const char* op) {
  if (p.arity() != sys.arity()) {
    throw UsageError(std::string(op) + ": polynomial arity " + std::to_string(p.arity()) +
                     " does not match shift count " + std::to_string(sys.arity()));
  }
}

// Monomial order used during division: exponents of non-representative
// variables (by index) dominate, ties broken by the ordinary lex order.
// Replacing Y_j by Y_r therefore always produces a strictly smaller monomial.
class EliminationOrder {
 public:
  explicit EliminationOrder(const ShiftSystem& sys) {
    for (std::size_t k = 0; k < sys.arity(); ++k)
      if (!sys.is_representative(k)) eliminated_.push_back(k);
  }

  bool involves_eliminated(const Monomial& m) const {
    for (std::size_t k : eliminated_)
      if (m[k] != 0) return true;
    return false;
  }

  /// First eliminated variable present in m; requires involves_eliminated(m).
  std::size_t leading_variable(const Monomial& m) const {
    for (std::size_t k : eliminated_)
      if (m[k] != 0) return k;
    throw std::logic_error("monomial has no eliminated variable");
  }

  bool less(const Monomial& a, const Monomial& b) const {
    for (std::size_t k : eliminated_)
      if (a[k] != b[k]) return a[k] < b[k];
    return a < b;
  }

 private:
  std::vector<std::size_t> eliminated_;
};

}  // namespace

GammaPoly Certificate::expand() const {
  if (generators.size() != cofactors.size()) throw UsageError("certificate: generator/cofactor count mismatch");
  GammaPoly out = normal_form;
  for (std::size_t k = 0; k < generators.size(); ++k) out += cofactors[k] * generators[k].as_poly;
  return out;
}

GammaPoly combine(std::span<const Relation> generators, std::span<const GammaPoly> cofactors) {
  if (generators.size() != cofactors.size()) throw UsageError("combine: generator/cofactor count mismatch");
  if (generators.empty()) throw UsageError("combine: no generators");
  GammaPoly out(generators.front().as_poly.arity());
  for (std::size_t k = 0; k < generators.size(); ++k) out += cofactors[k] * generators[k].as_poly;
  return out;
}

GammaPoly normal_form(const GammaPoly& p, const ShiftSystem& sys) {
  require_arity(p, sys, "normal_form");
  const std::size_t n = sys.arity();
  std::vector<UniPoly> multiplier(n, UniPoly(1));
  for (std::size_t k = 0; k < n; ++k) {
    if (!sys.is_representative(k)) {
      multiplier[k] = rising_factorial(sys.shift(sys.representative_of(k)), static_cast<std::size_t>(sys.offset(k)));
    }
  }
  std::map<std::pair<std::size_t, Monomial::Exponent>, UniPoly> powers;
  auto power_of = [&](std::size_t k, Monomial::Exponent e) -> const UniPoly& {
    auto [it, inserted] = powers.try_emplace({k, e});
    if (inserted) it->second = multiplier[k].pow(e);
    return it->second;
  };

  GammaPoly out(n);
  for (const auto& [m, coeff] : p.terms()) {
    Monomial reduced(n);
    UniPoly c = coeff;
    for (std::size_t k = 0; k < n; ++k) {
      if (m[k] == 0) continue;
      const std::size_t r = sys.representative_of(k);
      reduced.set(r, reduced[r] + m[k]);
      if (r != k) c *= power_of(k, m[k]);
    }
    out.add_term(reduced, c);
  }
  return out;
}

Certificate certify(const GammaPoly& p, const ShiftSystem& sys) {
  require_arity(p, sys, "certify");
  const std::size_t n = sys.arity();
  const EliminationOrder order(sys);
  const std::vector<Relation> generators = star_generators(sys);
  std::vector<std::size_t> generator_of(n, generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g) generator_of[generators[g].target] = g;

  std::vector<GammaPoly> cofactors(generators.size(), GammaPoly(n));
  GammaPoly work = p;
  std::optional<Monomial> previous;

  for (;;) {
    const Monomial* lead = nullptr;
    for (const auto& [m, c] : work.terms()) {
      if (order.involves_eliminated(m) && (lead == nullptr || order.less(*lead, m))) lead = &m;
    }
    if (lead == nullptr) break;
    if (previous && !order.less(*lead, *previous)) {
      throw std::logic_error("certify: leading eliminated monomial failed to decrease");
    }
    previous = *lead;

    const std::size_t j = order.leading_variable(*lead);
    const Relation& g = generators[generator_of[j]];
    Monomial quotient = *lead;
    quotient.set(j, quotient[j] - 1);
    const GammaPoly step = GammaPoly::term(quotient, work.coefficient(*lead));
    cofactors[generator_of[j]] += step;
    work -= step * g.as_poly;
  }

  Certificate cert{p, {}, {}, std::move(work)};
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (cofactors[g].is_zero()) continue;
    cert.generators.push_back(generators[g]);
    cert.cofactors.push_back(std::move(cofactors[g]));
  }
  return cert;
}

Verdict decide_membership(const GammaPoly& p, const ShiftSystem& sys) {
  Verdict v;
  v.certificate = certify(p, sys);
  v.is_member = v.certificate.normal_form.is_zero();
  if (v.is_member) {
    v.theorem_basis =
        "normal form is zero: the certificate writes the polynomial as a combination of relations "
        "Gamma(s+a+d) = (s+a)...(s+a+d-1) Gamma(s+a), so it vanishes identically";
  } else if (sys.in_h()) {
    v.theorem_basis =
        "polynomial is nonzero and no two shifts differ by an integer; Gamma(s+a_0), ..., Gamma(s+a_{n-1}) "
        "are then algebraically independent over C(s), so it does not vanish identically";
  } else {
    v.theorem_basis =
        "normal form is nonzero and involves only class representatives, whose shifts pairwise differ by "
        "non-integers; such Gamma values are algebraically independent over C(s), so it does not vanish "
        "identically";
  }
  return v;
}

GammaPoly random_member(const ShiftSystem& sys, std::uint64_t seed, const RandomPolyBounds& bounds) {
  if (!sys.has_relations()) throw UsageError("random_member: shift system has no integer-difference relations");
  const std::vector<Relation> generators = star_generators(sys);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> use(0, 2);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<GammaPoly> cofactors;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      // Leave roughly a third of the generators unused when there are several.
      if (generators.size() > 1 && use(rng) == 0) cofactors.emplace_back(sys.arity());
      else cofactors.push_back(random_gamma_poly(sys.arity(), rng, bounds));
    }
    GammaPoly p = combine(generators, cofactors);
    if (!p.is_zero()) return p;
  }
  throw std::logic_error("random_member: failed to draw a nonzero combination");
}

}  // namespace gamma_ideal
