#include "gamma_ideal/random_poly.hpp"

#include <array>

#include "gamma_ideal/errors.hpp"

namespace gamma_ideal {

namespace {

GaussianRational random_scalar(std::mt19937_64& rng, const RandomPolyBounds& bounds) {
  std::uniform_int_distribution<long> value(-bounds.coefficient_bound, bounds.coefficient_bound);
  static constexpr std::array<long, 5> kDenominators{1, 1, 1, 2, 3};
  std::uniform_int_distribution<std::size_t> den_pick(0, kDenominators.size() - 1);
  mpq_class re(value(rng), kDenominators[den_pick(rng)]);
  mpq_class im(0);
  if (bounds.gaussian_coefficients && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
    im = mpq_class(value(rng), kDenominators[den_pick(rng)]);
  }
  return {re, im};
}

Monomial random_monomial(std::size_t arity, std::mt19937_64& rng, unsigned max_height) {
  Monomial m(arity);
  if (arity == 0) return m;
  const unsigned h = std::uniform_int_distribution<unsigned>(0, max_height)(rng);
  std::uniform_int_distribution<std::size_t> var(0, arity - 1);
  for (unsigned k = 0; k < h; ++k) {
    const std::size_t v = var(rng);
    m.set(v, m[v] + 1);
  }
  return m;
}

}  // namespace

GammaPoly random_gamma_poly(std::size_t arity, std::mt19937_64& rng, const RandomPolyBounds& bounds) {
  GammaPoly p(arity);
  const std::size_t terms = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, bounds.max_terms))(rng);
  for (std::size_t t = 0; t < terms; ++t) {
    const unsigned deg = std::uniform_int_distribution<unsigned>(0, bounds.max_x_degree)(rng);
    std::vector<GaussianRational> coeffs;
    for (unsigned k = 0; k <= deg; ++k) coeffs.push_back(random_scalar(rng, bounds));
    p.add_term(random_monomial(arity, rng, bounds.max_height), UniPoly(std::move(coeffs)));
  }
  return p;
}

GammaPoly random_nonzero_gamma_poly(std::size_t arity, std::mt19937_64& rng, const RandomPolyBounds& bounds) {
  if (bounds.coefficient_bound <= 0) throw UsageError("random_nonzero_gamma_poly: coefficient_bound must be positive");
  for (;;) {
    GammaPoly p = random_gamma_poly(arity, rng, bounds);
    if (!p.is_zero()) return p;
  }
}

}  // namespace gamma_ideal
