#pragma once

#include <cstddef>
#include <random>

#include "gamma_ideal/gamma_poly.hpp"

namespace gamma_ideal {

struct RandomPolyBounds {
  std::size_t max_terms = 3;       // monomials drawn (duplicates merge)
  unsigned max_height = 2;         // total Y-degree of each monomial
  unsigned max_x_degree = 2;
  long coefficient_bound = 3;      // integer parts drawn from [-bound, bound]
  bool gaussian_coefficients = true;
};

/// Random polynomial of the given arity; may be zero.
GammaPoly random_gamma_poly(std::size_t arity, std::mt19937_64& rng, const RandomPolyBounds& bounds = {});

/// Random polynomial that is guaranteed nonzero.
GammaPoly random_nonzero_gamma_poly(std::size_t arity, std::mt19937_64& rng, const RandomPolyBounds& bounds = {});

}  // namespace gamma_ideal
