#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gamma_ideal/gamma_poly.hpp"
#include "gamma_ideal/random_poly.hpp"
#include "gamma_ideal/shift_system.hpp"

namespace gamma_ideal {

/// Cofactor decomposition input == sum_k cofactors[k] * generators[k] + normal_form.
/// Only generators with a nonzero cofactor are listed.
struct Certificate {
  GammaPoly input;
  std::vector<Relation> generators;
  std::vector<GammaPoly> cofactors;
  GammaPoly normal_form;

  /// sum_k cofactors[k] * generators[k] + normal_form, recomputed exactly.
  GammaPoly expand() const;
  bool is_valid() const { return expand() == input; }
};

struct Verdict {
  bool is_member = false;
  Certificate certificate;
  std::string theorem_basis;
};

/// Rewrites every non-representative Y_j as multiplier(X) * Y_r, r the
/// representative of j's class. The result only involves representatives
/// and is zero iff p vanishes identically under Y_k = Gamma(s + a_k).
GammaPoly normal_form(const GammaPoly& p, const ShiftSystem& sys);

/// Multivariate division of p by the star generators. Each step removes
/// the highest remaining term that involves a non-representative variable.
Certificate certify(const GammaPoly& p, const ShiftSystem& sys);

Verdict decide_membership(const GammaPoly& p, const ShiftSystem& sys);

/// sum_k cofactors[k] * generators[k].as_poly
GammaPoly combine(std::span<const Relation> generators, std::span<const GammaPoly> cofactors);

/// Random nonzero combination of the star generators with cofactors drawn
/// from `bounds`. UsageError if the system has no relations.
GammaPoly random_member(const ShiftSystem& sys, std::uint64_t seed, const RandomPolyBounds& bounds = {});

}  // namespace gamma_ideal
