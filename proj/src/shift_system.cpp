#include "gamma_ideal/shift_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gamma_ideal/errors.hpp"

namespace gamma_ideal {

std::optional<long> integer_difference(const GaussianRational& a, const GaussianRational& b) {
  const GaussianRational d = a - b;
  if (!d.is_integer()) return std::nullopt;
  const mpz_class& value = d.re().get_num();
  if (!value.fits_slong_p()) throw UsageError("integer shift difference out of range");
  return value.get_si();
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t k) {
  while (parent[k] != k) {
    parent[k] = parent[parent[k]];
    k = parent[k];
  }
  return k;
}

}  // namespace

ShiftSystem::ShiftSystem(std::vector<GaussianRational> shifts)
    : shifts_(std::move(shifts)), class_of_(shifts_.size()), offset_(shifts_.size(), 0) {
  const std::size_t n = shifts_.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (shifts_[i] == shifts_[j]) {
        throw UsageError("duplicate shift " + shifts_[i].to_string() + " at positions " + std::to_string(i) +
                         " and " + std::to_string(j));
      }
      if (integer_difference(shifts_[i], shifts_[j])) {
        parent[find_root(parent, i)] = find_root(parent, j);
      }
    }
  }

  std::vector<std::size_t> class_index_of_root(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t root = find_root(parent, k);
    if (class_index_of_root[root] == n) {
      class_index_of_root[root] = classes_.size();
      classes_.emplace_back();
    }
    class_of_[k] = class_index_of_root[root];
    classes_[class_of_[k]].push_back(k);
  }

  for (auto& members : classes_) {
    // Order by the (integer) difference to the first member; the smallest becomes representative.
    const GaussianRational anchor = shifts_[members.front()];
    auto rel = [&](std::size_t k) {
      auto d = integer_difference(shifts_[k], anchor);
      if (!d) throw std::logic_error("shift class is not closed under integer differences");
      return *d;
    };
    std::stable_sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return rel(a) < rel(b); });
    const std::size_t rep = members.front();
    for (std::size_t k : members) {
      const long d = *integer_difference(shifts_[k], shifts_[rep]);
      if (d < 0) throw std::logic_error("class representative does not have minimal offset");
      if (d > kMaxClassOffset) {
        throw UsageError("shifts " + shifts_[k].to_string() + " and " + shifts_[rep].to_string() +
                         " differ by more than " + std::to_string(kMaxClassOffset));
      }
      offset_[k] = d;
    }
  }
}

Relation generating_relation(const ShiftSystem& sys, std::size_t i, std::size_t j) {
  const std::size_t n = sys.arity();
  if (i >= n || j >= n) throw UsageError("generating_relation: index out of range");
  if (sys.class_of(i) != sys.class_of(j)) {
    throw UsageError("generating_relation: shifts " + std::to_string(i) + " and " + std::to_string(j) +
                     " are not in the same integer-difference class");
  }
  const long d = sys.offset(j) - sys.offset(i);
  if (d <= 0) {
    throw UsageError("generating_relation: target shift must exceed source shift by a positive integer");
  }
  Relation rel{j, i, rising_factorial(sys.shift(i), static_cast<std::size_t>(d)), GammaPoly(n)};
  rel.as_poly = GammaPoly::gamma(n, j) - GammaPoly::term(Monomial::variable(n, i), rel.multiplier);
  return rel;
}

std::vector<Relation> star_generators(const ShiftSystem& sys) {
  std::vector<Relation> out;
  for (std::size_t j = 0; j < sys.arity(); ++j) {
    if (!sys.is_representative(j)) out.push_back(generating_relation(sys, sys.representative_of(j), j));
  }
  return out;
}

GammaPoly shift_apply(const GammaPoly& q, const ShiftSystem& sys) {
  if (q.arity() != sys.arity()) throw UsageError("shift_apply: polynomial arity does not match shift count");
  std::vector<UniPoly> linear;
  linear.reserve(sys.arity());
  for (const auto& a : sys.shifts()) linear.push_back(UniPoly::linear(a));

  GammaPoly out(q.arity());
  for (const auto& [m, coeff] : q.terms()) {
    UniPoly c = coeff.shifted(GaussianRational(1));
    for (std::size_t k = 0; k < m.arity(); ++k) {
      if (m[k] != 0) c *= linear[k].pow(m[k]);
    }
    out.add_term(m, c);
  }
  return out;
}

}  // namespace gamma_ideal
