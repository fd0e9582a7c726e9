#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gamma_ideal/gamma_poly.hpp"
#include "gamma_ideal/gaussian_rational.hpp"
#include "gamma_ideal/uni_poly.hpp"

namespace gamma_ideal {

/// Largest integer offset accepted between two shifts of one class. The
/// generating relation between them has this degree in X.
inline constexpr long kMaxClassOffset = 4096;

/// d with a - b == d when that difference is an integer, empty otherwise.
std::optional<long> integer_difference(const GaussianRational& a, const GaussianRational& b);

/// The shift tuple (a_0, ..., a_{n-1}) partitioned into classes of shifts
/// with pairwise integer differences.
///
/// Each class lists its members by increasing offset; the first member is
/// the representative r, and every member k satisfies a_k = a_r + d_k with
/// integer d_k >= 0. Classes appear in order of their smallest index.
class ShiftSystem {
 public:
  /// Throws UsageError on duplicate shifts or offsets beyond kMaxClassOffset.
  explicit ShiftSystem(std::vector<GaussianRational> shifts);

  std::size_t arity() const noexcept { return shifts_.size(); }
  const std::vector<GaussianRational>& shifts() const noexcept { return shifts_; }
  const GaussianRational& shift(std::size_t index) const { return shifts_.at(index); }

  const std::vector<std::vector<std::size_t>>& classes() const noexcept { return classes_; }
  std::size_t class_of(std::size_t index) const { return class_of_.at(index); }
  std::size_t representative_of(std::size_t index) const { return classes_[class_of(index)].front(); }
  /// a_index - a_representative, always >= 0.
  long offset(std::size_t index) const { return offset_.at(index); }
  bool is_representative(std::size_t index) const { return representative_of(index) == index; }

  /// True iff no two shifts differ by an integer (all classes singletons).
  bool in_h() const noexcept { return classes_.size() == shifts_.size(); }
  bool has_relations() const noexcept { return !in_h(); }

 private:
  std::vector<GaussianRational> shifts_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<long> offset_;
};

inline ShiftSystem build_shift_system(std::vector<GaussianRational> shifts) {
  return ShiftSystem(std::move(shifts));
}

/// Y_target - multiplier(X) * Y_source, where a_target = a_source + d with
/// d >= 1 and multiplier = (X + a_source)(X + a_source + 1)...(X + a_source + d - 1).
/// Substituting Y_k = Gamma(s + a_k) makes it vanish identically.
struct Relation {
  std::size_t target;
  std::size_t source;
  UniPoly multiplier;
  GammaPoly as_poly;
};

/// Relation with source i and target j; UsageError unless a_j - a_i is a
/// positive integer.
Relation generating_relation(const ShiftSystem& sys, std::size_t i, std::size_t j);

/// One relation per non-representative index, sourced at its class
/// representative, ordered by target index.
std::vector<Relation> star_generators(const ShiftSystem& sys);

/// q(X + 1, (X + a_0) Y_0, ..., (X + a_{n-1}) Y_{n-1}).
GammaPoly shift_apply(const GammaPoly& q, const ShiftSystem& sys);

}  // namespace gamma_ideal
