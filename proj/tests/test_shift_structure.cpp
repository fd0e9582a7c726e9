#include <gtest/gtest.h>

#include <random>

#include "gamma_ideal/errors.hpp"
#include "gamma_ideal/numeric.hpp"
#include "gamma_ideal/random_poly.hpp"
#include "gamma_ideal/shift_system.hpp"
#include "test_support.hpp"

using namespace gamma_ideal;

namespace {

GaussianRational q(long num, long den = 1) { return GaussianRational::ratio(num, den); }
GaussianRational gi(long re_num, long re_den, long im_num, long im_den) {
  return {mpq_class(re_num, re_den), mpq_class(im_num, im_den)};
}
const GaussianRational kI = GaussianRational::imaginary_unit();

}  // namespace

TEST(IntegerDifference, Examples) {
  EXPECT_EQ(integer_difference(gi(3, 2, 1, 1), gi(-1, 2, 1, 1)), 2);
  EXPECT_FALSE(integer_difference(q(1, 2), q(0)).has_value());
  EXPECT_FALSE(integer_difference(kI, q(0)).has_value());
  EXPECT_EQ(integer_difference(q(0), q(3)), -3);
}

TEST(BuildShiftSystem, ExampleTwoShifts) {
  const ShiftSystem sys = build_shift_system({0, 1, 2});
  ASSERT_EQ(sys.classes().size(), 1U);
  EXPECT_EQ(sys.classes()[0], (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(sys.representative_of(2), 0U);
  EXPECT_EQ(sys.offset(2), 2);
  EXPECT_FALSE(sys.in_h());
}

TEST(BuildShiftSystem, HalfShiftIsInH) {
  const ShiftSystem sys({0, q(1, 2)});
  EXPECT_EQ(sys.classes().size(), 2U);
  EXPECT_TRUE(sys.in_h());
}

TEST(BuildShiftSystem, RationalSpacingIsInH) {
  const GaussianRational alpha = q(3, 7);
  const ShiftSystem sys({0, alpha, alpha + alpha});
  // Pairwise differences 3/7, 6/7, 3/7 are not integers.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) EXPECT_FALSE(integer_difference(sys.shift(i), sys.shift(j)));
  EXPECT_TRUE(sys.in_h());
}

TEST(BuildShiftSystem, RepresentativeHasMinimalOffset) {
  const ShiftSystem sys({3, q(1, 2), 1, q(5, 2), 2});
  ASSERT_EQ(sys.classes().size(), 2U);
  EXPECT_EQ(sys.classes()[0], (std::vector<std::size_t>{2, 4, 0}));
  EXPECT_EQ(sys.classes()[1], (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(sys.representative_of(0), 2U);
  EXPECT_EQ(sys.offset(0), 2);
  EXPECT_EQ(sys.offset(3), 2);
}

TEST(BuildShiftSystem, DuplicateShiftsRejected) {
  EXPECT_THROW(ShiftSystem({0, 0}), UsageError);
  EXPECT_THROW(ShiftSystem({q(1, 2), 1, q(2, 4)}), UsageError);
}

TEST(BuildShiftSystem, HugeOffsetRejected) { EXPECT_THROW(ShiftSystem({0, kMaxClassOffset + 1}), UsageError); }

TEST(BuildShiftSystem, EmptySystem) {
  const ShiftSystem sys({});
  EXPECT_EQ(sys.arity(), 0U);
  EXPECT_TRUE(sys.in_h());
}

TEST(BuildShiftSystem, ClassesAreEquivalenceClasses) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
  for (int t = 0; t < 200; ++t) {
    std::vector<GaussianRational> shifts;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    while (shifts.size() < n) {
      GaussianRational a = gi(num(rng), den(rng), num(rng) / 4, 1);
      if (std::find(shifts.begin(), shifts.end(), a) == shifts.end()) shifts.push_back(a);
    }
    const ShiftSystem sys(shifts);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(sys.class_of(i), sys.class_of(sys.representative_of(i)));
      EXPECT_GE(sys.offset(i), 0);
      EXPECT_EQ(sys.shift(i), sys.shift(sys.representative_of(i)) + GaussianRational(sys.offset(i)));
      for (std::size_t j = 0; j < n; ++j) {
        const bool related = integer_difference(shifts[i], shifts[j]).has_value();
        EXPECT_EQ(related, sys.class_of(i) == sys.class_of(j));
      }
    }
    bool singletons = true;
    for (const auto& c : sys.classes()) singletons = singletons && c.size() == 1;
    EXPECT_EQ(sys.in_h(), singletons);
  }
}

TEST(GeneratingRelation, AdjacentShifts) {
  const ShiftSystem sys({0, 1});
  const Relation rel = generating_relation(sys, 0, 1);
  const GammaPoly expected = GammaPoly::gamma(2, 1) - GammaPoly::x(2) * GammaPoly::gamma(2, 0);
  EXPECT_EQ(rel.as_poly, expected);
  EXPECT_EQ(rel.target, 1U);
  EXPECT_EQ(rel.source, 0U);
}

TEST(GeneratingRelation, PairwiseWithinClass) {
  const ShiftSystem sys({0, 1, 2});
  const Relation rel = generating_relation(sys, 1, 2);
  const GammaPoly x = GammaPoly::x(3), one = GammaPoly::constant(3, 1);
  EXPECT_EQ(rel.as_poly, GammaPoly::gamma(3, 2) - (x + one) * GammaPoly::gamma(3, 1));
}

TEST(GeneratingRelation, OffsetTwoComposesFunctionalEquation) {
  const ShiftSystem sys({0, 2});
  const Relation rel = generating_relation(sys, 0, 1);
  EXPECT_EQ(rel.multiplier, UniPoly::x() * (UniPoly::x() + UniPoly(1)));
  EXPECT_EQ(*rel.multiplier.degree(), 2U);
}

TEST(GeneratingRelation, Errors) {
  const ShiftSystem sys({0, 1, q(1, 2)});
  EXPECT_THROW(generating_relation(sys, 0, 2), UsageError);
  EXPECT_THROW(generating_relation(sys, 1, 0), UsageError);
  EXPECT_THROW(generating_relation(sys, 0, 0), UsageError);
  EXPECT_THROW(generating_relation(sys, 0, 7), UsageError);
}

TEST(GeneratingRelation, VanishesNumerically) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const ShiftSystem sys = test_support::random_shift_system(rng, 4, 3, 4, true);
    for (const Relation& rel : star_generators(sys)) {
      EXPECT_EQ(*rel.multiplier.degree(), static_cast<std::size_t>(sys.offset(rel.target) - sys.offset(rel.source)));
      for (Complex s : draw_samples(sys, 10, 100 + static_cast<std::uint64_t>(t))) {
        EXPECT_LT(evaluate_poly(rel.as_poly, sys, s).relative_residual(), 1e-10);
      }
    }
  }
}

TEST(ShiftApply, Examples) {
  const GaussianRational a = gi(1, 3, 2, 1);
  EXPECT_EQ(shift_apply(GammaPoly::gamma(1, 0), ShiftSystem({a})),
            GammaPoly::term(Monomial({1}), UniPoly::linear(a)));
  const GammaPoly xy = GammaPoly::x(1) * GammaPoly::gamma(1, 0);
  EXPECT_EQ(shift_apply(xy, ShiftSystem({0})),
            GammaPoly::term(Monomial({1}), (UniPoly::x() + UniPoly(1)) * UniPoly::x()));
  const GammaPoly yy = GammaPoly::gamma(2, 0) * GammaPoly::gamma(2, 1);
  EXPECT_EQ(shift_apply(yy, ShiftSystem({0, q(1, 2)})),
            GammaPoly::term(Monomial({1, 1}), UniPoly::x() * UniPoly::linear(q(1, 2))));
}

TEST(ShiftApply, ArityMismatch) { EXPECT_THROW(shift_apply(GammaPoly::gamma(2, 0), ShiftSystem({0})), UsageError); }

TEST(ShiftApply, HighestTermFormula) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 300; ++t) {
    const ShiftSystem sys = test_support::random_shift_system(rng, 4, 3, 4);
    const GammaPoly q = random_nonzero_gamma_poly(sys.arity(), rng);
    const HighestTerm before = highest_term(q);
    UniPoly expected = test_support::shift_by_one(before.coefficient);
    for (std::size_t m = 0; m < sys.arity(); ++m)
      for (unsigned e = 0; e < before.monomial[m]; ++e) expected = expected * UniPoly::linear(sys.shift(m));
    const GammaPoly shifted = shift_apply(q, sys);
    const HighestTerm after = highest_term(shifted);
    EXPECT_EQ(after.monomial, before.monomial);
    EXPECT_EQ(after.coefficient, expected);
    EXPECT_EQ(height(shifted), height(q));
  }
}

TEST(ShiftApply, RingHomomorphism) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 200; ++t) {
    const ShiftSystem sys = test_support::random_shift_system(rng, 3, 2, 3);
    const GammaPoly a = random_gamma_poly(sys.arity(), rng), b = random_gamma_poly(sys.arity(), rng);
    EXPECT_EQ(shift_apply(a + b, sys), shift_apply(a, sys) + shift_apply(b, sys));
    EXPECT_EQ(shift_apply(a * b, sys), shift_apply(a, sys) * shift_apply(b, sys));
  }
}

TEST(ShiftApply, MatchesShiftedEvaluation) {
  // T(s, Gamma(s+a)...) = Q(s+1, Gamma(s+1+a)...) because Gamma(s+1+a) = (s+a)Gamma(s+a).
  std::mt19937_64 rng(53);
  for (int t = 0; t < 50; ++t) {
    const ShiftSystem sys = test_support::random_shift_system(rng, 3, 2, 3);
    const GammaPoly q = random_nonzero_gamma_poly(sys.arity(), rng);
    const GammaPoly tq = shift_apply(q, sys);
    for (Complex s : draw_samples(sys, 5, static_cast<std::uint64_t>(t), 1e-2, {-2.0, 3.0, -2.0, 2.0})) {
      const PolyValue lhs = evaluate_poly(tq, sys, s);
      const PolyValue rhs = evaluate_poly(q, sys, s + 1.0);
      EXPECT_LE(std::abs(lhs.value - rhs.value), 1e-9 * std::max(lhs.scale, rhs.scale));
    }
  }
}
