#include <gtest/gtest.h>

#include <vector>

#include "knuthsum/catalog.hpp"
#include "knuthsum/identities.hpp"

using knuthsum::Rational;
using knuthsum::Sides;

namespace {

Sides pair(Rational a, Rational b) { return {std::move(a), std::move(b)}; }

void expect_sides(const Sides& got, const Sides& want) {
  EXPECT_EQ(got.lhs, want.lhs);
  EXPECT_EQ(got.rhs, want.rhs);
}

// Summand of the shifted sum evaluated from the definitions, no tables.
Rational prop1_term(long n, long k, const Rational& ell) {
  return knuthsum::pow(Rational(-1, 2), k) * knuthsum::gbinom(Rational(n) + ell, n - k) *
         knuthsum::gbinom(Rational(2 * k) + Rational(2) * ell, k);
}

}  // namespace

TEST(KnuthOld, Examples) {
  expect_sides(knuthsum::identity_knuth_old(2), pair(Rational(1, 2), Rational(1, 2)));
  expect_sides(knuthsum::identity_knuth_old(1), pair(Rational(0), Rational(0)));
  expect_sides(knuthsum::identity_knuth_old(0), pair(Rational(1), Rational(1)));
  EXPECT_EQ(knuthsum::identity_knuth_old(4).lhs, Rational(3, 8));
}

TEST(Prop1, Examples) {
  expect_sides(knuthsum::identity_prop1(2, Rational(0)), pair(Rational(1, 2), Rational(1, 2)));
  expect_sides(knuthsum::identity_prop1(2, Rational(1, 2)), pair(Rational(5, 8), Rational(5, 8)));
  for (const auto& ell : knuthsum::default_ell_grid()) {
    expect_sides(knuthsum::identity_prop1(3, ell), pair(Rational(0), Rational(0)));
  }
  EXPECT_THROW(knuthsum::identity_prop1(2, Rational(-1)), std::domain_error);
  EXPECT_FALSE(knuthsum::prop1_valid(4, Rational(-4)));
  EXPECT_TRUE(knuthsum::prop1_valid(4, Rational(-5)));
}

TEST(Prop2, Examples) {
  expect_sides(knuthsum::identity_prop2(2, Rational(1)), pair(Rational(1, 4), Rational(1, 4)));
  expect_sides(knuthsum::identity_prop2(2, Rational(0)), pair(Rational(1, 2), Rational(1, 2)));
  expect_sides(knuthsum::identity_prop2(1, Rational(1, 3)), pair(Rational(0), Rational(0)));
  EXPECT_THROW(knuthsum::identity_prop2(3, Rational(-2)), std::domain_error);
}

TEST(Prop1, LhsMatchesDefinitionTermByTerm) {
  for (const auto& ell : knuthsum::default_ell_grid()) {
    for (long n = 0; n <= 25; ++n) {
      Rational direct(0);
      for (long k = 0; k <= n; ++k) direct += prop1_term(n, k, ell);
      EXPECT_EQ(knuthsum::lhs_prop1(n, ell), direct) << n << " " << ell;
    }
  }
}

TEST(Prop1, ReindexingSymmetry) {
  // Replacing k by n - k in the summand leaves the sum unchanged.
  for (const auto& ell : knuthsum::default_ell_grid()) {
    for (long n = 0; n <= 40; ++n) {
      if (!knuthsum::prop1_valid(n, ell)) continue;
      Rational forward(0), reversed(0);
      for (long k = 0; k <= n; ++k) {
        forward += prop1_term(n, k, ell);
        reversed += prop1_term(n, n - k, ell);
      }
      EXPECT_EQ(forward, reversed);
      EXPECT_EQ(forward, knuthsum::lhs_prop1(n, ell));
    }
  }
}

TEST(Prop1, SpecializesToKnuthOld) {
  for (long n = 0; n <= 100; ++n) {
    const auto knuth = knuthsum::identity_knuth_old(n);
    expect_sides(knuthsum::identity_prop1(n, Rational(0)), knuth);
    expect_sides(knuthsum::identity_prop2(n, Rational(0)), knuth);
  }
}

TEST(Prop1, OddIndexVanishes) {
  for (long n = 1; n <= 99; n += 2) {
    for (const auto& ell : knuthsum::default_ell_grid()) {
      if (knuthsum::prop1_valid(n, ell)) {
        ASSERT_TRUE(knuthsum::lhs_prop1(n, ell).is_zero()) << n << " " << ell;
      }
      if (knuthsum::prop2_valid(n, ell)) {
        ASSERT_TRUE(knuthsum::lhs_prop2(n, ell).is_zero()) << n << " " << ell;
      }
    }
  }
}

TEST(Prop2, HypergeometricForm) {
  for (const auto& ell : knuthsum::default_ell_grid()) {
    for (long n = 0; n <= 40; ++n) {
      if (!knuthsum::prop2_valid(n, ell)) continue;
      EXPECT_EQ(knuthsum::eval_terminating(knuthsum::prop2_as_2f1(n, ell)), knuthsum::lhs_prop2(n, ell));
    }
  }
}

TEST(Binom2kShiftTable, MatchesDirect) {
  std::vector<Rational> ells = knuthsum::default_ell_grid();
  ells.insert(ells.end(), {Rational(-1, 2), Rational(-1), Rational(-3, 2), Rational(-5)});
  for (const auto& ell : ells) {
    const auto table = knuthsum::binom2k_shift_table(30, ell);
    for (long k = 0; k <= 30; ++k) {
      ASSERT_EQ(table[static_cast<std::size_t>(k)], knuthsum::binom2k_shift(k, ell)) << k << " " << ell;
    }
  }
}

TEST(Example31, Examples) {
  expect_sides(knuthsum::identity_example31(1), pair(Rational(1, 2), Rational(1, 2)));
  expect_sides(knuthsum::identity_example31(0), pair(Rational(0), Rational(0)));
  EXPECT_TRUE(knuthsum::identity_example31(2).equal());
}

TEST(Corollary, Examples) {
  expect_sides(knuthsum::identity_corollary(1), pair(Rational(-1), Rational(-1)));
  expect_sides(knuthsum::identity_corollary(3), pair(Rational(-2, 3), Rational(-2, 3)));
  expect_sides(knuthsum::identity_corollary(2), pair(Rational(0), Rational(0)));
  EXPECT_TRUE(knuthsum::identity_corollary(5).equal());
}

TEST(Corollary, IntermediateExamples) {
  expect_sides(knuthsum::identity_corollary_intermediate(1), pair(Rational(3), Rational(3)));
  expect_sides(knuthsum::identity_corollary_intermediate(0), pair(Rational(0), Rational(0)));
  EXPECT_TRUE(knuthsum::identity_corollary_intermediate(2).equal());
}

TEST(Corollary, FinalFormFollowsFromIntermediate) {
  // The m = 2n+1 sum is the intermediate sum plus its k = 2n+1 term.
  for (long n = 0; n <= 60; ++n) {
    const long m = 2 * n + 1;
    const Rational last = knuthsum::pow(Rational(-2), m) * knuthsum::harmonic(static_cast<std::size_t>(m)) /
                          Rational(m + 1);
    const auto intermediate = knuthsum::identity_corollary_intermediate(n);
    const auto corollary = knuthsum::identity_corollary(m);
    EXPECT_EQ(intermediate.lhs + last, corollary.lhs);
    EXPECT_EQ(intermediate.rhs + last, corollary.rhs);
  }
}

TEST(GfPolynomial, Examples) {
  expect_sides(knuthsum::identity_gf_polynomial(1, Rational(1)), pair(Rational(1, 3), Rational(1, 3)));
  for (long n = 0; n <= 5; ++n) {
    expect_sides(knuthsum::identity_gf_polynomial(n, Rational(0)), pair(Rational(1), Rational(1)));
  }
  EXPECT_TRUE(knuthsum::identity_gf_polynomial(2, Rational(1, 3)).equal());
}

TEST(GfPolynomial, SamplePointsAreDistinctAndNonzero) {
  for (long n = 0; n <= 20; ++n) {
    auto points = knuthsum::gf_polynomial_points(n);
    ASSERT_EQ(points.size(), static_cast<std::size_t>(2 * n + 1));
    std::ranges::sort(points);
    EXPECT_EQ(std::ranges::adjacent_find(points), points.end());
    for (const auto& x : points) EXPECT_FALSE(x.is_zero());
  }
}

TEST(Tauraso, Examples) {
  expect_sides(knuthsum::identity_tauraso(1), pair(Rational(6), Rational(6)));
  expect_sides(knuthsum::identity_tauraso(0), pair(Rational(0), Rational(0)));
  EXPECT_TRUE(knuthsum::identity_tauraso(2).equal());
}

TEST(Identities, NegativeIndexRejected) {
  EXPECT_THROW(knuthsum::identity_knuth_old(-1), std::invalid_argument);
  EXPECT_THROW(knuthsum::identity_tauraso(-3), std::invalid_argument);
  EXPECT_THROW(knuthsum::identity_prop1(-1, Rational(0)), std::invalid_argument);
}
