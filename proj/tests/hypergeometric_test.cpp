#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "knuthsum/gamma.hpp"
#include "knuthsum/hypergeometric.hpp"

using knuthsum::HyperSeries;
using knuthsum::Rational;

namespace {

std::vector<Rational> a_grid() {
  return {Rational(1),     Rational(2),     Rational(3, 2),  Rational(1, 3),  Rational(-1, 3),
          Rational(7, 5),  Rational(-5, 7), Rational(11, 4), Rational(-9, 4), Rational(1, 5)};
}

// Sum of prod (a)_k / prod (b)_k z^k / k! with every term built from scratch.
Rational eval_from_scratch(const HyperSeries& s) {
  Rational sum(0);
  for (long k = 0; k <= s.termination_index(); ++k) {
    Rational term = knuthsum::pow(s.argument(), k) / Rational(knuthsum::factorial(static_cast<unsigned long>(k)));
    for (const auto& a : s.upper()) term *= knuthsum::pochhammer(a, k);
    for (const auto& b : s.lower()) term /= knuthsum::pochhammer(b, k);
    sum += term;
  }
  return sum;
}

}  // namespace

TEST(EvalTerminating, Examples) {
  EXPECT_EQ(knuthsum::eval_terminating(HyperSeries({Rational(-2), Rational(1)}, {Rational(2)}, Rational(2))),
            Rational(1, 3));
  EXPECT_EQ(knuthsum::eval_terminating(HyperSeries({Rational(-2), Rational(2)}, {Rational(1, 2)}, Rational(1, 2))),
            Rational(-1));
  EXPECT_EQ(knuthsum::eval_terminating(HyperSeries({Rational(0)}, {}, Rational(5))), Rational(1));
}

TEST(EvalTerminating, SmallestTerminationIndexWins) {
  const HyperSeries s({Rational(-7), Rational(-3), Rational(1, 2)}, {Rational(5, 3)}, Rational(-1));
  EXPECT_EQ(s.termination_index(), 3);
}

TEST(EvalTerminating, ConstructorRejectsBadSeries) {
  EXPECT_THROW(HyperSeries({Rational(1, 2)}, {Rational(1)}, Rational(2)), std::invalid_argument);
  EXPECT_THROW(HyperSeries({Rational(-4)}, {Rational(-2)}, Rational(2)), std::invalid_argument);
  EXPECT_NO_THROW(HyperSeries({Rational(-2)}, {Rational(-3)}, Rational(2)));
}

TEST(EvalTerminating, RecurrenceMatchesFromScratch) {
  std::mt19937 rng(19);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9), len(0, 15), count(0, 3);
  int checked = 0;
  while (checked < 100) {
    std::vector<Rational> upper{Rational(-len(rng))};
    std::vector<Rational> lower;
    for (long i = count(rng); i > 0; --i) upper.emplace_back(num(rng), den(rng));
    for (long i = count(rng); i > 0; --i) lower.emplace_back(num(rng), den(rng));
    std::ranges::shuffle(upper, rng);
    try {
      const HyperSeries s(upper, lower, Rational(num(rng), den(rng)));
      EXPECT_EQ(knuthsum::eval_terminating(s), eval_from_scratch(s)) << s.to_string();
      ++checked;
    } catch (const std::invalid_argument&) {
      // a lower parameter hit the range; draw again
    }
  }
}

TEST(Kummer, EvenExamples) {
  EXPECT_EQ(knuthsum::kummer_even(1, Rational(1)), Rational(1, 3));
  EXPECT_EQ(knuthsum::kummer_even(0, Rational(5, 9)), Rational(1));
  EXPECT_EQ(knuthsum::kummer_even(2, Rational(1, 2)), Rational(3, 8));
  EXPECT_EQ(knuthsum::eval_terminating(knuthsum::kummer_even_series(2, Rational(1, 2))), Rational(3, 8));
  EXPECT_THROW(knuthsum::kummer_even(2, Rational(-1)), std::domain_error);
}

TEST(Kummer, EvenAgainstBruteForce) {
  for (long n = 0; n <= 60; ++n) {
    for (const auto& a : a_grid()) {
      ASSERT_EQ(knuthsum::eval_terminating(knuthsum::kummer_even_series(n, a)), knuthsum::kummer_even(n, a))
          << n << " " << a;
    }
  }
}

TEST(Kummer, OddLengthSeriesVanishes) {
  for (long n = 0; n <= 60; ++n) {
    for (const auto& a : a_grid()) {
      ASSERT_EQ(knuthsum::eval_terminating(knuthsum::kummer_odd_series(n, a)), knuthsum::kummer_odd_zero(n, a))
          << n << " " << a;
    }
  }
  EXPECT_THROW(knuthsum::kummer_odd_zero(3, Rational(-2)), std::domain_error);
}

TEST(Kummer, ShiftedLowerParameterDoesNotVanish) {
  // 2F1[-2n, a; 2a+1 | 2] is not zero: it takes the kummer_even value.
  EXPECT_EQ(knuthsum::eval_terminating(HyperSeries({Rational(-2), Rational(1)}, {Rational(3)}, Rational(2))),
            Rational(1, 3));
  for (long n = 1; n <= 60; ++n) {
    for (const auto& a : a_grid()) {
      const HyperSeries s({Rational(-2 * n), a}, {Rational(2) * a + 1}, Rational(2));
      ASSERT_EQ(knuthsum::eval_terminating(s), knuthsum::kummer_even(n, a)) << n << " " << a;
    }
  }
}

TEST(GaussSecond, TerminatingSeriesForNegativeIntegerA) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> num(-300, 300), den(1, 41);
  for (long n = 0; n <= 40; ++n) {
    const Rational a(-n);
    for (int used = 0; used < 10;) {
      const Rational b(num(rng), den(rng));
      const Rational c = (a + b + 1) / Rational(2);
      // A nonpositive integer c puts a pole in Gamma((a+b+1)/2); the truncated
      // series is then not the limit the Gamma form describes.
      if (c.is_nonpositive_integer()) continue;
      const auto rhs = knuthsum::gauss_second_rhs(a, b);
      if (std::holds_alternative<knuthsum::gamma_value::Pole>(rhs)) continue;
      ++used;
      const Rational lhs = knuthsum::eval_terminating(HyperSeries({a, b}, {c}, Rational(1, 2)));
      ASSERT_EQ(lhs, knuthsum::as_rational(rhs)) << "a=" << a << " b=" << b << " " << knuthsum::to_string(rhs);
      if (n % 2 == 1) {
        EXPECT_TRUE(std::holds_alternative<knuthsum::gamma_value::Zero>(rhs));
      }
    }
  }
}

TEST(Prop2Series, Examples) {
  EXPECT_EQ(knuthsum::eval_terminating(knuthsum::prop2_as_2f1(2, Rational(1))), Rational(1, 4));
  EXPECT_EQ(knuthsum::eval_terminating(knuthsum::prop2_as_2f1(1, Rational(0))), Rational(0));
  EXPECT_EQ(knuthsum::eval_terminating(knuthsum::prop2_as_2f1(0, Rational(3, 7))), Rational(1));
  const auto s = knuthsum::prop2_as_2f1(2, Rational(1));
  EXPECT_EQ(s.upper(), (std::vector<Rational>{Rational(-2), Rational(3, 2)}));
  EXPECT_EQ(s.lower(), (std::vector<Rational>{Rational(3)}));
}
