#include <gtest/gtest.h>

#include <random>
#include <thread>
#include <vector>

#include "knuthsum/combinatorics.hpp"

using knuthsum::Rational;

TEST(Pochhammer, Examples) {
  EXPECT_EQ(knuthsum::pochhammer(Rational(1, 2), 0), Rational(1));
  EXPECT_EQ(knuthsum::pochhammer(Rational(-2), 2), Rational(2));
  EXPECT_EQ(knuthsum::pochhammer(Rational(-2), 3), Rational(0));
}

TEST(Pochhammer, Recurrence) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12), len(1, 25);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational x(num(rng), den(rng));
    const long k = len(rng);
    EXPECT_EQ(knuthsum::pochhammer(x, k), knuthsum::pochhammer(x, k - 1) * (x + Rational(k - 1)));
  }
}

TEST(Gbinom, Examples) {
  EXPECT_EQ(knuthsum::gbinom(Rational(5, 2), 2), Rational(15, 8));
  EXPECT_EQ(knuthsum::gbinom(Rational(7), 3), Rational(35));
  EXPECT_EQ(knuthsum::gbinom(Rational(5, 2), 0), Rational(1));
  EXPECT_EQ(knuthsum::gbinom(Rational(-1), 3), Rational(-1));
  EXPECT_EQ(knuthsum::gbinom(Rational(3), 5), Rational(0));
}

TEST(Gbinom, MatchesFactorialFormula) {
  for (long a = 0; a <= 40; ++a) {
    for (long m = 0; m <= a; ++m) {
      const Rational expected(knuthsum::factorial(static_cast<unsigned long>(a)),
                              knuthsum::factorial(static_cast<unsigned long>(m)) *
                                  knuthsum::factorial(static_cast<unsigned long>(a - m)));
      ASSERT_EQ(knuthsum::gbinom(Rational(a), m), expected) << a << " " << m;
    }
  }
}

TEST(Gbinom, PascalRule) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 9), len(1, 30);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a(num(rng), den(rng));
    const long m = len(rng);
    EXPECT_EQ(knuthsum::gbinom(a, m), knuthsum::gbinom(a - 1, m) + knuthsum::gbinom(a - 1, m - 1));
  }
}

TEST(Gbinom, IntegerDifferenceSymmetry) {
  // binom(n + l, k + l) read through the Gamma function equals binom(n + l, n - k).
  for (const auto& ell : {Rational(1, 3), Rational(-1, 4), Rational(7, 5)}) {
    for (long n = 0; n <= 12; ++n) {
      for (long k = 0; k <= n; ++k) {
        const Rational via_gamma = knuthsum::pochhammer(ell + Rational(k + 1), n - k) /
                                   Rational(knuthsum::factorial(static_cast<unsigned long>(n - k)));
        EXPECT_EQ(knuthsum::gbinom(Rational(n) + ell, n - k), via_gamma);
      }
    }
  }
}

TEST(Binom2kShift, Examples) {
  EXPECT_EQ(knuthsum::binom2k_shift(1, Rational(1, 2)), Rational(3));
  EXPECT_EQ(knuthsum::binom2k_shift(2, Rational(1)), Rational(15));
  EXPECT_EQ(knuthsum::binom2k_shift(0, Rational(-7, 3)), Rational(1));
}

TEST(Binom2kShift, PochhammerForm) {
  for (const auto& ell : {Rational(-1, 3), Rational(0), Rational(1, 2), Rational(2)}) {
    for (long k = 0; k <= 30; ++k) {
      const Rational expected = knuthsum::pochhammer(Rational(2) * ell + Rational(k + 1), k) /
                                Rational(knuthsum::factorial(static_cast<unsigned long>(k)));
      EXPECT_EQ(knuthsum::binom2k_shift(k, ell), expected);
    }
  }
}

TEST(Harmonic, Examples) {
  EXPECT_EQ(knuthsum::harmonic(0), Rational(0));
  EXPECT_EQ(knuthsum::harmonic(2), Rational(3, 2));
  EXPECT_EQ(knuthsum::harmonic(4), Rational(25, 12));
  EXPECT_EQ(knuthsum::odd_harmonic(0), Rational(0));
  EXPECT_EQ(knuthsum::odd_harmonic(2), Rational(4, 3));
}

TEST(Harmonic, OddHarmonicRelation) {
  for (std::size_t k = 0; k <= 300; ++k) {
    ASSERT_EQ(knuthsum::odd_harmonic(k), knuthsum::harmonic(2 * k) - knuthsum::harmonic(k) / Rational(2));
  }
}

TEST(Harmonic, ConcurrentReaders) {
  std::vector<Rational> expected;
  Rational h(0);
  expected.push_back(h);
  for (long n = 1; n <= 2000; ++n) expected.push_back(h += Rational(1, n));

  std::vector<std::jthread> threads;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t n = static_cast<std::size_t>(t); n <= 2000; n += 3) {
        if (knuthsum::harmonic(n) != expected[n]) ++mismatches;
      }
    });
  }
  threads.clear();
  EXPECT_EQ(mismatches.load(), 0);
}
