#pragma once

// Modified Abel lemma on summation by parts, at a finite cutoff M:
//
//   sum_{i=1}^{M} B_i (A_i - A_{i-1})
//     = A_M B_{M+1} - A_0 B_1 + sum_{i=1}^{M} A_i (B_i - B_{i+1}).
//
// The boundary term A_M B_{M+1} stands in for lim A_m B_{m+1}; for compactly
// supported A it equals that limit once M passes the support.

#include <functional>
#include <stdexcept>

#include "knuthsum/combinatorics.hpp"
#include "knuthsum/identities.hpp"
#include "knuthsum/rational.hpp"
#include "knuthsum/sides.hpp"

namespace knuthsum {

struct SequencePair {
  std::function<Rational(long)> a;
  std::function<Rational(long)> b;
  long cutoff = 0;  ///< M; both sequences are evaluated on 0..M+1
};

/// sum_{i=1}^{M} B_i (A_i - A_{i-1}).
inline Rational abel_lhs(const SequencePair& pair) {
  Rational sum(0);
  Rational previous = pair.a(0);
  for (long i = 1; i <= pair.cutoff; ++i) {
    Rational current = pair.a(i);
    sum += pair.b(i) * (current - previous);
    previous = std::move(current);
  }
  return sum;
}

/// A_M B_{M+1} - A_0 B_1 + sum_{i=1}^{M} A_i (B_i - B_{i+1}).
inline Rational abel_rhs(const SequencePair& pair) {
  const long m = pair.cutoff;
  Rational sum = pair.a(m) * pair.b(m + 1) - pair.a(0) * pair.b(1);
  Rational b_i = pair.b(1);
  for (long i = 1; i <= m; ++i) {
    Rational b_next = pair.b(i + 1);
    sum += pair.a(i) * (b_i - b_next);
    b_i = std::move(b_next);
  }
  return sum;
}

inline Rational abel_transform_residual(const SequencePair& pair) {
  if (pair.cutoff < 0) throw std::invalid_argument("abel_transform_residual: negative cutoff");
  return abel_lhs(pair) - abel_rhs(pair);
}

/// A_i = -(i - n)(-n)_i / (n i!),  B_i = 2^i (l + 1/2)_i / (2l + 1)_i.
/// A vanishes for i >= n, so cutoff n already covers the whole support.
inline SequencePair reed_dawson_abel_pair(long n, const Rational& ell, long cutoff) {
  if (n < 1) throw std::invalid_argument("reed_dawson_abel_pair: n must be positive");
  SequencePair pair;
  pair.cutoff = cutoff;
  pair.a = [n](long i) {
    return -Rational(i - n) * pochhammer(Rational(-n), i) / (Rational(n) * Rational(factorial(static_cast<unsigned long>(i))));
  };
  pair.b = [ell](long i) {
    return pow(Rational(2), i) * pochhammer(ell + Rational(1, 2), i) / pochhammer(Rational(2) * ell + 1, i);
  };
  return pair;
}

/// k + 2l + 1 must not vanish for 0 <= k <= n, on top of the exclusions of
/// the underlying shifted Reed Dawson sum.
inline bool abel1_valid(long n, const Rational& ell) {
  const Rational shift = Rational(2) * ell + 1;
  if (shift.is_nonpositive_integer() && *shift.to_long() >= -n) return false;
  return prop1_valid(n, ell);
}

/// sum_k (-1/2)^k binom(n+l, k+l) binom(2k+2l, k) k(n-k)/(k+2l+1)
///   = -2^{-n} n binom(n+l, n/2) for even n, 0 otherwise.
inline Sides identity_abel1(long n, const Rational& ell) {
  if (n < 0) throw std::invalid_argument("abel-first: n must be nonnegative");
  if (!abel1_valid(n, ell)) throw std::domain_error("abel-first: l = " + ell.to_string() + " excluded");
  const auto upper = detail::gbinom_row(Rational(n) + ell, n);
  const auto central = binom2k_shift_table(n, ell);
  const Rational two_ell = Rational(2) * ell;
  Rational lhs(0);
  Rational weight(1);
  for (long k = 0; k <= n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    lhs += weight * upper[static_cast<std::size_t>(n - k)] * central[uk] * Rational(k * (n - k)) / (two_ell + k + 1);
    weight *= Rational(-1, 2);
  }
  const Rational rhs = n % 2 == 0 ? -Rational(n) * gbinom(Rational(n) + ell, n / 2) / pow(Rational(2), n) : Rational(0);
  return {lhs, rhs};
}

/// sum_k (-1/2)^k binom(2k,k) binom(n,k) (2k+1)(k^2+3k+3)(n-k) / ((k+1)^2 (k+2)(k+3))
///   = 1/2 - binom(n, n/2)(n+1) / (2^n (n+2)) for even n, 1/2 for odd n.
inline Sides identity_abel2(long n) {
  if (n < 0) throw std::invalid_argument("abel-second: n must be nonnegative");
  Rational lhs(0);
  Rational weight(1);
  for (long k = 0; k <= n; ++k) {
    const Rational factor((2 * k + 1) * (k * k + 3 * k + 3) * (n - k), (k + 1) * (k + 1) * (k + 2) * (k + 3));
    lhs += weight * Rational(binomial(2 * k, k) * binomial(n, k)) * factor;
    weight *= Rational(-1, 2);
  }
  Rational rhs(1, 2);
  if (n % 2 == 0) rhs -= Rational(binomial(n, n / 2) * (n + 1)) / (pow(Rational(2), n) * Rational(n + 2));
  return {lhs, rhs};
}

}  // namespace knuthsum
