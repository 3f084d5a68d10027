#pragma once

// Brute-force left-hand sides and closed-form right-hand sides of the
// Reed Dawson family of binomial and binomial-harmonic sums.
//
// Left-hand sides are plain finite sums. Where a factor is updated from k to
// k+1 by a ratio, the ratio only divides by integers or by quantities the
// validity predicate already keeps away from zero.

#include <stdexcept>
#include <vector>

#include "knuthsum/combinatorics.hpp"
#include "knuthsum/rational.hpp"
#include "knuthsum/sides.hpp"

namespace knuthsum {

namespace detail {

inline void require_nonnegative(long n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": index must be nonnegative");
}

inline bool is_integer_in(const Rational& x, long lo, long hi) {
  const auto v = x.to_long();
  return v && *v >= lo && *v <= hi;
}

// gbinom(a, j) for j = 0..m.
inline std::vector<Rational> gbinom_row(const Rational& a, long m) {
  std::vector<Rational> row;
  row.reserve(static_cast<std::size_t>(m) + 1);
  row.emplace_back(1);
  for (long j = 0; j < m; ++j) row.push_back(row.back() * (a - j) / Rational(j + 1));
  return row;
}

}  // namespace detail

/// binom2k_shift(k, ell) for k = 0..n.
inline std::vector<Rational> binom2k_shift_table(long n, const Rational& ell) {
  std::vector<Rational> table;
  table.reserve(static_cast<std::size_t>(n) + 1);
  table.emplace_back(1);
  const Rational two_ell = Rational(2) * ell;
  for (long k = 0; k < n; ++k) {
    // binom(2k+2+2l, k+1) / binom(2k+2l, k) = (2k+2l+2)(2k+2l+1) / ((k+1)(k+2l+1))
    const Rational d = two_ell + k + 1;
    if (d.is_zero() || table.back().is_zero()) {
      table.push_back(binom2k_shift(k + 1, ell));
    } else {
      table.push_back(table.back() * (two_ell + 2 * k + 2) * (two_ell + 2 * k + 1) / (Rational(k + 1) * d));
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Reed Dawson identity (Knuth's old sum).

inline Sides identity_knuth_old(long n) {
  detail::require_nonnegative(n, "knuth-old-sum");
  Rational lhs(0);
  Rational weight(1);
  for (long k = 0; k <= n; ++k) {
    lhs += weight * Rational(binomial(n, k) * binomial(2 * k, k));
    weight *= Rational(-1, 2);
  }
  const Rational rhs = n % 2 == 0 ? Rational(binomial(n, n / 2)) / pow(Rational(2), n) : Rational(0);
  return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Free-parameter generalizations.

/// The shifted sum is a polynomial in ell; negative integers -n..-1 are still
/// excluded because binom(n+l, k+l) is ambiguous there.
inline bool prop1_valid(long n, const Rational& ell) { return !detail::is_integer_in(ell, -n, -1); }

/// sum_k (-1/2)^k binom(n+l, k+l) binom(2k+2l, k), with
/// binom(n+l, k+l) read as gbinom(n+l, n-k).
inline Rational lhs_prop1(long n, const Rational& ell) {
  const auto upper = detail::gbinom_row(Rational(n) + ell, n);
  const auto central = binom2k_shift_table(n, ell);
  Rational sum(0);
  Rational weight(1);
  for (long k = 0; k <= n; ++k) {
    sum += weight * upper[static_cast<std::size_t>(n - k)] * central[static_cast<std::size_t>(k)];
    weight *= Rational(-1, 2);
  }
  return sum;
}

/// 2^{-n} gbinom(n+l, n/2) for even n, 0 for odd n.
inline Rational rhs_prop1(long n, const Rational& ell) {
  if (n % 2 != 0) return Rational(0);
  return gbinom(Rational(n) + ell, n / 2) / pow(Rational(2), n);
}

inline Sides identity_prop1(long n, const Rational& ell) {
  detail::require_nonnegative(n, "prop1-general-ell");
  if (!prop1_valid(n, ell)) throw std::domain_error("prop1-general-ell: l = " + ell.to_string() + " excluded");
  return {lhs_prop1(n, ell), rhs_prop1(n, ell)};
}

/// binom(k+l, k) = (l+1)_k / k! must not vanish for k <= n, which also covers
/// the even-case denominator binom(n/2+l, n/2).
inline bool prop2_valid(long n, const Rational& ell) { return !detail::is_integer_in(ell, -n, -1); }

/// sum_k (-1/2)^k binom(n,k) binom(2k+2l,k) / binom(k+l,k).
inline Rational lhs_prop2(long n, const Rational& ell) {
  const auto central = binom2k_shift_table(n, ell);
  Rational sum(0);
  Rational weight(1);
  Rational lower(1);  // binom(k+l, k)
  for (long k = 0; k <= n; ++k) {
    sum += weight * Rational(binomial(n, k)) * central[static_cast<std::size_t>(k)] / lower;
    weight *= Rational(-1, 2);
    lower *= (ell + k + 1) / Rational(k + 1);
  }
  return sum;
}

/// 2^{-n} binom(n, n/2) / binom(n/2+l, n/2) for even n, 0 for odd n.
inline Rational rhs_prop2(long n, const Rational& ell) {
  if (n % 2 != 0) return Rational(0);
  return Rational(binomial(n, n / 2)) / pow(Rational(2), n) / gbinom(Rational(n / 2) + ell, n / 2);
}

inline Sides identity_prop2(long n, const Rational& ell) {
  detail::require_nonnegative(n, "prop2-general-ell");
  if (!prop2_valid(n, ell)) throw std::domain_error("prop2-general-ell: l = " + ell.to_string() + " excluded");
  return {lhs_prop2(n, ell), rhs_prop2(n, ell)};
}

// ---------------------------------------------------------------------------
// Binomial-harmonic sums.

/// sum_{k=0}^{2n} (-1/2)^k binom(2k,k) binom(2n,k) (3H_k - 2H_{2k}) = 4^{-n} binom(2n,n) H_n.
inline Sides identity_example31(long n) {
  detail::require_nonnegative(n, "example-3hk-2h2k");
  Rational lhs(0);
  Rational weight(1);
  for (long k = 0; k <= 2 * n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    lhs += weight * Rational(binomial(2 * k, k) * binomial(2 * n, k)) * (Rational(3) * harmonic(uk) - Rational(2) * harmonic(2 * uk));
    weight *= Rational(-1, 2);
  }
  const Rational rhs = Rational(binomial(2 * n, n)) / pow(Rational(4), n) * harmonic(static_cast<std::size_t>(n));
  return {lhs, rhs};
}

/// sum_{k=0}^{m} (-2)^k binom(m,k) H_k / (k+1) = -2 O_{(m+1)/2} / (m+1) for odd m, 0 for even m.
inline Sides identity_corollary(long m) {
  detail::require_nonnegative(m, "corollary-odd-harmonic");
  Rational lhs(0);
  mpz_class weight = 1;
  for (long k = 0; k <= m; ++k) {
    lhs += Rational(weight * binomial(m, k)) * harmonic(static_cast<std::size_t>(k)) / Rational(k + 1);
    weight *= -2;
  }
  const Rational rhs =
      m % 2 == 1 ? Rational(-2, m + 1) * odd_harmonic(static_cast<std::size_t>((m + 1) / 2)) : Rational(0);
  return {lhs, rhs};
}

/// sum_{k=0}^{2n} (-2)^k binom(2n+1,k) H_k / (k+1)
///   = (4^n - 1) H_{2n} / (n+1) + H_n / (2(n+1)) + (4^n - 1) / ((n+1)(2n+1)).
inline Sides identity_corollary_intermediate(long n) {
  detail::require_nonnegative(n, "corollary-intermediate");
  Rational lhs(0);
  mpz_class weight = 1;
  for (long k = 0; k <= 2 * n; ++k) {
    lhs += Rational(weight * binomial(2 * n + 1, k)) * harmonic(static_cast<std::size_t>(k)) / Rational(k + 1);
    weight *= -2;
  }
  const Rational four_n_minus_1 = pow(Rational(4), n) - 1;
  const auto un = static_cast<std::size_t>(n);
  const Rational rhs = four_n_minus_1 * harmonic(2 * un) / Rational(n + 1) + harmonic(un) / Rational(2 * (n + 1)) +
                       four_n_minus_1 / Rational((n + 1) * (2 * n + 1));
  return {lhs, rhs};
}

/// sum_{k=0}^{2n} (-1/2)^k binom(2n,k) 4^k x^k / (k+1)
///   = (2x(1-2x)^{2n} - (1-2x)^{2n} + 1) / (2(2n+1)x),
/// with the removable singularity at x = 0 filled by its limit 1.
inline Sides identity_gf_polynomial(long n, const Rational& x) {
  detail::require_nonnegative(n, "gf-polynomial");
  Rational lhs(0);
  const Rational step = Rational(-2) * x;  // (-1/2) * 4 * x
  Rational power(1);
  for (long k = 0; k <= 2 * n; ++k) {
    lhs += power * Rational(binomial(2 * n, k)) / Rational(k + 1);
    power *= step;
  }
  Rational rhs(1);
  if (!x.is_zero()) {
    const Rational base = pow(Rational(1) - Rational(2) * x, 2 * n);
    rhs = (Rational(2) * x * base - base + 1) / (Rational(2 * (2 * n + 1)) * x);
  }
  return {lhs, rhs};
}

/// 2n+1 distinct nonzero sample points (2j - 2n + 1)/(2n + 1), j = 0..2n, in (-1, 1].
/// Agreement at all of them proves the degree-2n polynomial identity.
inline std::vector<Rational> gf_polynomial_points(long n) {
  std::vector<Rational> points;
  for (long j = 0; j <= 2 * n; ++j) points.emplace_back(2 * j - 2 * n + 1, 2 * n + 1);
  return points;
}

/// sum_{k=0}^{2n} (-1)^k binom(2n,k) binom(2n+k,k) binom(2k,k) 4^{2n-k} H_k = binom(2n,n)^2 H_{2n}.
inline Sides identity_tauraso(long n) {
  detail::require_nonnegative(n, "tauraso-h2n");
  Rational lhs(0);
  for (long k = 0; k <= 2 * n; ++k) {
    mpz_class term = binomial(2 * n, k) * binomial(2 * n + k, k) * binomial(2 * k, k);
    term <<= static_cast<mp_bitcnt_t>(2 * (2 * n - k));
    if (k % 2 == 1) term = -term;
    lhs += Rational(term) * harmonic(static_cast<std::size_t>(k));
  }
  const mpz_class c = binomial(2 * n, n);
  const Rational rhs = Rational(mpz_class(c * c)) * harmonic(2 * static_cast<std::size_t>(n));
  return {lhs, rhs};
}

}  // namespace knuthsum
