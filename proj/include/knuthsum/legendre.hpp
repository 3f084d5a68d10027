#pragma once

// Shifted Legendre polynomials P_n(2x-1) in monomial form, their exact
// moments against x^p and x^{-1/2} ln x, and the odd-harmonic analogue of
// the Reed Dawson identity that those moments yield.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "knuthsum/combinatorics.hpp"
#include "knuthsum/gamma.hpp"
#include "knuthsum/rational.hpp"
#include "knuthsum/sides.hpp"

namespace knuthsum {

/// Dense polynomial, coefficients[j] multiplies x^j.
using Polynomial = std::vector<Rational>;

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

struct ShiftedLegendre {
  long n = 0;
  /// coeffs[j] is the x^j coefficient of P_n(2x-1).
  Polynomial coeffs;
};

/// Expands P_n(2x-1) = sum_k binom(n,k)^2 (x-1)^{n-k} x^k by polynomial
/// multiplication.
inline ShiftedLegendre shifted_legendre(long n) {
  if (n < 0) throw std::invalid_argument("shifted_legendre: n must be nonnegative");
  const auto un = static_cast<std::size_t>(n);
  const Polynomial x_minus_one{Rational(-1), Rational(1)};

  std::vector<Polynomial> powers{Polynomial{Rational(1)}};  // (x-1)^j
  powers.reserve(un + 1);
  for (std::size_t j = 1; j <= un; ++j) powers.push_back(multiply(powers.back(), x_minus_one));

  Polynomial coeffs(un + 1, Rational(0));
  for (long k = 0; k <= n; ++k) {
    const mpz_class b = binomial(n, k);
    const Rational weight(mpz_class(b * b));
    const Polynomial& p = powers[un - static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < p.size(); ++j) coeffs[j + static_cast<std::size_t>(k)] += weight * p[j];
  }
  return {n, std::move(coeffs)};
}

/// int_0^1 x^p P_n(2x-1) dx = Gamma(p+1)^2 / (Gamma(p-n+1) Gamma(p+n+2)), p > -1.
inline GammaValue moment(const Rational& p, long n) {
  if (p <= Rational(-1)) throw std::domain_error("moment: p must exceed -1, got " + p.to_string());
  if (n < 0) throw std::invalid_argument("moment: n must be nonnegative");
  GammaExpr expr;
  expr.gamma(p + 1, 2).inverse_gamma(p - n + 1).inverse_gamma(p + n + 2);
  return reduce(expr);
}

/// Term-by-term integral sum_j coeffs[j] / (p + j + 1) with p = p_num / p_den.
inline Rational moment_exact_by_expansion(long p_num, long p_den, long n) {
  const Rational p(p_num, p_den);
  if (p <= Rational(-1)) throw std::domain_error("moment_exact_by_expansion: p must exceed -1");
  const auto legendre = shifted_legendre(n);
  Rational sum(0);
  for (std::size_t j = 0; j < legendre.coeffs.size(); ++j) {
    sum += legendre.coeffs[j] / (p + static_cast<long>(j) + 1);
  }
  return sum;
}

/// int_0^1 ln(x)/sqrt(x) P_n(2x-1) dx two ways. The left side integrates the
/// monomial expansion with int_0^1 x^{j-1/2} ln x dx = -4/(2j+1)^2; the right
/// side is
///   4(-1)^n H_n/(2n+1) - 8(-1)^n H_{2n}/(2n+1) - 4(-1)^n/(2n+1)^2.
inline Sides log_moment_sqrt(long n) {
  const auto legendre = shifted_legendre(n);
  Rational lhs(0);
  for (std::size_t j = 0; j < legendre.coeffs.size(); ++j) {
    const long d = 2 * static_cast<long>(j) + 1;
    lhs += legendre.coeffs[j] * Rational(-4, d * d);
  }
  const Rational sign(n % 2 == 0 ? 1 : -1);
  const long m = 2 * n + 1;
  const auto un = static_cast<std::size_t>(n);
  const Rational rhs = sign * (Rational(4) * harmonic(un) / Rational(m) - Rational(8) * harmonic(2 * un) / Rational(m) -
                               Rational(4, m * m));
  return {lhs, rhs};
}

/// sum_{k=0}^{n} (-1/4)^k binom(n,k) binom(2k,k) O_k = -(1/4)^n binom(2n,n) O_n.
inline Sides identity_odd_knuth(long n) {
  if (n < 0) throw std::invalid_argument("odd-harmonic-knuth: n must be nonnegative");
  Rational lhs(0);
  Rational weight(1);
  for (long k = 0; k <= n; ++k) {
    lhs += weight * Rational(binomial(n, k) * binomial(2 * k, k)) * odd_harmonic(static_cast<std::size_t>(k));
    weight *= Rational(-1, 4);
  }
  const Rational rhs = -Rational(binomial(2 * n, n)) / pow(Rational(4), n) * odd_harmonic(static_cast<std::size_t>(n));
  return {lhs, rhs};
}

}  // namespace knuthsum
