#pragma once

// Combinatorial primitives over exact rationals: Pochhammer symbols,
// falling-factorial binomials with rational upper argument, factorials and
// (odd) harmonic numbers.

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "knuthsum/rational.hpp"

namespace knuthsum {

/// Rising factorial (x)_k = x(x+1)...(x+k-1), with (x)_0 = 1.
inline Rational pochhammer(const Rational& x, long k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational result(1);
  Rational factor = x;
  for (long i = 0; i < k; ++i) {
    result *= factor;
    if (result.is_zero()) break;
    factor += 1;
  }
  return result;
}

inline mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

/// Ordinary binomial coefficient for integer n and k >= 0 (n may be negative,
/// following the falling-factorial convention); zero for k < 0.
inline mpz_class binomial(long n, long k) {
  if (k < 0) return 0;
  mpz_class b;
  mpz_bin_ui(b.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(k));
  return b;
}

/// Generalized binomial a(a-1)...(a-m+1)/m! for rational a and integer m.
/// gbinom(a, 0) = 1 and gbinom(a, m) = 0 for m < 0.
///
/// A binomial with non-integer lower index, binom(n+l, k+l), is reached
/// through the integer-difference symmetry binom(n+l, k+l) = gbinom(n+l, n-k).
inline Rational gbinom(const Rational& a, long m) {
  if (m < 0) return Rational(0);
  if (auto ai = a.to_long()) return Rational(binomial(*ai, m));
  Rational num(1);
  Rational factor = a;
  for (long i = 0; i < m; ++i) {
    num *= factor;
    factor -= 1;
  }
  return num / Rational(factorial(static_cast<unsigned long>(m)));
}

/// binom(2k+2l, k) = gbinom(2k+2l, k) = (k+2l+1)_k / k!.
inline Rational binom2k_shift(long k, const Rational& ell) {
  return gbinom(Rational(2 * k) + Rational(2) * ell, k);
}

/// Grow-on-demand table of H_n = 1 + 1/2 + ... + 1/n and
/// O_r = 1 + 1/3 + ... + 1/(2r-1).
///
/// Readers take a shared lock; growth takes the exclusive lock and appends,
/// so each new index costs one addition.
class HarmonicCache {
 public:
  Rational harmonic(std::size_t n) { return lookup(h_, n, [](std::size_t i) { return Rational(1, static_cast<long>(i)); }); }

  Rational odd_harmonic(std::size_t r) {
    return lookup(o_, r, [](std::size_t i) { return Rational(1, 2 * static_cast<long>(i) - 1); });
  }

 private:
  template <class Step>
  Rational lookup(std::vector<Rational>& table, std::size_t index, Step step) {
    {
      std::shared_lock lock(mutex_);
      if (index < table.size()) return table[index];
    }
    std::unique_lock lock(mutex_);
    if (table.empty()) table.emplace_back(0);
    while (table.size() <= index) {
      const std::size_t i = table.size();
      table.push_back(table.back() + step(i));
    }
    return table[index];
  }

  std::shared_mutex mutex_;
  std::vector<Rational> h_;
  std::vector<Rational> o_;
};

inline HarmonicCache& harmonic_cache() {
  static HarmonicCache cache;
  return cache;
}

inline Rational harmonic(std::size_t n) { return harmonic_cache().harmonic(n); }
inline Rational odd_harmonic(std::size_t r) { return harmonic_cache().odd_harmonic(r); }

}  // namespace knuthsum
