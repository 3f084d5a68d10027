#pragma once

// Pointwise verification of Wilf-Zeilberger certificates.
//
// For a summand F(n, k) and certificate R(n, k), G = R F must satisfy
//
//   F(n+1, k) - F(n, k) = G(n, k+1) - G(n, k)
//
// at every (n, k). F is extended by zero outside its declared support, so
// summing over k telescopes to sum_k F(n+1, k) = sum_k F(n, k).

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knuthsum/combinatorics.hpp"
#include "knuthsum/rational.hpp"

namespace knuthsum {

struct WZPair {
  std::string name;
  /// F(n, k, l) on its support; never called outside it.
  std::function<Rational(long n, long k, const Rational& ell)> summand;
  std::function<bool(long n, long k)> support;
  std::function<Rational(long n, long k, const Rational& ell)> certificate_numerator;
  std::function<Rational(long n, long k, const Rational& ell)> certificate_denominator;
  /// Whether F(n, .) is defined (and normalized) at this l.
  std::function<bool(long n, const Rational& ell)> valid;

  [[nodiscard]] Rational f(long n, long k, const Rational& ell) const {
    return support(n, k) ? summand(n, k, ell) : Rational(0);
  }
};

/// Either an exact residual or the marker that the certificate's denominator
/// vanishes at one of the two G evaluations the residual needs.
struct WZResidual {
  Rational value;
  bool certificate_pole = false;
};

namespace detail {
// G(n, k) = R(n, k) F(n, k); nullopt where R's denominator is zero.
inline std::optional<Rational> wz_companion(const WZPair& pair, long n, long k, const Rational& ell) {
  const Rational den = pair.certificate_denominator(n, k, ell);
  if (den.is_zero()) return std::nullopt;
  const Rational f = pair.f(n, k, ell);
  if (f.is_zero()) return Rational(0);
  return pair.certificate_numerator(n, k, ell) / den * f;
}
}  // namespace detail

inline WZResidual wz_residual(const WZPair& pair, long n, long k, const Rational& ell) {
  const auto g_next = detail::wz_companion(pair, n, k + 1, ell);
  const auto g_here = detail::wz_companion(pair, n, k, ell);
  if (!g_next || !g_here) return {Rational(0), true};
  return {pair.f(n + 1, k, ell) - pair.f(n, k, ell) - *g_next + *g_here, false};
}

/// sum_k F(n, k) for n = 0..n_max, summed over the support window 0..2n.
inline std::vector<Rational> wz_sum_constant(const WZPair& pair, long n_max, const Rational& ell) {
  std::vector<Rational> sums;
  for (long n = 0; n <= n_max; ++n) {
    Rational s(0);
    for (long k = 0; k <= 2 * n; ++k) s += pair.f(n, k, ell);
    sums.push_back(std::move(s));
  }
  return sums;
}

/// Outcome of checking one row n of the residual grid -1 <= k <= 2n+3.
struct WZRowCheck {
  long n = 0;
  Rational ell;
  long points_checked = 0;
  long certificate_poles = 0;
  std::vector<long> nonzero_at;  ///< k values with a nonzero residual
  Rational row_sum;
  bool valid = true;

  [[nodiscard]] bool passed() const { return !valid || (nonzero_at.empty() && row_sum == Rational(1)); }
};

inline WZRowCheck check_wz_row(const WZPair& pair, long n, const Rational& ell) {
  WZRowCheck row;
  row.n = n;
  row.ell = ell;
  if (!pair.valid(n, ell) || !pair.valid(n + 1, ell)) {
    row.valid = false;
    return row;
  }
  for (long k = -1; k <= 2 * n + 3; ++k) {
    const auto r = wz_residual(pair, n, k, ell);
    if (r.certificate_pole) {
      ++row.certificate_poles;
      continue;
    }
    ++row.points_checked;
    if (!r.value.is_zero()) row.nonzero_at.push_back(k);
  }
  for (long k = 0; k <= 2 * n; ++k) row.row_sum += pair.f(n, k, ell);
  return row;
}

// ---------------------------------------------------------------------------
// Registered certificates.

namespace detail {

inline bool in_window(long n, long k) { return k >= 0 && k <= 2 * n; }

// -k(k + 2l + numerator_shift) / ((k - 2n - 1 - a)(k - 2n - 2 - b))
inline WZPair with_certificate(WZPair pair, long numerator_shift, long a, long b) {
  pair.certificate_numerator = [numerator_shift](long, long k, const Rational& ell) {
    return -Rational(k) * (Rational(k + numerator_shift) + Rational(2) * ell);
  };
  pair.certificate_denominator = [a, b](long n, long k, const Rational&) {
    return Rational((k - 2 * n - 1 - a) * (k - 2 * n - 2 - b));
  };
  return pair;
}

}  // namespace detail

/// F(n, k) = binom(2n+l, k+l) binom(2k+2l, k) 4^n (-1/2)^k / binom(2n+l, n),
/// the even-index shifted Reed Dawson summand divided by its closed form, with
/// R = -k(k+2l) / ((-2n+k-1)(-2n+k-2)).
inline WZPair register_prop1_certificate() {
  WZPair pair;
  pair.name = "prop1";
  pair.support = detail::in_window;
  pair.summand = [](long n, long k, const Rational& ell) {
    const Rational top = Rational(2 * n) + ell;
    return gbinom(top, 2 * n - k) * binom2k_shift(k, ell) * pow(Rational(4), n) * pow(Rational(-1, 2), k) /
           gbinom(top, n);
  };
  pair.valid = [](long n, const Rational& ell) { return !gbinom(Rational(2 * n) + ell, n).is_zero(); };
  return detail::with_certificate(std::move(pair), 0, 0, 0);
}

/// F(n, k) = (-1/2)^k binom(2n,k) binom(2k+2l,k) / binom(k+l,k) divided by
/// 4^{-n} binom(2n,n) / binom(n+l,n), with R = -k(k+2l) / ((k-2n-2)(k-2n-1)).
inline WZPair register_prop2_certificate() {
  WZPair pair;
  pair.name = "prop2";
  pair.support = detail::in_window;
  pair.summand = [](long n, long k, const Rational& ell) {
    const Rational term =
        pow(Rational(-1, 2), k) * Rational(binomial(2 * n, k)) * binom2k_shift(k, ell) / gbinom(ell + k, k);
    const Rational closed_form = Rational(binomial(2 * n, n)) / pow(Rational(4), n) / gbinom(ell + n, n);
    return term / closed_form;
  };
  pair.valid = [](long n, const Rational& ell) {
    const auto v = ell.to_long();
    return !(v && *v >= -2 * n && *v <= -1);
  };
  return detail::with_certificate(std::move(pair), 0, 0, 0);
}

/// The first certificate with numerator k(k + 2l + 1); must fail.
inline WZPair register_negative_control() {
  auto pair = detail::with_certificate(register_prop1_certificate(), 1, 0, 0);
  pair.name = "negative-control";
  return pair;
}

/// The second certificate with denominator (k-2n-1)(k-2n-3); must fail.
inline WZPair register_negative_control_prop2() {
  auto pair = detail::with_certificate(register_prop2_certificate(), 0, 0, 1);
  pair.name = "negative-control-prop2";
  return pair;
}

/// Certificate names accepted by the CLI, sorted.
inline std::vector<std::string> certificate_names() {
  return {"negative-control", "negative-control-prop2", "prop1", "prop2"};
}

inline std::optional<WZPair> find_certificate(std::string_view name) {
  if (name == "prop1") return register_prop1_certificate();
  if (name == "prop2") return register_prop2_certificate();
  if (name == "negative-control") return register_negative_control();
  if (name == "negative-control-prop2") return register_negative_control_prop2();
  return std::nullopt;
}

}  // namespace knuthsum
