#pragma once

// Terminating generalized hypergeometric series pFq[upper; lower | z],
// evaluated exactly, plus the closed-form 2F1 evaluations at z = 2 that
// follow from Kummer's second formula.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knuthsum/combinatorics.hpp"
#include "knuthsum/rational.hpp"

namespace knuthsum {

class HyperSeries {
 public:
  /// Throws std::invalid_argument unless some upper parameter is a
  /// nonpositive integer and no lower parameter is a nonpositive integer
  /// >= -N, where N is the termination index.
  HyperSeries(std::vector<Rational> upper, std::vector<Rational> lower, Rational argument)
      : upper_(std::move(upper)), lower_(std::move(lower)), argument_(std::move(argument)) {
    std::optional<long> n;
    for (const auto& a : upper_) {
      if (!a.is_nonpositive_integer()) continue;
      // Truncates at the first vanishing Pochhammer.
      const long candidate = -*a.to_long();
      if (!n || candidate < *n) n = candidate;
    }
    if (!n) throw std::invalid_argument("hypergeometric series does not terminate: " + to_string());
    termination_index_ = *n;
    for (const auto& b : lower_) {
      if (b.is_nonpositive_integer() && *b.to_long() >= -termination_index_) {
        throw std::invalid_argument("lower parameter " + b.to_string() + " vanishes within the summation range of " +
                                    to_string());
      }
    }
  }

  [[nodiscard]] const std::vector<Rational>& upper() const { return upper_; }
  [[nodiscard]] const std::vector<Rational>& lower() const { return lower_; }
  [[nodiscard]] const Rational& argument() const { return argument_; }
  [[nodiscard]] long termination_index() const { return termination_index_; }

  [[nodiscard]] std::string to_string() const {
    auto join = [](const std::vector<Rational>& xs) {
      std::string s;
      for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].to_string();
      return s;
    };
    return std::to_string(upper_.size()) + "F" + std::to_string(lower_.size()) + "[" + join(upper_) + "; " +
           join(lower_) + " | " + argument_.to_string() + "]";
  }

 private:
  std::vector<Rational> upper_;
  std::vector<Rational> lower_;
  Rational argument_;
  long termination_index_ = 0;
};

/// sum_{k=0}^{N} prod (a)_k / prod (b)_k * z^k / k!, each term obtained from
/// the previous one by one multiplication or division per parameter.
inline Rational eval_terminating(const HyperSeries& series) {
  Rational sum(0);
  Rational term(1);
  const long n = series.termination_index();
  for (long k = 0; k <= n; ++k) {
    sum += term;
    if (k == n) break;
    for (const auto& a : series.upper()) term *= a + k;
    for (const auto& b : series.lower()) {
      const Rational d = b + k;
      if (d.is_zero()) throw std::domain_error("lower Pochhammer vanishes in " + series.to_string());
      term /= d;
    }
    term *= series.argument();
    term /= Rational(k + 1);
  }
  return sum;
}

namespace detail {
inline bool is_nonpositive_integer_at_least(const Rational& x, long bound) {
  return x.is_nonpositive_integer() && *x.to_long() >= bound;
}
}  // namespace detail

/// 2F1[-2n, a; 2a | 2] = (1/2)_n / (a + 1/2)_n.
inline Rational kummer_even(long n, const Rational& a) {
  if (n < 0) throw std::invalid_argument("kummer_even: n must be nonnegative");
  if (detail::is_nonpositive_integer_at_least(Rational(2) * a, -2 * n)) {
    throw std::domain_error("kummer_even: 2a = " + (Rational(2) * a).to_string() + " is a pole of the series");
  }
  const Rational denominator = pochhammer(a + Rational(1, 2), n);
  if (denominator.is_zero()) throw std::domain_error("kummer_even: (a + 1/2)_n vanishes");
  return pochhammer(Rational(1, 2), n) / denominator;
}

inline HyperSeries kummer_even_series(long n, const Rational& a) {
  return HyperSeries({Rational(-2 * n), a}, {Rational(2) * a}, Rational(2));
}

/// 2F1[-(2n+1), a; 2a | 2] = 0, the odd-length companion of kummer_even.
///
/// This is the vanishing evaluation that makes 2F1[-n, l + 1/2; 2l + 1 | 2]
/// zero for odd n. The series 2F1[-2n, a; 2a + 1 | 2] does not vanish; it
/// takes the same value as kummer_even(n, a).
inline Rational kummer_odd_zero(long n, const Rational& a) {
  if (n < 0) throw std::invalid_argument("kummer_odd_zero: n must be nonnegative");
  if (detail::is_nonpositive_integer_at_least(Rational(2) * a, -(2 * n + 1))) {
    throw std::domain_error("kummer_odd_zero: 2a = " + (Rational(2) * a).to_string() + " is a pole of the series");
  }
  return Rational(0);
}

inline HyperSeries kummer_odd_series(long n, const Rational& a) {
  return HyperSeries({Rational(-(2 * n + 1)), a}, {Rational(2) * a}, Rational(2));
}

/// The free-parameter sum sum_k (-1/2)^k binom(n,k) binom(2k+2l,k) / binom(k+l,k)
/// written as 2F1[-n, l + 1/2; 2l + 1 | 2].
inline HyperSeries prop2_as_2f1(long n, const Rational& ell) {
  if (n < 0) throw std::invalid_argument("prop2_as_2f1: n must be nonnegative");
  return HyperSeries({Rational(-n), ell + Rational(1, 2)}, {Rational(2) * ell + 1}, Rational(2));
}

}  // namespace knuthsum
