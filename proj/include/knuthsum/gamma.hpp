#pragma once

// Exact reduction of formal Gamma products at rational arguments.
//
// A GammaExpr is scalar * prod Gamma(x_i)^{e_i}. reduce() groups the factors
// by x mod 1 and collapses each group onto a single reference argument with
// Pochhammer ratios. The integer group is evaluated with factorials, keeping
// track of the net order of poles at nonpositive integers; the half-integer
// group is evaluated in units of sqrt(pi). Any other group whose exponents do
// not cancel is left as an irreducible residual.

#include <map>
#include <stdexcept>
#include <string>
#include <variant>

#include "knuthsum/combinatorics.hpp"
#include "knuthsum/rational.hpp"

namespace knuthsum {

class GammaExpr {
 public:
  GammaExpr() = default;
  explicit GammaExpr(Rational scalar) : scalar_(std::move(scalar)) {}

  /// Multiplies by Gamma(argument)^exponent, merging with an existing factor.
  GammaExpr& gamma(const Rational& argument, int exponent = 1) {
    if (exponent == 0) return *this;
    auto [it, inserted] = factors_.try_emplace(argument, 0);
    it->second += exponent;
    if (it->second == 0) factors_.erase(it);
    return *this;
  }

  GammaExpr& inverse_gamma(const Rational& argument, int exponent = 1) { return gamma(argument, -exponent); }

  GammaExpr& scale(const Rational& s) {
    scalar_ *= s;
    return *this;
  }

  GammaExpr& operator*=(const GammaExpr& rhs) {
    scalar_ *= rhs.scalar_;
    for (const auto& [arg, e] : rhs.factors_) gamma(arg, e);
    return *this;
  }
  friend GammaExpr operator*(GammaExpr lhs, const GammaExpr& rhs) { return lhs *= rhs; }

  [[nodiscard]] const Rational& scalar() const { return scalar_; }
  /// Argument -> nonzero exponent; no duplicate arguments.
  [[nodiscard]] const std::map<Rational, int>& factors() const { return factors_; }

  [[nodiscard]] std::string to_string() const {
    std::string out = scalar_.to_string();
    for (const auto& [arg, e] : factors_) {
      out += " * Gamma(" + arg.to_string() + ")";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  friend bool operator==(const GammaExpr&, const GammaExpr&) = default;

 private:
  Rational scalar_{1};
  std::map<Rational, int> factors_;
};

namespace gamma_value {

/// q * pi^(s/2), q != 0.
struct Finite {
  Rational q;
  int s = 0;
  friend bool operator==(const Finite&, const Finite&) = default;
};
struct Zero {
  friend bool operator==(const Zero&, const Zero&) = default;
};
struct Pole {
  friend bool operator==(const Pole&, const Pole&) = default;
};
/// Exact value still containing Gamma at arguments other than integers and
/// half-integers; `residual` carries the collapsed product.
struct Irreducible {
  GammaExpr residual;
  friend bool operator==(const Irreducible&, const Irreducible&) = default;
};

}  // namespace gamma_value

using GammaValue = std::variant<gamma_value::Finite, gamma_value::Zero, gamma_value::Pole, gamma_value::Irreducible>;

/// Coefficient c with Gamma(x) = c * sqrt(pi) for half-integer x:
///   Gamma(m + 1/2) = (2m)! / (4^m m!)
///   Gamma(1/2 - m) = (-4)^m m! / (2m)!
inline Rational gamma_half_integer_coefficient(const Rational& x) {
  const Rational m_rational = x - Rational(1, 2);
  const auto m = m_rational.to_long();
  if (!m) throw std::invalid_argument("gamma_half_integer_coefficient: not a half-integer: " + x.to_string());
  if (*m >= 0) {
    const auto mu = static_cast<unsigned long>(*m);
    return Rational(factorial(2 * mu), factorial(mu) * (mpz_class(1) << static_cast<mp_bitcnt_t>(2 * mu)));
  }
  const auto mu = static_cast<unsigned long>(-*m);
  mpz_class num = factorial(mu) << static_cast<mp_bitcnt_t>(2 * mu);
  if (mu % 2 == 1) num = -num;
  return Rational(num, factorial(2 * mu));
}

namespace detail {

// Gamma(x) / Gamma(reference) for x - reference a (possibly negative) integer
// and no nonpositive integers in between.
inline Rational gamma_ratio_to_reference(const Rational& x, const Rational& reference) {
  const long shift = *(x - reference).to_long();
  if (shift >= 0) return pochhammer(reference, shift);
  return Rational(1) / pochhammer(x, -shift);
}

}  // namespace detail

inline GammaValue reduce(const GammaExpr& expr) {
  const Rational half(1, 2);

  Rational coefficient = expr.scalar();
  int pole_order = 0;  // > 0: net pole in the numerator, < 0: in the denominator
  int sqrt_pi_power = 0;
  std::map<Rational, int> residual;  // fractional part -> exponent of Gamma(fractional part)

  for (const auto& [x, e] : expr.factors()) {
    const Rational f = x.frac();
    Rational value;
    if (f.is_zero()) {
      const long n = *x.to_long();
      if (n >= 1) {
        value = Rational(factorial(static_cast<unsigned long>(n - 1)));
      } else {
        // Gamma(-m + eps) ~ (-1)^m / (m! eps)
        const auto m = static_cast<unsigned long>(-n);
        value = Rational(mpz_class(m % 2 == 0 ? 1 : -1), factorial(m));
        pole_order += e;
      }
    } else if (f == half) {
      value = gamma_half_integer_coefficient(x);
      sqrt_pi_power += e;
    } else {
      value = detail::gamma_ratio_to_reference(x, f);
      residual[f] += e;
    }
    coefficient *= pow(value, e);
  }

  if (coefficient.is_zero()) {
    if (pole_order > 0) return gamma_value::Irreducible{expr};
    return gamma_value::Zero{};
  }
  if (pole_order > 0) return gamma_value::Pole{};
  if (pole_order < 0) return gamma_value::Zero{};

  GammaExpr leftover(coefficient);
  for (const auto& [f, e] : residual) leftover.gamma(f, e);
  if (!leftover.factors().empty()) {
    leftover.gamma(half, sqrt_pi_power);
    return gamma_value::Irreducible{std::move(leftover)};
  }
  return gamma_value::Finite{coefficient, sqrt_pi_power};
}

/// Right-hand side of Gauss's second summation theorem,
///   2F1[a, b; (a+b+1)/2 | 1/2] = Gamma(1/2) Gamma((a+b+1)/2) / (Gamma((a+1)/2) Gamma((b+1)/2)).
inline GammaValue gauss_second_rhs(const Rational& a, const Rational& b) {
  const Rational half(1, 2);
  GammaExpr expr;
  expr.gamma(half).gamma((a + b + 1) * half).inverse_gamma((a + 1) * half).inverse_gamma((b + 1) * half);
  return reduce(expr);
}

/// The rational value of a GammaValue that is Finite with s = 0 or Zero.
/// Throws for anything involving pi, a pole or an irreducible residual.
inline Rational as_rational(const GammaValue& v) {
  if (std::holds_alternative<gamma_value::Zero>(v)) return Rational(0);
  if (const auto* f = std::get_if<gamma_value::Finite>(&v); f && f->s == 0) return f->q;
  throw std::domain_error("Gamma product does not reduce to a rational number");
}

inline std::string to_string(const GammaValue& v) {
  struct Visitor {
    std::string operator()(const gamma_value::Finite& f) const {
      return "Finite(" + f.q.to_string() + ", " + std::to_string(f.s) + ")";
    }
    std::string operator()(const gamma_value::Zero&) const { return "Zero"; }
    std::string operator()(const gamma_value::Pole&) const { return "Pole"; }
    std::string operator()(const gamma_value::Irreducible& i) const { return "Irreducible(" + i.residual.to_string() + ")"; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace knuthsum
