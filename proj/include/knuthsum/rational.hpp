#pragma once

// Exact rational numbers over arbitrary-precision integers.
//
// Thin value wrapper around GMP's mpq_class. Every value is kept in lowest
// terms with a positive denominator, and division by zero throws instead of
// trapping.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knuthsum {

class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<long>(value)) {}

  template <std::integral T, std::integral U>
  Rational(T numerator, U denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                       mpz_class(static_cast<long>(denominator)));
    value_.canonicalize();
  }

  Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (sgn(denominator) == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }

  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Evaluates a gmpxx expression template (e.g. a product of mpz_class).
  template <class T, class U>
  explicit Rational(const __gmp_expr<T, U>& expr) : value_(expr) {
    value_.canonicalize();
  }

  /// Parses `p`, `-p`, `p/q` or `-p/q` with decimal integers p, q (q > 0).
  /// Decimal points, exponents and whitespace are rejected so that no
  /// floating-point value is ever silently converted.
  static Rational parse(std::string_view text) {
    auto valid_digits = [](std::string_view s) {
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!valid_digits(num) || !valid_digits(den)) {
      throw std::invalid_argument("not an exact rational literal (expected p or p/q): '" + std::string(text) + "'");
    }
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (sgn(q) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (negative) p = -p;
    return Rational(p, q);
  }

  [[nodiscard]] const mpq_class& raw() const { return value_; }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] bool is_nonpositive_integer() const { return is_integer() && sign() <= 0; }

  /// Integer value if this is an integer that fits in a long.
  [[nodiscard]] std::optional<long> to_long() const {
    if (!is_integer() || !value_.get_num().fits_slong_p()) return std::nullopt;
    return value_.get_num().get_si();
  }

  [[nodiscard]] mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
  }

  /// Fractional part in [0, 1).
  [[nodiscard]] Rational frac() const { return *this - Rational(floor()); }

  /// Canonical `p/q` form; integers print without a denominator.
  [[nodiscard]] std::string to_string() const { return value_.get_str(10); }

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
  }

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

 private:
  mpq_class value_{0};
};

/// x^e for any integer exponent; 0^0 = 1, 0^negative throws.
inline Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace knuthsum

template <>
struct std::hash<knuthsum::Rational> {
  std::size_t operator()(const knuthsum::Rational& x) const noexcept {
    return std::hash<std::string>{}(x.to_string());
  }
};
