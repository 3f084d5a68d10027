#pragma once

// Registry of every verified identity: a brute-force left side, a closed-form
// right side and a validity predicate over a typed parameter space.

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "knuthsum/abel.hpp"
#include "knuthsum/gamma.hpp"
#include "knuthsum/hypergeometric.hpp"
#include "knuthsum/identities.hpp"
#include "knuthsum/legendre.hpp"
#include "knuthsum/rational.hpp"

namespace knuthsum {

/// One parameter assignment. `ell` is present iff the identity has the free
/// rational parameter; `point` iff it is sampled at extra rational points.
struct Params {
  long n = 0;
  std::optional<Rational> ell;
  std::optional<Rational> point;

  friend bool operator==(const Params&, const Params&) = default;
  friend bool operator<(const Params& a, const Params& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.ell != b.ell) return a.ell < b.ell;
    return a.point < b.point;
  }
};

enum class Status { Pass, Fail, Skip };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skip:
      return "skip";
  }
  return "?";
}

struct Identity {
  std::string name;       ///< stable kebab-case key
  std::string label;      ///< short human-readable title
  std::string statement;  ///< the identity, one line of plain text
  std::string index_name = "n";
  bool uses_ell = false;
  std::string point_name;  ///< empty when there are no sample points
  std::function<std::vector<Rational>(long n)> points;
  std::function<bool(const Params&)> valid = [](const Params&) { return true; };
  std::function<Rational(const Params&)> lhs;
  std::function<Rational(const Params&)> rhs;
};

struct VerificationReport {
  std::string identity;
  Params params;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  Status status = Status::Skip;
  std::string reason;
  std::chrono::microseconds elapsed{0};
};

/// {-1/3, -1/4, 0, 1/4, 1/3, 1/2, 1, 3/2, 2, 7/5}
inline std::vector<Rational> default_ell_grid() {
  return {Rational(-1, 3), Rational(-1, 4), Rational(0),    Rational(1, 4), Rational(1, 3),
          Rational(1, 2),  Rational(1),     Rational(3, 2), Rational(2),    Rational(7, 5)};
}

/// Integers and half-integers in (-1, 10].
inline std::vector<Rational> moment_exponent_grid() {
  std::vector<Rational> grid;
  for (long twice = -1; twice <= 20; ++twice) grid.emplace_back(twice, 2);
  return grid;
}

namespace detail {

template <class F>
Identity simple_identity(std::string name, std::string label, std::string statement, F sides) {
  Identity id;
  id.name = std::move(name);
  id.label = std::move(label);
  id.statement = std::move(statement);
  id.lhs = [sides](const Params& p) { return sides(p).lhs; };
  id.rhs = [sides](const Params& p) { return sides(p).rhs; };
  return id;
}

inline std::vector<Identity> build_catalog() {
  std::vector<Identity> ids;

  {
    auto id = simple_identity("abel-first", "Abel summation-by-parts variant of the shifted sum",
                              "sum_k (-1/2)^k binom(n+l,k+l) binom(2k+2l,k) k(n-k)/(k+2l+1) = -2^-n n binom(n+l,n/2) "
                              "(n even), 0 (n odd)",
                              [](const Params& p) { return identity_abel1(p.n, *p.ell); });
    id.uses_ell = true;
    id.valid = [](const Params& p) { return abel1_valid(p.n, *p.ell); };
    ids.push_back(std::move(id));
  }
  ids.push_back(simple_identity("abel-second", "Abel summation-by-parts rational-weight sum",
                                "sum_k (-1/2)^k binom(2k,k) binom(n,k) (2k+1)(k^2+3k+3)(n-k)/((k+1)^2(k+2)(k+3)) = "
                                "1/2 - binom(n,n/2)(n+1)/(2^n(n+2)) (n even), 1/2 (n odd)",
                                [](const Params& p) { return identity_abel2(p.n); }));
  ids.push_back(simple_identity("corollary-intermediate", "Harmonic sum over binom(2n+1,k), k <= 2n",
                                "sum_{k=0}^{2n} (-2)^k binom(2n+1,k) H_k/(k+1) = (4^n-1)H_{2n}/(n+1) + H_n/(2(n+1)) "
                                "+ (4^n-1)/((n+1)(2n+1))",
                                [](const Params& p) { return identity_corollary_intermediate(p.n); }));
  {
    auto id = simple_identity("corollary-odd-harmonic", "Alternating harmonic sum with odd harmonic closed form",
                              "sum_{k=0}^m (-2)^k binom(m,k) H_k/(k+1) = -2 O_{(m+1)/2}/(m+1) (m odd), 0 (m even)",
                              [](const Params& p) { return identity_corollary(p.n); });
    id.index_name = "m";
    ids.push_back(std::move(id));
  }
  ids.push_back(simple_identity("example-3hk-2h2k", "Reed Dawson harmonic sum with weight 3H_k - 2H_2k",
                                "sum_{k=0}^{2n} (-1/2)^k binom(2k,k) binom(2n,k) (3H_k - 2H_{2k}) = 4^-n binom(2n,n) H_n",
                                [](const Params& p) { return identity_example31(p.n); }));
  {
    auto id = simple_identity("gf-polynomial", "Generating polynomial of the weighted binomial row",
                              "sum_{k=0}^{2n} (-1/2)^k binom(2n,k) 4^k x^k/(k+1) = (2x(1-2x)^{2n} - (1-2x)^{2n} + 1)/"
                              "(2(2n+1)x)",
                              [](const Params& p) { return identity_gf_polynomial(p.n, *p.point); });
    id.point_name = "x";
    id.points = gf_polynomial_points;
    ids.push_back(std::move(id));
  }
  ids.push_back(simple_identity("knuth-old-sum", "Reed Dawson identity (Knuth's old sum)",
                                "sum_k (-1/2)^k binom(n,k) binom(2k,k) = 2^-n binom(n,n/2) (n even), 0 (n odd)",
                                [](const Params& p) { return identity_knuth_old(p.n); }));
  ids.push_back(simple_identity("legendre-log-moment", "Log-sqrt moment of the shifted Legendre polynomial",
                                "int_0^1 ln(x)/sqrt(x) P_n(2x-1) dx = 4(-1)^n H_n/(2n+1) - 8(-1)^n H_{2n}/(2n+1) - "
                                "4(-1)^n/(2n+1)^2",
                                [](const Params& p) { return log_moment_sqrt(p.n); }));
  {
    Identity id;
    id.name = "legendre-moment";
    id.label = "Monomial moment of the shifted Legendre polynomial";
    id.statement = "int_0^1 x^p P_n(2x-1) dx = Gamma(p+1)^2/(Gamma(p-n+1) Gamma(p+n+2))";
    id.point_name = "p";
    id.points = [](long) { return moment_exponent_grid(); };
    id.valid = [](const Params& p) { return *p.point > Rational(-1); };
    id.lhs = [](const Params& p) {
      const auto& q = *p.point;
      return moment_exact_by_expansion(q.numerator().get_si(), q.denominator().get_si(), p.n);
    };
    id.rhs = [](const Params& p) { return as_rational(moment(*p.point, p.n)); };
    ids.push_back(std::move(id));
  }
  ids.push_back(simple_identity("odd-harmonic-knuth", "Odd harmonic analogue of Knuth's old sum",
                                "sum_k (-1/4)^k binom(n,k) binom(2k,k) O_k = -(1/4)^n binom(2n,n) O_n",
                                [](const Params& p) { return identity_odd_knuth(p.n); }));
  {
    auto id = simple_identity("prop1-general-ell", "Reed Dawson identity with a shift parameter",
                              "sum_k (-1/2)^k binom(n+l,k+l) binom(2k+2l,k) = 2^-n binom(n+l,n/2) (n even), 0 (n odd)",
                              [](const Params& p) { return identity_prop1(p.n, *p.ell); });
    id.uses_ell = true;
    id.valid = [](const Params& p) { return prop1_valid(p.n, *p.ell); };
    ids.push_back(std::move(id));
  }
  {
    Identity id;
    id.name = "prop2-as-2f1";
    id.label = "Free-parameter sum as a terminating 2F1 at z = 2";
    id.statement = "sum_k (-1/2)^k binom(n,k) binom(2k+2l,k)/binom(k+l,k) = 2F1[-n, l+1/2; 2l+1 | 2]";
    id.uses_ell = true;
    id.valid = [](const Params& p) {
      const Rational lower = Rational(2) * *p.ell + 1;
      return prop2_valid(p.n, *p.ell) && !(lower.is_nonpositive_integer() && *lower.to_long() >= -p.n);
    };
    id.lhs = [](const Params& p) { return lhs_prop2(p.n, *p.ell); };
    id.rhs = [](const Params& p) { return eval_terminating(prop2_as_2f1(p.n, *p.ell)); };
    ids.push_back(std::move(id));
  }
  {
    auto id = simple_identity("prop2-general-ell", "Reed Dawson identity with a free parameter in a ratio of binomials",
                              "sum_k (-1/2)^k binom(n,k) binom(2k+2l,k)/binom(k+l,k) = 2^-n binom(n,n/2)/"
                              "binom(n/2+l,n/2) (n even), 0 (n odd)",
                              [](const Params& p) { return identity_prop2(p.n, *p.ell); });
    id.uses_ell = true;
    id.valid = [](const Params& p) { return prop2_valid(p.n, *p.ell); };
    ids.push_back(std::move(id));
  }
  ids.push_back(simple_identity("tauraso-h2n", "Tauraso's central binomial harmonic sum",
                                "sum_{k=0}^{2n} (-1)^k binom(2n,k) binom(2n+k,k) binom(2k,k) 4^{2n-k} H_k = "
                                "binom(2n,n)^2 H_{2n}",
                                [](const Params& p) { return identity_tauraso(p.n); }));

  std::ranges::sort(ids, {}, &Identity::name);
  return ids;
}

}  // namespace detail

/// All registered identities, sorted by name. Immutable after first use.
inline const std::vector<Identity>& catalog() {
  static const std::vector<Identity> ids = detail::build_catalog();
  return ids;
}

inline const Identity* find_identity(std::string_view name) {
  for (const auto& id : catalog())
    if (id.name == name) return &id;
  return nullptr;
}

/// Every case for n = 0..n_max: crossed with the ell grid when the identity
/// has a free parameter, and with its sample points when it has them.
inline std::vector<Params> cases(const Identity& id, long n_max, std::span<const Rational> ell_grid) {
  std::vector<Params> out;
  for (long n = 0; n <= n_max; ++n) {
    std::vector<std::optional<Rational>> ells{std::nullopt};
    if (id.uses_ell) ells.assign(ell_grid.begin(), ell_grid.end());
    std::vector<std::optional<Rational>> points{std::nullopt};
    if (id.points) {
      auto ps = id.points(n);
      points.assign(ps.begin(), ps.end());
    }
    for (const auto& ell : ells)
      for (const auto& point : points) out.push_back(Params{n, ell, point});
  }
  return out;
}

/// Evaluates both sides of `id` at `params` and compares them exactly.
/// Cases outside the validity region are skipped; evaluator exceptions are
/// recorded as failures.
inline VerificationReport verify(const Identity& id, const Params& params) {
  VerificationReport report;
  report.identity = id.name;
  report.params = params;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (!id.valid(params)) {
      report.status = Status::Skip;
      report.reason = "outside validity region";
    } else {
      report.lhs = id.lhs(params);
      report.rhs = id.rhs(params);
      report.status = *report.lhs == *report.rhs ? Status::Pass : Status::Fail;
      if (report.status == Status::Fail) report.reason = "lhs != rhs";
    }
  } catch (const std::exception& e) {
    report.status = Status::Fail;
    report.reason = e.what();
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace knuthsum
