#pragma once

// Parameter sweeps over the identity catalog and the WZ certificates, with
// JSON-lines / TSV / summary report formatting.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "knuthsum/catalog.hpp"
#include "knuthsum/rational.hpp"
#include "knuthsum/wz.hpp"

namespace knuthsum {

enum class OutputFormat { Json, Tsv, Summary };

/// Invalid sweep configuration; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline OutputFormat parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "tsv") return OutputFormat::Tsv;
  if (s == "summary") return OutputFormat::Summary;
  throw ConfigError("unknown format '" + std::string(s) + "' (expected json, tsv or summary)");
}

/// Splits "a,b,c" and parses each entry as an exact rational.
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

struct SweepConfig {
  std::vector<std::string> identities{"all"};
  long n_max = 20;
  std::vector<Rational> ell_grid = default_ell_grid();
  OutputFormat format = OutputFormat::Summary;
  bool fail_fast = false;
  unsigned jobs = 1;
};

struct SweepResult {
  std::vector<VerificationReport> reports;  ///< sorted by identity, then params
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  bool stopped_early = false;

  /// 0 iff every evaluated case passed, 1 otherwise.
  [[nodiscard]] int exit_status() const { return failed == 0 && !stopped_early ? 0 : 1; }
};

/// Resolves names (or "all") against the catalog; throws ConfigError naming
/// the valid keys on any unknown entry.
inline std::vector<const Identity*> resolve_identities(const std::vector<std::string>& names) {
  std::vector<const Identity*> out;
  for (const auto& name : names) {
    if (name == "all") {
      for (const auto& id : catalog()) out.push_back(&id);
      continue;
    }
    if (const auto* id = find_identity(name)) {
      out.push_back(id);
      continue;
    }
    std::string valid;
    for (const auto& id : catalog()) valid += (valid.empty() ? "" : ", ") + id.name;
    throw ConfigError("unknown identity '" + name + "'; valid keys: all, " + valid);
  }
  std::ranges::sort(out, {}, &Identity::name);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

// Runs task(i) for i in [0, count) on `jobs` threads. Tasks are claimed in
// index order; once `stop` is set no new task starts.
template <class Task>
void run_pool(std::size_t count, unsigned jobs, std::atomic<bool>& stop, Task task) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      task(i);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace detail

inline SweepResult run_sweep(const SweepConfig& config) {
  if (config.n_max < 0) throw ConfigError("--n-max must be nonnegative");
  if (config.jobs == 0) throw ConfigError("--jobs must be positive");
  const auto identities = resolve_identities(config.identities);

  struct Task {
    const Identity* id;
    Params params;
  };
  std::vector<Task> tasks;
  for (const auto* id : identities) {
    auto params = cases(*id, config.n_max, config.ell_grid);
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    for (auto& p : params) tasks.push_back({id, std::move(p)});
  }

  std::vector<std::optional<VerificationReport>> slots(tasks.size());
  std::atomic<bool> stop{false};
  detail::run_pool(tasks.size(), config.jobs, stop, [&](std::size_t i) {
    slots[i] = verify(*tasks[i].id, tasks[i].params);
    if (config.fail_fast && slots[i]->status == Status::Fail) stop.store(true);
  });

  SweepResult result;
  for (auto& slot : slots) {
    if (!slot) {
      result.stopped_early = true;
      continue;
    }
    switch (slot->status) {
      case Status::Pass:
        ++result.passed;
        break;
      case Status::Fail:
        ++result.failed;
        break;
      case Status::Skip:
        ++result.skipped;
        break;
    }
    result.reports.push_back(std::move(*slot));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Report formatting.

inline nlohmann::ordered_json params_to_json(const Identity& id, const Params& p) {
  nlohmann::ordered_json j;
  j[id.index_name] = p.n;
  if (p.ell) j["ell"] = p.ell->to_string();
  if (p.point) j[id.point_name] = p.point->to_string();
  return j;
}

/// Inverse of params_to_json for the given identity.
inline Params params_from_json(const Identity& id, const nlohmann::json& j) {
  Params p;
  p.n = j.at(id.index_name).get<long>();
  if (id.uses_ell) p.ell = Rational::parse(j.at("ell").get<std::string>());
  if (!id.point_name.empty()) p.point = Rational::parse(j.at(id.point_name).get<std::string>());
  return p;
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  const Identity* id = find_identity(r.identity);
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["params"] = id ? params_to_json(*id, r.params) : nlohmann::ordered_json{{"n", r.params.n}};
  j["lhs"] = r.lhs ? nlohmann::ordered_json(r.lhs->to_string()) : nlohmann::ordered_json(nullptr);
  j["rhs"] = r.rhs ? nlohmann::ordered_json(r.rhs->to_string()) : nlohmann::ordered_json(nullptr);
  j["status"] = std::string(to_string(r.status));
  j["micros"] = r.elapsed.count();
  if (!r.reason.empty() && r.status != Status::Pass) j["reason"] = r.reason;
  return j;
}

inline std::string params_to_text(const Identity* id, const Params& p) {
  std::string s = (id ? id->index_name : std::string("n")) + "=" + std::to_string(p.n);
  if (p.ell) s += ";ell=" + p.ell->to_string();
  if (p.point) s += ";" + (id ? id->point_name : std::string("point")) + "=" + p.point->to_string();
  return s;
}

inline void write_report(std::ostream& out, const SweepResult& result, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      for (const auto& r : result.reports) out << report_to_json(r).dump() << '\n';
      break;
    case OutputFormat::Tsv:
      out << "identity\tparams\tlhs\trhs\tstatus\tmicros\n";
      for (const auto& r : result.reports) {
        out << r.identity << '\t' << params_to_text(find_identity(r.identity), r.params) << '\t'
            << (r.lhs ? r.lhs->to_string() : "-") << '\t' << (r.rhs ? r.rhs->to_string() : "-") << '\t'
            << to_string(r.status) << '\t' << r.elapsed.count() << '\n';
      }
      break;
    case OutputFormat::Summary: {
      struct Row {
        long pass = 0, fail = 0, skip = 0;
        long long micros = 0;
      };
      std::map<std::string, Row> rows;
      for (const auto& r : result.reports) {
        auto& row = rows[r.identity];
        (r.status == Status::Pass ? row.pass : r.status == Status::Fail ? row.fail : row.skip) += 1;
        row.micros += r.elapsed.count();
      }
      char line[160];
      std::snprintf(line, sizeof line, "%-26s %8s %8s %8s %12s\n", "identity", "pass", "fail", "skip", "ms");
      out << line;
      for (const auto& [name, row] : rows) {
        std::snprintf(line, sizeof line, "%-26s %8ld %8ld %8ld %12.1f\n", name.c_str(), row.pass, row.fail, row.skip,
                      static_cast<double>(row.micros) / 1000.0);
        out << line;
      }
      std::snprintf(line, sizeof line, "%-26s %8ld %8ld %8ld\n", "total", result.passed, result.failed, result.skipped);
      out << line;
      for (const auto& r : result.reports) {
        if (r.status != Status::Fail) continue;
        out << "FAIL " << r.identity << " " << params_to_text(find_identity(r.identity), r.params) << ": " << r.reason
            << '\n';
      }
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// WZ sweeps.

struct WZSweepResult {
  std::string certificate;
  std::vector<std::pair<WZRowCheck, std::chrono::microseconds>> rows;  ///< sorted by (n, ell)
  long passed = 0;
  long failed = 0;
  long skipped = 0;

  [[nodiscard]] int exit_status() const { return failed == 0 ? 0 : 1; }
};

inline WZSweepResult run_wz_sweep(const WZPair& pair, long n_max, std::vector<Rational> ell_grid, unsigned jobs) {
  if (n_max < 0) throw ConfigError("--n-max must be nonnegative");
  if (jobs == 0) throw ConfigError("--jobs must be positive");
  std::ranges::sort(ell_grid);
  ell_grid.erase(std::unique(ell_grid.begin(), ell_grid.end()), ell_grid.end());

  std::vector<std::pair<long, Rational>> points;
  for (long n = 0; n <= n_max; ++n)
    for (const auto& ell : ell_grid) points.emplace_back(n, ell);

  WZSweepResult result;
  result.certificate = pair.name;
  result.rows.resize(points.size());
  std::atomic<bool> never{false};
  detail::run_pool(points.size(), jobs, never, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    auto row = check_wz_row(pair, points[i].first, points[i].second);
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    result.rows[i] = {std::move(row), elapsed};
  });
  for (const auto& [row, _] : result.rows) {
    if (!row.valid)
      ++result.skipped;
    else if (row.passed())
      ++result.passed;
    else
      ++result.failed;
  }
  return result;
}

inline std::string_view wz_status(const WZRowCheck& row) {
  if (!row.valid) return "skip";
  return row.passed() ? "pass" : "fail";
}

inline void write_wz_report(std::ostream& out, const WZSweepResult& result, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      for (const auto& [row, elapsed] : result.rows) {
        nlohmann::ordered_json j;
        j["certificate"] = result.certificate;
        j["params"] = {{"n", row.n}, {"ell", row.ell.to_string()}};
        j["points_checked"] = row.points_checked;
        j["certificate_poles"] = row.certificate_poles;
        j["nonzero_residual_at"] = row.nonzero_at;
        j["row_sum"] = row.valid ? nlohmann::ordered_json(row.row_sum.to_string()) : nlohmann::ordered_json(nullptr);
        j["status"] = std::string(wz_status(row));
        j["micros"] = elapsed.count();
        out << j.dump() << '\n';
      }
      break;
    case OutputFormat::Tsv:
      out << "certificate\tparams\tpoints_checked\tcertificate_poles\tnonzero_residuals\trow_sum\tstatus\tmicros\n";
      for (const auto& [row, elapsed] : result.rows) {
        out << result.certificate << "\tn=" << row.n << ";ell=" << row.ell << '\t' << row.points_checked << '\t'
            << row.certificate_poles << '\t' << row.nonzero_at.size() << '\t'
            << (row.valid ? row.row_sum.to_string() : "-") << '\t' << wz_status(row) << '\t' << elapsed.count()
            << '\n';
      }
      break;
    case OutputFormat::Summary: {
      long checked = 0, poles = 0, nonzero = 0;
      for (const auto& [row, _] : result.rows) {
        checked += row.points_checked;
        poles += row.certificate_poles;
        nonzero += static_cast<long>(row.nonzero_at.size());
      }
      out << "certificate " << result.certificate << ": " << result.passed << " rows pass, " << result.failed
          << " fail, " << result.skipped << " skipped; " << checked << " residual points checked, " << nonzero
          << " nonzero, " << poles << " at certificate poles\n";
      for (const auto& [row, _] : result.rows) {
        if (!row.valid || row.passed()) continue;
        out << "FAIL n=" << row.n << " ell=" << row.ell << ": " << row.nonzero_at.size() << " nonzero residuals, row sum "
            << row.row_sum << '\n';
      }
      break;
    }
  }
}

}  // namespace knuthsum
