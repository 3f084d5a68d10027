#pragma once

// Command-line front end: `verify`, `wz` and `list`.
//
// Exit codes: 0 all pass, 1 any failure, 2 usage or configuration error.

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "knuthsum/catalog.hpp"
#include "knuthsum/sweep.hpp"
#include "knuthsum/wz.hpp"

namespace knuthsum {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::vector<std::string> split_names(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& entry : raw) {
    std::size_t start = 0;
    while (start <= entry.size()) {
      const auto comma = entry.find(',', start);
      auto item = entry.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!item.empty()) out.push_back(std::move(item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

inline void write_list(std::ostream& out, bool as_json) {
  if (as_json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& id : catalog()) {
      nlohmann::ordered_json params = nlohmann::ordered_json::array({id.index_name});
      if (id.uses_ell) params.push_back("ell");
      if (!id.point_name.empty()) params.push_back(id.point_name);
      arr.push_back({{"name", id.name}, {"label", id.label}, {"statement", id.statement}, {"params", params}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  for (const auto& id : catalog()) {
    out << id.name << std::string(id.name.size() < 26 ? 26 - id.name.size() : 1, ' ') << id.label << '\n'
        << std::string(26, ' ') << id.statement << '\n';
  }
}

}  // namespace detail

/// Runs the CLI on `args` (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Reed Dawson type binomial and harmonic sum identities"};
  app.name("knuthsum");
  app.require_subcommand(1);

  std::vector<std::string> identity_names{"all"};
  long n_max = 20;
  std::string ell_text;
  std::string format_text = "summary";
  bool fail_fast = false;
  unsigned jobs = 1;

  auto* verify_cmd = app.add_subcommand("verify", "Verify identities over a parameter sweep");
  verify_cmd->add_option("--identity", identity_names, "Identity keys (comma separated or repeated), or 'all'");
  verify_cmd->add_option("--n-max", n_max, "Largest index n (default 20)");
  verify_cmd->add_option("--ell", ell_text, "Comma-separated exact rationals p/q for the free parameter");
  verify_cmd->add_option("--format", format_text, "json | tsv | summary");
  verify_cmd->add_flag("--fail-fast", fail_fast, "Stop scheduling cases after the first failure");
  verify_cmd->add_option("--jobs", jobs, "Worker threads");

  std::string certificate;
  long wz_n_max = 30;
  std::string wz_ell_text;
  std::string wz_format_text = "summary";
  unsigned wz_jobs = 1;
  auto* wz_cmd = app.add_subcommand("wz", "Check a WZ certificate on the residual grid and its row sums");
  wz_cmd->add_option("--certificate", certificate, "prop1 | prop2 | negative-control | negative-control-prop2")
      ->required();
  wz_cmd->add_option("--n-max", wz_n_max, "Largest n (default 30)");
  wz_cmd->add_option("--ell", wz_ell_text, "Comma-separated exact rationals p/q");
  wz_cmd->add_option("--format", wz_format_text, "json | tsv | summary");
  wz_cmd->add_option("--jobs", wz_jobs, "Worker threads");

  std::string list_format = "text";
  auto* list_cmd = app.add_subcommand("list", "List registered identities");
  list_cmd->add_option("--format", list_format, "text | json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*list_cmd) {
      if (list_format != "text" && list_format != "json") throw ConfigError("unknown list format '" + list_format + "'");
      detail::write_list(out, list_format == "json");
      return kExitPass;
    }

    if (*verify_cmd) {
      SweepConfig config;
      config.identities = detail::split_names(identity_names);
      if (config.identities.empty()) throw ConfigError("no identity given");
      config.n_max = n_max;
      if (!ell_text.empty()) config.ell_grid = parse_rational_list(ell_text);
      config.format = parse_format(format_text);
      config.fail_fast = fail_fast;
      config.jobs = jobs;
      const auto result = run_sweep(config);
      write_report(out, result, config.format);
      if (result.passed == 0 && result.failed == 0 && !result.reports.empty()) {
        err << "warning: every case was outside its validity region and skipped\n";
      }
      return result.exit_status() == 0 ? kExitPass : kExitFail;
    }

    if (*wz_cmd) {
      const auto pair = find_certificate(certificate);
      if (!pair) {
        std::string valid;
        for (const auto& name : certificate_names()) valid += (valid.empty() ? "" : ", ") + name;
        throw ConfigError("unknown certificate '" + certificate + "'; valid names: " + valid);
      }
      const auto grid = wz_ell_text.empty() ? default_ell_grid() : parse_rational_list(wz_ell_text);
      const auto format = parse_format(wz_format_text);
      const auto result = run_wz_sweep(*pair, wz_n_max, grid, wz_jobs);
      write_wz_report(out, result, format);
      return result.exit_status() == 0 ? kExitPass : kExitFail;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace knuthsum
