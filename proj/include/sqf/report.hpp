#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sqf::cli {

/// Knobs of the verification suites.  Every key has a default; unknown keys
/// in a config file are rejected.
struct SuiteConfig {
  std::uint64_t seed = 7041776;
  std::map<std::string, double> tolerances;
  std::map<std::string, int> cutoffs;
  std::map<std::string, int> grid_sizes;
  std::vector<std::string> suites;

  static SuiteConfig defaults();
  static SuiteConfig from_json_file(const std::string& path);

  double tol(const std::string& key) const;
  int cutoff(const std::string& key) const;
  int grid(const std::string& key) const;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string details;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;
  std::int64_t wall_time_ms = 0;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

std::vector<std::string> suite_names();

/// Run one named suite (or "all") with the deterministic per-suite stream
/// derived from (seed, suite name).  Throws std::invalid_argument for unknown
/// names or malformed configs.
Report run_suite(const std::string& name, const SuiteConfig& cfg);

std::string to_json(const Report& r);
std::string to_csv(const Report& r);
Report parse_json(const std::string& text);

/// Write the report; format is "json" or "csv".
void emit(const Report& r, const std::string& format, const std::string& path);

}  // namespace sqf::cli
