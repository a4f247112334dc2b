#include "sqf/report.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sqf/common.hpp"

namespace sqf::cli {

namespace {

const std::map<std::string, double> kDefaultTolerances = {
    {"algebra", 1e-12},        {"homomorphism", 1e-10},
    {"fiber", 1e-10},          {"imprimitivity", 1e-12},
    {"cocycle", 1e-10},        {"quadrature", 1e-8},
    {"mc_relative", 1e-2},     {"pairing_relative", 1e-6},
    {"ground_energy", 1e-4},   {"ladder_ratio", 0.5},
};

const std::map<std::string, int> kDefaultCutoffs = {
    {"fock", 8},
    {"parity", 8},
    {"qstoch_bin", 2},
};

const std::map<std::string, int> kDefaultGrids = {
    {"witten", 2048},
    {"qstoch_bins", 32},
    {"mc_samples", 1000000},
    {"trials", 100},
};

template <typename Map>
void check_known_keys(const nlohmann::json& obj, const Map& allowed,
                      const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (allowed.find(it.key()) == allowed.end())
      throw std::invalid_argument("config: unknown key '" + it.key() +
                                  "' in " + where);
  }
}

}  // namespace

SuiteConfig SuiteConfig::defaults() {
  SuiteConfig cfg;
  cfg.tolerances = kDefaultTolerances;
  cfg.cutoffs = kDefaultCutoffs;
  cfg.grid_sizes = kDefaultGrids;
  cfg.suites = suite_names();
  cfg.suites.pop_back();  // drop the "all" alias
  return cfg;
}

SuiteConfig SuiteConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config: parse error: ") +
                                e.what());
  }
  SuiteConfig cfg = defaults();
  static const std::map<std::string, int> top = {{"seed", 0},
                                                 {"tolerances", 0},
                                                 {"cutoffs", 0},
                                                 {"gridSizes", 0},
                                                 {"suites", 0}};
  check_known_keys(j, top, "top level");
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("tolerances")) {
    check_known_keys(j["tolerances"], kDefaultTolerances, "tolerances");
    for (auto it = j["tolerances"].begin(); it != j["tolerances"].end(); ++it)
      cfg.tolerances[it.key()] = it.value().get<double>();
  }
  if (j.contains("cutoffs")) {
    check_known_keys(j["cutoffs"], kDefaultCutoffs, "cutoffs");
    for (auto it = j["cutoffs"].begin(); it != j["cutoffs"].end(); ++it)
      cfg.cutoffs[it.key()] = it.value().get<int>();
  }
  if (j.contains("gridSizes")) {
    check_known_keys(j["gridSizes"], kDefaultGrids, "gridSizes");
    for (auto it = j["gridSizes"].begin(); it != j["gridSizes"].end(); ++it)
      cfg.grid_sizes[it.key()] = it.value().get<int>();
  }
  if (j.contains("suites")) {
    cfg.suites.clear();
    const auto known = suite_names();
    for (const auto& s : j["suites"]) {
      const std::string name = s.get<std::string>();
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw std::invalid_argument("config: unknown suite '" + name + "'");
      cfg.suites.push_back(name);
    }
  }
  return cfg;
}

double SuiteConfig::tol(const std::string& key) const {
  auto it = tolerances.find(key);
  require(it != tolerances.end(), "config: unknown tolerance " + key);
  return it->second;
}

int SuiteConfig::cutoff(const std::string& key) const {
  auto it = cutoffs.find(key);
  require(it != cutoffs.end(), "config: unknown cutoff " + key);
  return it->second;
}

int SuiteConfig::grid(const std::string& key) const {
  auto it = grid_sizes.find(key);
  require(it != grid_sizes.end(), "config: unknown grid size " + key);
  return it->second;
}

std::string to_json(const Report& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["wallTimeMs"] = r.wall_time_ms;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    jc["residual"] = c.residual;
    jc["tolerance"] = c.tolerance;
    jc["details"] = c.details;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

Report parse_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.wall_time_ms = j.at("wallTimeMs").get<std::int64_t>();
  for (const auto& jc : j.at("checks")) {
    CheckResult c;
    c.name = jc.at("name").get<std::string>();
    c.passed = jc.at("passed").get<bool>();
    c.residual = jc.at("residual").get<double>();
    c.tolerance = jc.at("tolerance").get<double>();
    c.details = jc.at("details").get<std::string>();
    r.checks.push_back(c);
  }
  return r;
}

std::string to_csv(const Report& r) {
  std::ostringstream out;
  const auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += "\"\"";
      else q += ch;
    }
    return q + "\"";
  };
  out << "suite,check,passed,residual,tolerance,details\n";
  out.precision(17);
  for (const auto& c : r.checks) {
    out << r.suite << ',' << c.name << ',' << (c.passed ? "true" : "false")
        << ',' << c.residual << ',' << c.tolerance << ',' << quote(c.details)
        << '\n';
  }
  return out.str();
}

void emit(const Report& r, const std::string& format,
          const std::string& path) {
  std::string payload;
  if (format == "json") {
    payload = to_json(r);
  } else if (format == "csv") {
    payload = to_csv(r);
  } else {
    throw std::invalid_argument("emit: format must be json or csv");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit: cannot open " + path);
  out << payload;
  if (!out) throw std::runtime_error("emit: write failed for " + path);
}

}  // namespace sqf::cli
