// Batch verification runner: executes named suites with seeded randomness
// and writes machine-readable reports.
//
//   sqf verify <suite> [--seed N] [--config FILE] [--format json|csv]
//              [--out PATH]
//   sqf list
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 usage or configuration error.

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "sqf/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"graded field-operator verification suites"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "enumerate available suites");

  std::string suite;
  std::string config_path;
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  auto* verify = app.add_subcommand("verify", "run one suite (or 'all')");
  verify->add_option("suite", suite, "suite name")->required();
  auto* seed_opt = verify->add_option("--seed", seed, "PRNG seed");
  verify->add_option("--config", config_path, "JSON config file");
  verify->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", out_path, "report path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  seed_set = seed_opt->count() > 0;

  if (list->parsed()) {
    for (const auto& name : sqf::cli::suite_names()) std::puts(name.c_str());
    return 0;
  }

  try {
    sqf::cli::SuiteConfig cfg =
        config_path.empty() ? sqf::cli::SuiteConfig::defaults()
                            : sqf::cli::SuiteConfig::from_json_file(config_path);
    if (seed_set) cfg.seed = seed;
    const sqf::cli::Report report = sqf::cli::run_suite(suite, cfg);
    if (out_path.empty()) {
      std::cout << (format == "json" ? sqf::cli::to_json(report)
                                     : sqf::cli::to_csv(report));
    } else {
      sqf::cli::emit(report, format, out_path);
    }
    int failed = 0;
    for (const auto& c : report.checks)
      if (!c.passed) ++failed;
    if (failed > 0) {
      std::cerr << failed << " check(s) failed in suite " << report.suite
                << "\n";
      return 1;
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
