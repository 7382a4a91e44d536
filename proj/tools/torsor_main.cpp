#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "torsor/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"torsor: exact verifier for quantum torsors and Hopf-Galois systems"};
  app.require_subcommand(1);

  std::string spec_path, report_path, cache_dir, log_level = "quiet";
  int degree_bound = -1;
  bool no_cache = false;

  CLI::App* run_cmd = app.add_subcommand("run", "run the checks of a suite file");
  run_cmd->add_option("spec", spec_path, "suite spec (JSON)")->required();
  run_cmd->add_option("--report", report_path, "write the JSON report to this file");
  run_cmd->add_option("--cache-dir", cache_dir,
                      "completion cache directory (default: $TORSOR_CACHE_DIR)");
  run_cmd->add_option("--degree-bound", degree_bound, "override the spec degree bound");
  run_cmd->add_flag("--no-cache", no_cache, "disable the completion cache");
  run_cmd->add_option("--log-level", log_level, "quiet | info | debug");

  CLI11_PARSE(app, argc, argv);

  try {
    torsor::SuiteSpec spec = torsor::parse_spec(spec_path);
    torsor::RunOptions options;
    options.cache_dir = cache_dir;
    options.no_cache = no_cache;
    if (degree_bound > 0) options.degree_bound = degree_bound;
    options.log_level = log_level == "debug" ? 2 : (log_level == "info" ? 1 : 0);

    torsor::RunOutcome outcome = torsor::run(spec, options);
    std::string json = torsor::report_to_json(outcome);
    if (report_path.empty()) {
      std::cout << json;
    } else {
      std::ofstream out(report_path);
      out << json;
    }
    return outcome.exit_code;
  } catch (const torsor::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 64;
  } catch (const torsor::ValidationError& e) {
    std::cerr << "invalid suite: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
}
