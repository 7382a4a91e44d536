#pragma once

#include "torsor/verifier.hpp"

namespace torsor {

/// One verification job: which family to build, from which datum, and which
/// check groups to run, in the declared order.
struct SuiteSpec {
  std::string suite;  // kashiwara | sridharan | uq_hopf | custom
  std::optional<CartanDatum> cartan;
  std::optional<LieDatum> lie;
  CocycleSpec cocycle;
  int degree_bound = 8;
  std::vector<std::string> checks;
  CompletionBudget budget;
  OracleBudget oracle_budget;
  // map name -> (generator name -> tensor expression)
  std::map<std::string, std::map<std::string, std::string>> overrides;
};

/// Parses and validates a suite file.  Malformed JSON raises ParseError;
/// invalid data (non-symmetrizable matrix, non-cocycle, unknown checks)
/// raises ValidationError naming the violated invariant.
SuiteSpec parse_spec(const std::string& path);
SuiteSpec parse_spec_text(const std::string& text);

struct RunOptions {
  std::string cache_dir;  // empty: TORSOR_CACHE_DIR or no cache
  bool no_cache = false;
  std::optional<int> degree_bound;  // flag override
  int log_level = 0;                // 0 quiet, 1 info, 2 debug
  int random_samples = 50;
};

struct RunOutcome {
  CheckReport report;
  int exit_code = 0;  // 0 pass, 1 fail, 2 inconclusive, 3 budget exceeded
  bool budget_exceeded = false;
  std::string budget_message;
};

RunOutcome run(const SuiteSpec& spec, const RunOptions& options = {});

/// Deterministic JSON text of a report; `zero_timing` blanks the millis
/// fields so byte comparison ignores timing.
std::string report_to_json(const RunOutcome& outcome, bool zero_timing = false);

}  // namespace torsor
