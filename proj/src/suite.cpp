#include "torsor/suite.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "torsor/parse.hpp"

namespace torsor {

namespace {

using Json = nlohmann::ordered_json;

Rational rational_from_text(const std::string& text, const std::string& what) {
  Scalar s = Scalar::parse(text);
  if (s.num().degree() > 0 || s.den().degree() > 0)
    throw ValidationError(what + " must be a rational number, got " + text);
  return s.specialize_q1();
}

const std::set<std::string> kKashiwaraChecks = {"hopf",     "torsor", "comodule",
                                                "galois",   "complete", "membership",
                                                "basis",    "classical_limit"};
const std::set<std::string> kSridharanChecks = {"hopf", "torsor", "comodule", "galois",
                                                "complete"};
const std::set<std::string> kUqChecks = {"hopf"};

void validate_checks(const SuiteSpec& spec) {
  if (spec.checks.empty()) throw ValidationError("checks must be nonempty");
  const std::set<std::string>* allowed = nullptr;
  if (spec.suite == "uq_hopf")
    allowed = &kUqChecks;
  else if (spec.cartan)
    allowed = &kKashiwaraChecks;
  else
    allowed = &kSridharanChecks;
  for (const std::string& c : spec.checks) {
    if (!allowed->count(c))
      throw ValidationError("check '" + c + "' is not available for suite '" + spec.suite +
                            "'");
  }
}

SuiteSpec spec_from_json(const Json& j) {
  SuiteSpec spec;
  if (!j.is_object()) throw ValidationError("suite spec must be a JSON object");
  if (!j.contains("suite") || !j["suite"].is_string())
    throw ValidationError("missing suite name");
  spec.suite = j["suite"].get<std::string>();
  if (spec.suite != "kashiwara" && spec.suite != "sridharan" && spec.suite != "uq_hopf" &&
      spec.suite != "custom")
    throw ValidationError("unknown suite: " + spec.suite);

  if (j.contains("cartan")) {
    const Json& c = j["cartan"];
    if (!c.contains("matrix") || !c["matrix"].is_array())
      throw ValidationError("cartan.matrix must be an array of rows");
    CartanDatum d;
    for (const Json& row : c["matrix"]) {
      std::vector<int> r;
      for (const Json& v : row) r.push_back(v.get<int>());
      d.a.push_back(std::move(r));
    }
    if (c.contains("symmetrizers"))
      for (const Json& v : c["symmetrizers"]) d.d.push_back(v.get<int>());
    else
      d.d.assign(d.a.size(), 1);
    d.validate();
    spec.cartan = std::move(d);
  }
  if (j.contains("lie")) {
    const Json& l = j["lie"];
    if (!l.contains("basis") || !l["basis"].is_array())
      throw ValidationError("lie.basis must be an array of names");
    std::vector<std::string> basis;
    for (const Json& v : l["basis"]) basis.push_back(v.get<std::string>());
    LieDatum datum(std::move(basis));
    if (l.contains("brackets")) {
      for (const Json& b : l["brackets"]) {
        if (!b.is_array() || b.size() != 3)
          throw ValidationError("each bracket must be [x, y, {name: coeff}]");
        std::map<std::string, Rational> value;
        for (const auto& [name, coeff] : b[2].items())
          value[name] = rational_from_text(coeff.is_string() ? coeff.get<std::string>()
                                                             : coeff.dump(),
                                           "bracket coefficient");
        datum.set_bracket(b[0].get<std::string>(), b[1].get<std::string>(), std::move(value));
      }
    }
    datum.validate();
    spec.lie = std::move(datum);
  }
  if (bool(spec.cartan) == bool(spec.lie))
    throw ValidationError("exactly one of cartan or lie datum is required");

  if (j.contains("cocycle")) {
    if (!spec.lie) throw ValidationError("cocycle requires a lie datum");
    for (const Json& c : j["cocycle"]) {
      if (!c.is_array() || c.size() != 3)
        throw ValidationError("each cocycle value must be [x, y, value]");
      spec.cocycle.set_value(
          c[0].get<std::string>(), c[1].get<std::string>(),
          rational_from_text(c[2].is_string() ? c[2].get<std::string>() : c[2].dump(),
                             "cocycle value"));
    }
  }
  if (spec.lie) {
    spec.cocycle.resolve(*spec.lie);
    spec.cocycle.validate(*spec.lie);  // CocycleError names the violating triple
  }

  if (j.contains("degree_bound")) spec.degree_bound = j["degree_bound"].get<int>();
  if (spec.degree_bound < 2) throw ValidationError("degree_bound must be at least 2");

  if (j.contains("checks"))
    for (const Json& c : j["checks"]) spec.checks.push_back(c.get<std::string>());
  validate_checks(spec);

  if (j.contains("budget")) {
    const Json& b = j["budget"];
    if (b.contains("max_rules")) spec.budget.max_rules = b["max_rules"].get<int>();
    if (b.contains("max_millis")) spec.budget.max_millis = b["max_millis"].get<long>();
    if (b.contains("max_words")) spec.oracle_budget.max_words = b["max_words"].get<long>();
  }
  if (j.contains("overrides")) {
    for (const auto& [map_name, images] : j["overrides"].items()) {
      if (!images.is_object())
        throw ValidationError("override for " + map_name + " must map generators to text");
      for (const auto& [gen, expr] : images.items())
        spec.overrides[map_name][gen] = expr.get<std::string>();
    }
  }
  return spec;
}

struct SuiteContext {
  const SuiteSpec& spec;
  BuildOptions build;
  VerifyOptions verify;
  std::optional<GaloisBundle> bundle;
  std::optional<HopfData> uq;

  GaloisBundle& get_bundle() {
    if (!bundle) {
      if (spec.cartan)
        bundle = kashiwara_bundle(*spec.cartan, build);
      else
        bundle = sridharan_bundle(*spec.lie, spec.cocycle, build);
      for (const auto& [map_name, images] : spec.overrides)
        override_bundle_map(*bundle, map_name, images);
    }
    return *bundle;
  }
};

std::vector<CheckResult> run_check(SuiteContext& cx, const std::string& check) {
  const SuiteSpec& spec = cx.spec;
  if (spec.suite == "uq_hopf") {
    // hopf across all three quantum groups plus the embedding
    std::vector<CheckResult> out;
    HopfData uq = build_uq(*spec.cartan, cx.build);
    HopfData uhat = build_uhat(*spec.cartan, cx.build);
    HopfData uprime = build_uprime(*spec.cartan, cx.build);
    for (const HopfData* h : {&uq, &uhat, &uprime}) {
      auto rs = hopf_results(*h, cx.verify);
      out.insert(out.end(), rs.begin(), rs.end());
    }
    Morphism emb = embed_uhat(uhat, uq, *spec.cartan);
    auto rs = embedding_results(uhat, uq, emb, cx.verify);
    out.insert(out.end(), rs.begin(), rs.end());
    return out;
  }

  if (check == "hopf") {
    GaloisBundle& b = cx.get_bundle();
    std::vector<CheckResult> out = hopf_results(b.hopfA, cx.verify);
    if (b.hopfB.algebra.pres.get() != b.hopfA.algebra.pres.get()) {
      auto rs = hopf_results(b.hopfB, cx.verify);
      out.insert(out.end(), rs.begin(), rs.end());
    }
    return out;
  }
  if (check == "torsor") {
    GaloisBundle& b = cx.get_bundle();
    if (!b.torsor) throw ValidationError("bundle has no torsor data");
    return torsor_results(b.T, *b.torsor, cx.verify);
  }
  if (check == "comodule") return bicomodule_results(cx.get_bundle(), cx.verify);
  if (check == "galois") return galois_results(cx.get_bundle(), false, cx.verify);
  if (check == "complete") return complete_results(cx.get_bundle(), cx.verify);
  if (check == "membership") return membership_results(cx.get_bundle());
  if (check == "basis") {
    GaloisBundle& b = cx.get_bundle();
    int degree = spec.cartan->rank() >= 2 ? 3 : 4;
    return {verify_basis(b.T, degree, spec.oracle_budget)};
  }
  if (check == "classical_limit") {
    GaloisBundle& b = cx.get_bundle();
    std::vector<CheckResult> out;
    const CartanDatum& c = *spec.cartan;
    AlgebraHandle cl = classical_limit(b.T, cx.build);
    ClassicalMatchData md = nilpotent_pair_datum(c);
    {
      auto start = std::chrono::steady_clock::now();
      SridharanMatchResult m =
          check_sridharan_match(cl, md.lie, md.cocycle, md.bracket_exprs, cx.build);
      CheckResult r;
      r.label = "classical limit presents the Sridharan algebra of the paired nilpotent "
                "Lie algebra";
      r.anchor = "relations of either presentation reduce to zero in the other";
      r.status = m.matched
                     ? (m.bound_limited ? CheckStatus::inconclusive : CheckStatus::pass)
                     : CheckStatus::fail;
      r.witness = m.witness;
      r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
      out.push_back(std::move(r));
    }
    {
      auto start = std::chrono::steady_clock::now();
      std::map<std::string, std::string> renameA, renameB;
      for (int i = 0; i < c.rank(); ++i) {
        std::string n = std::to_string(i + 1);
        renameA["ep" + n] = "e" + n;
        renameA["fp" + n] = "f" + n;
        renameB["eh" + n] = "e" + n;
      }
      AlgebraHandle clA = classical_limit(b.A, cx.build, renameA);
      AlgebraHandle clB = classical_limit(b.B, cx.build, renameB);
      SridharanMatchResult m = mutually_presenting(clA, clB);
      CheckResult r;
      r.label = "classical limits of the two coacting Hopf algebras coincide";
      r.anchor = "relation sets are mutually reducing after renaming generators";
      r.status = m.matched
                     ? (m.bound_limited ? CheckStatus::inconclusive : CheckStatus::pass)
                     : CheckStatus::fail;
      r.witness = m.witness;
      r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
      out.push_back(std::move(r));
    }
    return out;
  }
  throw ValidationError("unknown check: " + check);
}

}  // namespace

SuiteSpec parse_spec_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return spec_from_json(j);
}

SuiteSpec parse_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open suite file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_spec_text(text.str());
}

RunOutcome run(const SuiteSpec& spec, const RunOptions& options) {
  RunOutcome outcome;
  CheckReport& report = outcome.report;
  report.suite = spec.suite;
  report.degree_bound = options.degree_bound.value_or(spec.degree_bound);
  if (spec.cartan)
    report.datum = spec.cartan->describe();
  else
    report.datum = spec.lie->describe() + "," + spec.cocycle.describe(*spec.lie);

  SuiteContext cx{spec,
                  BuildOptions{report.degree_bound, spec.budget, nullptr},
                  VerifyOptions{options.random_samples, 20240901u},
                  std::nullopt,
                  std::nullopt};

  std::string cache_dir =
      !options.cache_dir.empty() ? options.cache_dir : CompletionCache::default_dir();
  std::optional<CompletionCache> cache;
  if (!cache_dir.empty() && !options.no_cache) {
    cache.emplace(cache_dir);
    cx.build.cache = &*cache;
  }

  std::vector<std::string> checks = spec.checks;
  if (spec.suite == "uq_hopf") checks = {"hopf"};

  try {
    for (const std::string& check : checks) {
      if (options.log_level >= 1) std::cerr << "running check: " << check << "\n";
      try {
        report.append(run_check(cx, check));
      } catch (const InconclusiveError& e) {
        CheckResult r;
        r.label = "check '" + check + "'";
        r.anchor = "zero tests stay within the completion bound";
        r.status = CheckStatus::inconclusive;
        r.witness = Witness{"bound-limited zero test", e.what(), -1};
        report.results.push_back(std::move(r));
      }
    }
  } catch (const BudgetExceeded& e) {
    outcome.budget_exceeded = true;
    outcome.budget_message = e.what();
  }

  if (outcome.budget_exceeded) {
    outcome.exit_code = 3;
  } else {
    switch (report.overall()) {
      case CheckStatus::pass: outcome.exit_code = 0; break;
      case CheckStatus::fail: outcome.exit_code = 1; break;
      case CheckStatus::inconclusive: outcome.exit_code = 2; break;
    }
  }
  return outcome;
}

std::string report_to_json(const RunOutcome& outcome, bool zero_timing) {
  Json j;
  j["report_version"] = 1;
  j["suite"] = outcome.report.suite;
  j["datum"] = outcome.report.datum;
  j["degree_bound"] = outcome.report.degree_bound;
  if (outcome.budget_exceeded) {
    j["budget_exceeded"] = true;
    j["budget_message"] = outcome.budget_message;
  }
  j["overall"] = outcome.budget_exceeded ? "budget_exceeded"
                                         : to_string(outcome.report.overall());
  Json results = Json::array();
  for (const CheckResult& r : outcome.report.results) {
    Json item;
    item["label"] = r.label;
    item["anchor"] = r.anchor;
    item["status"] = to_string(r.status);
    if (r.witness) {
      Json w;
      w["label"] = r.witness->label;
      w["normal_form"] = r.witness->normal_form;
      w["degree"] = r.witness->degree;
      item["witness"] = w;
    }
    item["millis"] = zero_timing ? 0 : r.millis;
    results.push_back(std::move(item));
  }
  j["results"] = std::move(results);
  return j.dump(2) + "\n";
}

}  // namespace torsor
