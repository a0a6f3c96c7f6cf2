#include "sgi/service.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "sgi/errors.hpp"
#include "sgi/transfer.hpp"

namespace sgi {
namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::string>& request_fields() {
  static const std::vector<std::string> fields{
      "spec",  "example", "edits",    "canonical_form", "naming_mode", "layout_hint",
      "seeds", "positivity_filter"};
  return fields;
}

template <typename T>
T field(const Json& body, const char* key, T fallback) {
  if (!body.contains(key)) return fallback;
  try {
    return body.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("has the wrong type", std::string("request.") + key);
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::string edit_text(const DesignEdit& e) {
  return e.target.to_string() + "=" + e.value.to_string();
}

std::string part_name(InvariantOrigin::Part part) {
  return part == InvariantOrigin::Part::Denominator ? "denominator" : "numerator";
}

Json marker(const std::string& stage, const std::string& message) {
  return {{"failed_stage", stage}, {"message", message}};
}

Json structure_json(const StructureSpec& spec) {
  Json out = Json::parse(serialize_structure(spec));
  Json check = nullptr;
  if (spec.compartmental) {
    const CompartmentalReport report = validate_compartmental(spec);
    Json violations = Json::array();
    for (const CompartmentalViolation& v : report.violations) {
      static const char* kinds[] = {"off-diagonal", "diagonal", "observation"};
      violations.push_back({{"kind", kinds[static_cast<int>(v.kind)]},
                            {"row", v.row},
                            {"col", v.col},
                            {"expression", v.expression}});
    }
    check = {{"passed", report.passed}, {"violations", violations}};
  }
  return {{"spec", out}, {"compartmental_check", check}};
}

Json transfer_json(const TransferMatrix& tm) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < tm.entries.size(); ++i) {
    const auto [num, den] = entry_text(tm, i);
    entries.push_back({{"numerator", num}, {"denominator", den}});
  }
  return {{"canonical", tm.canonical}, {"entries", entries}};
}

Json invariants_json(const InvariantSet& inv) {
  Json out = Json::array();
  for (std::size_t i = 0; i < inv.invariants.size(); ++i) {
    const InvariantOrigin& o = inv.origins[i];
    out.push_back({{"polynomial", inv.invariants[i].to_string()},
                   {"output", o.output + 1},
                   {"part", part_name(o.part)},
                   {"power", o.power}});
  }
  return out;
}

Json equations_json(const TestEquations& eqs) {
  Json list = Json::array();
  for (std::size_t i = 0; i < eqs.equations.size(); ++i) {
    list.push_back({{"polynomial", eqs.equations[i].to_string(eqs.unknowns)},
                    {"identically_zero", static_cast<bool>(eqs.identically_zero[i])}});
  }
  Json unknowns = Json::array();
  for (const Symbol& s : eqs.unknowns) unknowns.push_back(s.name());
  Json knowns = Json::array();
  for (const Symbol& s : eqs.knowns) knowns.push_back(s.name());
  return {{"unknowns", unknowns}, {"knowns", knowns}, {"equations", list}};
}

/// Every parameter free: the output carries no information about theta.
SolutionSet unconstrained_solution(const ParameterRenaming& ren,
                                   std::span<const std::uint64_t> seeds) {
  SolutionSet sol;
  sol.unknowns = ren.theta_prime;
  sol.knowns = ren.theta;
  sol.generic_dimension = static_cast<std::uint32_t>(ren.theta.size());
  sol.free_unknowns = ren.theta_prime;
  sol.generic_status.assign(ren.theta.size(), ParameterStatus::Free);
  if (ren.theta.empty()) sol.generic_count = 1;  // the single empty assignment
  sol.seeds_used.assign(seeds.begin(), seeds.end());
  for (auto s : seeds) sol.seed_outcomes.push_back({s, sol.generic_dimension, std::nullopt});
  return sol;
}

/// Runs one stage, recording its time and any failure. Returns false when
/// the stage failed.
class StageRunner {
 public:
  explicit StageRunner(AnalysisResult& result) : result_(result) {}

  template <typename F>
  bool run(const std::string& stage, F&& body) {
    const auto start = Clock::now();
    bool ok = false;
    try {
      body();
      ok = true;
    } catch (const InvalidInput& e) {
      result_.errors.push_back({stage, e.what(), true});
    } catch (const Timeout& e) {
      result_.timed_out = true;
      result_.errors.push_back({stage, e.what(), false});
    } catch (const std::exception& e) {
      result_.errors.push_back({stage, e.what(), false});
    }
    result_.timings.push_back(
        {stage, std::chrono::duration<double>(Clock::now() - start).count()});
    return ok;
  }

 private:
  AnalysisResult& result_;
};

}  // namespace

bool AnalysisResult::input_error() const {
  return std::any_of(errors.begin(), errors.end(),
                     [](const StageError& e) { return e.input_error; });
}

AnalysisRequest parse_request(const Json& body, const std::filesystem::path& examples_dir) {
  if (!body.is_object()) throw ParseError("must be an object", "request");
  for (const auto& [key, value] : body.items()) {
    const auto& known = request_fields();
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ParseError("unknown field '" + key + "'", "request");
    }
  }
  AnalysisRequest req;
  const bool has_spec = body.contains("spec");
  const bool has_example = body.contains("example");
  if (has_spec == has_example) {
    throw ParseError("exactly one of 'spec' and 'example' is required", "request");
  }
  if (has_spec) {
    const Json& spec = body.at("spec");
    if (spec.is_string()) {
      req.spec = parse_structure(spec.get<std::string>());
    } else if (spec.is_object()) {
      req.spec = parse_structure(spec.dump());
    } else {
      throw ParseError("must be a structure document or its text", "request.spec");
    }
  } else {
    const auto name = field<std::string>(body, "example", "");
    static const std::regex kName("[A-Za-z0-9_-]+");
    if (!std::regex_match(name, kName)) throw ParseError("invalid example name", "request.example");
    const std::filesystem::path path = examples_dir / (name + ".json");
    if (examples_dir.empty() || !std::filesystem::exists(path)) {
      throw InvalidInput("request.example: no example named '" + name + "'");
    }
    req.spec = parse_structure(read_text(path));
  }

  for (const auto& e : field<std::vector<std::string>>(body, "edits", {})) {
    req.edits.push_back(DesignEdit::parse(e));
  }
  apply_edits(req.spec, req.edits);  // rejects out-of-range targets up front
  req.canonical_form = field<bool>(body, "canonical_form", true);
  req.naming = parse_naming_mode(field<std::string>(body, "naming_mode", "caps"));
  req.layout_hint = field<std::string>(body, "layout_hint", "LR");
  if (!is_layout_hint(req.layout_hint)) {
    throw ParseError("must be one of LR, TB, RL, BT", "request.layout_hint");
  }
  if (body.contains("seeds")) {
    const Json& seeds = body.at("seeds");
    if (!seeds.is_array()) throw ParseError("must be a list of integers", "request.seeds");
    for (const Json& s : seeds) {
      if (!s.is_number_integer() || s.get<std::int64_t>() < 0) {
        throw ParseError("must be non-negative integers", "request.seeds");
      }
      req.seeds.push_back(s.get<std::uint64_t>());
    }
  }
  req.positivity_filter = field<bool>(body, "positivity_filter", false);
  return req;
}

Json request_echo(const AnalysisRequest& req) {
  Json edits = Json::array();
  for (const DesignEdit& e : req.edits) edits.push_back(edit_text(e));
  std::vector<std::uint64_t> seeds = req.seeds;
  if (seeds.empty()) seeds.assign(std::begin(kDefaultSeeds), std::end(kDefaultSeeds));
  return {
      {"spec", Json::parse(serialize_structure(req.spec))},
      {"edits", edits},
      {"canonical_form", req.canonical_form},
      {"naming_mode", to_string(req.naming)},
      {"layout_hint", req.layout_hint},
      {"seeds", seeds},
      {"positivity_filter", req.positivity_filter},
  };
}

AnalysisResult run_analysis(const AnalysisRequest& req) {
  AnalysisResult result;
  Json& doc = result.document;
  const auto start = Clock::now();
  const auto budget = std::chrono::duration_cast<Clock::duration>(req.timeout);
  const Deadline deadline(req.timeout);
  std::vector<std::uint64_t> seeds = req.seeds;
  if (seeds.empty()) seeds.assign(std::begin(kDefaultSeeds), std::end(kDefaultSeeds));

  static const char* kFields[] = {"structure",  "transfer_matrix", "invariants",
                                  "equations",  "parameters",      "solution",
                                  "jacobian",   "diagram",         "classification"};
  doc["request"] = request_echo(req);
  for (const char* f : kFields) doc[f] = nullptr;

  StageRunner stages(result);
  StructureSpec spec;
  TransferMatrix tm;
  InvariantSet inv;
  ParameterRenaming ren;
  TestEquations eqs;
  std::optional<SolutionSet> sol;
  std::optional<Classification> classification;

  bool ok = stages.run("structure", [&] {
    spec = apply_edits(req.spec, req.edits);
    validate_structure(spec);
    doc["structure"] = structure_json(spec);
  });
  ok = ok && stages.run("diagram", [&] {
    doc["diagram"] = diagram_panel(build_graph(spec, req.layout_hint));
  });
  ok = ok && stages.run("transfer", [&] {
    tm = process_matrix(build_transfer_matrix(spec), req.canonical_form);
    doc["transfer_matrix"] = transfer_json(tm);
  });
  ok = ok && stages.run("invariants", [&] {
    inv = collect_invariants(tm);
    doc["invariants"] = invariants_json(inv);
  });
  ok = ok && stages.run("naming", [&] {
    ren = theta_prime_creation(spec.parameters, req.naming, spec.constants);
    doc["parameters"] = parameters_panel(ren);
  });
  bool empty_invariants = false;
  ok = ok && stages.run("equations", [&] {
    try {
      eqs = identifiability_eqn_list(inv, ren);
    } catch (const EmptyInvariants&) {
      empty_invariants = true;
      eqs.unknowns = ren.theta_prime;
      eqs.knowns = ren.theta;
    }
    doc["equations"] = equations_json(eqs);
  });
  ok = ok && stages.run("generic_solve", [&] {
    sol = empty_invariants ? unconstrained_solution(ren, seeds)
                           : solve_generic(eqs, seeds, deadline);
  });
  if (ok && !empty_invariants) {
    stages.run("symbolic_solve", [&] {
      if (sol->generic_dimension == 0 && sol->generic_count == std::optional<std::uint64_t>{1}) {
        sol->symbolic = tautological_solution(eqs);
        return;
      }
      const std::chrono::duration<double> remaining = start + budget - Clock::now();
      SymbolicOptions options;
      options.timeout = std::min(remaining, options.timeout);
      if (options.timeout.count() <= 0) {
        SymbolicSolution skipped;
        skipped.state = SymbolicSolution::State::TimedOut;
        skipped.note = "no time left for the symbolic solve";
        sol->symbolic = skipped;
        return;
      }
      sol->symbolic = solve_symbolic(eqs, options);
    });
  }
  if (ok) {
    stages.run("jacobian", [&] {
      const std::size_t rank =
          empty_invariants ? 0 : jacobian_rank_oracle(inv, spec.parameters, seeds.front()).rank;
      const std::size_t nullity = spec.parameters.size() - rank;
      doc["jacobian"] = {{"seed", seeds.front()},
                         {"rank", rank},
                         {"nullity", nullity},
                         {"matches_generic_dimension", nullity == sol->generic_dimension}};
    });
    doc["solution"] = to_json(*sol);
    ok = stages.run("classify", [&] {
      classification = classify_solutions(
          *sol, spec.parameters, {req.positivity_filter, seeds.front()});
    });
  }

  if (!classification) {
    std::string reason = "analysis did not complete";
    for (const StageError& e : result.errors) {
      reason = e.stage + ": " + e.message;
      break;
    }
    classification = unknown_classification(reason);
  }
  result.verdict = classification->verdict;
  doc["classification"] = to_json(*classification);

  const std::string failed = result.errors.empty() ? "" : result.errors.front().stage;
  for (const char* f : kFields) {
    if (doc[f].is_null() && !failed.empty()) doc[f] = marker(failed, "not computed");
  }

  Json errors = Json::array();
  for (const StageError& e : result.errors) {
    errors.push_back({{"stage", e.stage}, {"message", e.message}, {"input_error", e.input_error}});
  }
  std::string state = "ok";
  if (result.input_error()) {
    state = "input_error";
  } else if (result.timed_out) {
    state = "timeout";
  } else if (!result.errors.empty()) {
    state = "error";
  }
  doc["status"] = {{"state", state}, {"timed_out", result.timed_out}, {"errors", errors}};
  if (req.include_timings) {
    Json timings = Json::object();
    for (const StageTiming& t : result.timings) timings[t.stage] = t.seconds;
    doc["timings"] = timings;
  } else {
    doc["timings"] = nullptr;
  }
  return result;
}

std::vector<std::pair<std::string, std::filesystem::path>> list_examples(
    const std::filesystem::path& dir) {
  std::vector<std::pair<std::string, std::filesystem::path>> out;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      out.emplace_back(entry.path().stem().string(), entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sgi
