#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sgi/report.hpp"

namespace sgi {

struct AnalysisRequest {
  StructureSpec spec;
  /// Applied to `spec` in order before the analysis.
  std::vector<DesignEdit> edits;
  bool canonical_form = true;
  NamingMode naming = NamingMode::Caps;
  std::string layout_hint = "LR";
  /// Empty means the default seeds.
  std::vector<std::uint64_t> seeds;
  bool positivity_filter = false;
  /// Wall-clock budget for the whole pipeline.
  std::chrono::duration<double> timeout{60.0};
  /// Timings are nondeterministic, so they are only reported on request.
  bool include_timings = false;
};

/// Reads a request document:
///   {"spec": <structure document or its text> | "example": "<name>",
///    "edits": ["C[1][1]=1", ...], "canonical_form": bool,
///    "naming_mode": "caps" | "underscore", "layout_hint": "LR",
///    "seeds": [int, ...], "positivity_filter": bool}
/// `example` names a file "<name>.json" in `examples_dir`. Throws
/// InvalidInput (ParseError for malformed fields) naming the offending field.
AnalysisRequest parse_request(const Json& body, const std::filesystem::path& examples_dir = {});

Json request_echo(const AnalysisRequest& req);

struct StageError {
  std::string stage;
  std::string message;
  /// The stage rejected its input, as opposed to failing to decide.
  bool input_error = false;
};

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

struct AnalysisResult {
  /// Request echo, transfer matrix, invariants, equations, the report panels
  /// (parameters, solution, diagram, classification), status and timings.
  /// Stages that did not run carry {"failed_stage": ..., "message": ...}.
  Json document;
  Verdict verdict = Verdict::Unknown;
  std::vector<StageError> errors;
  std::vector<StageTiming> timings;
  bool timed_out = false;
  bool input_error() const;
};

/// Runs the pipeline: transfer matrix, processing, invariants, renaming,
/// test equations, generic solve, best-effort symbolic solve,
/// classification and report. Never throws for analysis failures; each is
/// recorded with its stage and the results computed so far are kept.
AnalysisResult run_analysis(const AnalysisRequest& req);

/// Bundled structure files in `dir`, keyed by file stem, in name order.
std::vector<std::pair<std::string, std::filesystem::path>> list_examples(
    const std::filesystem::path& dir);

}  // namespace sgi
