#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgi/solver.hpp"

namespace sgi {

enum class Verdict { SGI, SLI, SU, Unknown };

std::string to_string(Verdict verdict);

struct ParameterClassification {
  Symbol theta;
  Symbol theta_prime;
  ParameterStatus status = ParameterStatus::Free;
};

struct Classification {
  Verdict verdict = Verdict::Unknown;
  /// Why the verdict is unknown; empty otherwise.
  std::string reason;
  std::optional<std::uint32_t> dimension;
  std::optional<std::uint64_t> count;
  std::vector<Symbol> free_unknowns;
  /// One entry per theta symbol, in theta order.
  std::vector<ParameterClassification> parameters;
  /// "branches" when statuses come from symbolic branches, else "generic".
  std::string status_source;
  /// Set when the positivity filter ran: branch i survives iff entry i is true.
  std::vector<bool> nonnegative_branches;
  std::optional<std::string> positivity_note;
};

struct ClassifyOptions {
  bool positivity_filter = false;
  /// Seed of the positive point the filter evaluates branches at.
  std::uint64_t positivity_seed = 1;
};

/// SGI for a single generic solution, SLI for finitely many, SU for a
/// positive-dimensional solution set. Per-parameter statuses come from the
/// symbolic branches when they were extracted: a parameter is unique iff its
/// expression is the same on every branch and free of unknowns.
Classification classify_solutions(const SolutionSet& sol, std::span<const Symbol> theta,
                                  const ClassifyOptions& options = {});

/// The verdict for a run whose solver could not decide.
Classification unknown_classification(std::string reason);

}  // namespace sgi
