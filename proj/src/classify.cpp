#include "sgi/classify.hpp"

#include <algorithm>
#include <map>

#include "sgi/generic_point.hpp"

namespace sgi {
namespace {

bool mentions_unknowns(const RatFunc& f, const std::vector<Symbol>& unknowns) {
  return std::any_of(unknowns.begin(), unknowns.end(), [&](const Symbol& u) {
    return f.num().contains(u) || f.den().contains(u);
  });
}

ParameterStatus status_from_branches(const Symbol& unknown,
                                     const std::vector<SolutionBranch>& branches,
                                     const std::vector<Symbol>& unknowns) {
  const RatFunc* first = nullptr;
  bool same = true;
  for (const SolutionBranch& b : branches) {
    const auto* v = b.find(unknown);
    if (v == nullptr || !v->has_value() || mentions_unknowns(**v, unknowns)) {
      return ParameterStatus::Free;
    }
    if (first == nullptr) {
      first = &**v;
    } else if (!(*first == **v)) {
      same = false;
    }
  }
  return same ? ParameterStatus::Unique : ParameterStatus::FinitelyMany;
}

/// A branch is admissible when every assigned value is non-negative at a
/// positive point, with each free unknown set to its counterpart's value.
bool branch_nonnegative(const SolutionBranch& b, const std::map<Symbol, Rational>& point) {
  for (const auto& [unknown, value] : b.assignments) {
    if (!value) continue;
    try {
      if (value->evaluate(point) < 0) return false;
    } catch (const std::domain_error&) {
      // A pole at the sample point says nothing about the sign.
    }
  }
  return true;
}

void apply_positivity(Classification& c, const SolutionSet& sol, std::uint64_t seed) {
  const SymbolicSolution* sym = sol.symbolic ? &*sol.symbolic : nullptr;
  if (sym == nullptr || sym->state != SymbolicSolution::State::Solved || sym->branches.empty()) {
    c.positivity_note = "no symbolic branches available; filter not applied";
    return;
  }
  std::vector<Symbol> symbols = sol.knowns;
  for (const SolutionBranch& b : sym->branches) {
    for (const auto& [unknown, value] : b.assignments) {
      if (!value) continue;
      for (const Symbol& s : value->num().symbols()) symbols.push_back(s);
      for (const Symbol& s : value->den().symbols()) symbols.push_back(s);
    }
  }
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  std::erase_if(symbols, [&](const Symbol& s) {
    return std::find(sol.unknowns.begin(), sol.unknowns.end(), s) != sol.unknowns.end();
  });
  std::map<Symbol, Rational> point = make_generic_point(symbols, seed).assignment;
  for (std::size_t i = 0; i < sol.unknowns.size(); ++i) {
    point[sol.unknowns[i]] = point.at(sol.knowns[i]);
  }

  std::size_t kept = 0;
  for (const SolutionBranch& b : sym->branches) {
    const bool ok = branch_nonnegative(b, point);
    c.nonnegative_branches.push_back(ok);
    kept += ok ? 1 : 0;
  }
  c.positivity_note = std::to_string(kept) + " of " + std::to_string(sym->branches.size()) +
                      " branches are non-negative at a positive sample point; verdict unchanged";
}

}  // namespace

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::SGI:
      return "SGI";
    case Verdict::SLI:
      return "SLI";
    case Verdict::SU:
      return "SU";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

Classification classify_solutions(const SolutionSet& sol, std::span<const Symbol> theta,
                                  const ClassifyOptions& options) {
  Classification c;
  c.dimension = sol.generic_dimension;
  c.count = sol.generic_count;
  c.free_unknowns = sol.free_unknowns;
  if (sol.generic_dimension > 0) {
    c.verdict = Verdict::SU;
  } else if (sol.generic_count == std::optional<std::uint64_t>{1}) {
    c.verdict = Verdict::SGI;
  } else if (sol.generic_count) {
    c.verdict = Verdict::SLI;
  } else {
    c.verdict = Verdict::Unknown;
    c.reason = "zero-dimensional solution set without a solution count";
  }

  const bool from_branches = sol.symbolic &&
                             sol.symbolic->state == SymbolicSolution::State::Solved &&
                             !sol.symbolic->branches.empty();
  c.status_source = from_branches ? "branches" : "generic";
  for (const Symbol& t : theta) {
    const auto it = std::find(sol.knowns.begin(), sol.knowns.end(), t);
    if (it == sol.knowns.end()) continue;
    const auto i = static_cast<std::size_t>(it - sol.knowns.begin());
    ParameterClassification p{t, sol.unknowns[i], ParameterStatus::Free};
    if (from_branches) {
      p.status = status_from_branches(sol.unknowns[i], sol.symbolic->branches, sol.unknowns);
    } else if (i < sol.generic_status.size()) {
      p.status = sol.generic_status[i];
    }
    c.parameters.push_back(p);
  }
  if (options.positivity_filter) apply_positivity(c, sol, options.positivity_seed);
  return c;
}

Classification unknown_classification(std::string reason) {
  Classification c;
  c.verdict = Verdict::Unknown;
  c.reason = std::move(reason);
  c.status_source = "generic";
  return c;
}

}  // namespace sgi
