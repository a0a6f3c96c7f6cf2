#include "sgi/solver.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sgi/errors.hpp"
#include "sgi/generic_point.hpp"
#include "sgi/poly_gcd.hpp"

namespace sgi {
namespace {

using Clock = std::chrono::steady_clock;

/// Symbols of the equations that are neither unknowns nor knowns, e.g.
/// declared constants; they are specialized together with theta.
std::vector<Symbol> extra_symbols(const TestEquations& eqs) {
  std::set<Symbol> seen(eqs.unknowns.begin(), eqs.unknowns.end());
  seen.insert(eqs.knowns.begin(), eqs.knowns.end());
  std::set<Symbol> extra;
  for (const Poly& e : eqs.equations) {
    for (const Symbol& s : e.symbols()) {
      if (!seen.contains(s)) extra.insert(s);
    }
  }
  return {extra.begin(), extra.end()};
}

struct SeedRun {
  SeedOutcome outcome;
  GenericPoint point;
  std::vector<Poly> specialized;
  GroebnerBasis basis;
  std::vector<Symbol> free_unknowns;
};

SeedRun run_seed(const TestEquations& eqs, const std::vector<Poly>& nontrivial,
                 std::uint64_t seed, const Deadline& deadline) {
  std::vector<Symbol> symbols = eqs.knowns;
  const auto extra = extra_symbols(eqs);
  symbols.insert(symbols.end(), extra.begin(), extra.end());

  SeedRun run;
  run.point = make_generic_point(symbols, seed);
  std::map<Symbol, Poly> values;
  for (const auto& [s, v] : run.point.assignment) values.emplace(s, Poly{v});

  std::map<Symbol, Rational> tautological;
  for (std::size_t i = 0; i < eqs.unknowns.size(); ++i) {
    tautological.emplace(eqs.unknowns[i], run.point.assignment.at(eqs.knowns[i]));
  }
  for (const Poly& e : nontrivial) {
    Poly p = e.substitute(values);
    if (p.evaluate(tautological) != 0) {
      throw std::logic_error("test equation does not vanish at theta' = theta");
    }
    run.specialized.push_back(std::move(p));
  }

  run.basis = groebner_basis(run.specialized, eqs.unknowns, MonomialOrder::GrevLex, deadline);
  if (run.basis.is_unit()) {
    throw NoSolution("specialized test equations are inconsistent at seed " +
                     std::to_string(seed));
  }
  const DimensionReport report = variety_dimension(run.basis, eqs.unknowns);
  run.outcome = {seed, report.dimension, report.count};
  run.free_unknowns = report.free_unknowns;
  return run;
}

/// True when the specialized ideal contains a nonzero polynomial in `x` alone.
bool takes_finitely_many_values(const SeedRun& run, const std::vector<Symbol>& unknowns,
                                const Symbol& x, const Deadline& deadline) {
  std::vector<Symbol> order;
  for (const Symbol& u : unknowns) {
    if (u != x) order.push_back(u);
  }
  order.push_back(x);
  const GroebnerBasis lex =
      groebner_basis(run.basis.polys, order, MonomialOrder::Lex, deadline);
  return std::any_of(lex.polys.begin(), lex.polys.end(), [&](const Poly& p) {
    const auto s = p.symbols();
    return s.size() == 1 && s.contains(x);
  });
}

std::vector<ParameterStatus> generic_status(const TestEquations& eqs, const SeedRun& run,
                                            const Deadline& deadline) {
  std::vector<ParameterStatus> status;
  for (std::size_t i = 0; i < eqs.unknowns.size(); ++i) {
    const Symbol& x = eqs.unknowns[i];
    const Poly at_theta = Poly{x} - Poly{run.point.assignment.at(eqs.knowns[i])};
    if (ideal_contains(run.basis, at_theta)) {
      status.push_back(ParameterStatus::Unique);
    } else if (run.outcome.dimension == 0) {
      status.push_back(ParameterStatus::FinitelyMany);
    } else if (std::find(run.free_unknowns.begin(), run.free_unknowns.end(), x) !=
               run.free_unknowns.end()) {
      status.push_back(ParameterStatus::Free);
    } else {
      status.push_back(takes_finitely_many_values(run, eqs.unknowns, x, deadline)
                           ? ParameterStatus::FinitelyMany
                           : ParameterStatus::Free);
    }
  }
  return status;
}

/// Index of the run whose outcome is shared by a strict majority, if any.
std::optional<std::size_t> majority(const std::vector<SeedRun>& runs) {
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto votes = std::count_if(runs.begin(), runs.end(), [&](const SeedRun& r) {
      return r.outcome.dimension == runs[i].outcome.dimension &&
             r.outcome.count == runs[i].outcome.count;
    });
    if (2 * static_cast<std::size_t>(votes) > runs.size()) return i;
  }
  return std::nullopt;
}

bool unanimous(const std::vector<SeedRun>& runs) {
  return std::all_of(runs.begin(), runs.end(), [&](const SeedRun& r) {
    return r.outcome.dimension == runs.front().outcome.dimension &&
           r.outcome.count == runs.front().outcome.count;
  });
}

bool is_identity_free(const RatFunc& value, const std::vector<Symbol>& unknowns) {
  for (const Symbol& u : unknowns) {
    if (value.num().contains(u) || value.den().contains(u)) return false;
  }
  return true;
}

/// Unknowns whose value is the same fixed expression in theta on every branch.
std::vector<bool> determined_unknowns(const std::vector<SolutionBranch>& branches,
                                      const std::vector<Symbol>& unknowns) {
  std::vector<bool> out(unknowns.size(), !branches.empty());
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    const std::optional<RatFunc>* first = nullptr;
    for (const SolutionBranch& b : branches) {
      const auto* v = b.find(unknowns[i]);
      if (v == nullptr || !v->has_value() || !is_identity_free(**v, unknowns)) {
        out[i] = false;
        break;
      }
      if (first == nullptr) {
        first = v;
      } else if (!(**first == **v)) {
        out[i] = false;
        break;
      }
    }
  }
  return out;
}

std::size_t unknowns_in(const Poly& p, const std::vector<Symbol>& unknowns) {
  return static_cast<std::size_t>(std::count_if(
      unknowns.begin(), unknowns.end(), [&](const Symbol& u) { return p.contains(u); }));
}

std::vector<Poly> harvest_certificates(const TestEquations& eqs, const GroebnerBasis& lex,
                                       const std::vector<SolutionBranch>& branches,
                                       const Deadline& deadline) {
  std::vector<Poly> certs;
  auto add = [&](const Poly& p) {
    const Poly m = monic(p);
    if (std::none_of(certs.begin(), certs.end(), [&](const Poly& c) { return monic(c) == m; })) {
      certs.push_back(p);
    }
  };
  for (const Poly& g : lex.polys) {
    if (unknowns_in(g, eqs.unknowns) >= 2) add(g);
  }
  const auto determined = determined_unknowns(branches, eqs.unknowns);
  const std::size_t n = eqs.unknowns.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (determined[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (determined[j]) continue;
      deadline.check("relation certificates");
      const Poly ui{eqs.unknowns[i]};
      const Poly uj{eqs.unknowns[j]};
      const Poly ki{eqs.knowns[i]};
      const Poly kj{eqs.knowns[j]};
      for (const Poly& candidate : {ui * uj - ki * kj, ui * kj - ki * uj}) {
        if (ideal_contains(lex, candidate)) add(candidate);
      }
    }
  }
  return certs;
}

SymbolicSolution finish_symbolic(const TestEquations& eqs, GroebnerBasis lex,
                                 const Deadline& deadline, std::string note) {
  SymbolicSolution out;
  TriangularSolution tri = solve_triangular(lex, eqs.unknowns);
  out.state = tri.extractable ? SymbolicSolution::State::Solved
                              : SymbolicSolution::State::NotExtractable;
  out.note = tri.extractable ? std::move(note) : tri.obstruction;
  out.branches = std::move(tri.branches);
  try {
    out.relation_certificates = harvest_certificates(eqs, lex, out.branches, deadline);
  } catch (const Timeout&) {
    out.note += out.note.empty() ? "" : "; ";
    out.note += "relation search stopped at the time limit";
  }
  out.basis = std::move(lex);
  return out;
}

}  // namespace

std::string to_string(ParameterStatus status) {
  switch (status) {
    case ParameterStatus::Unique:
      return "unique";
    case ParameterStatus::FinitelyMany:
      return "finitely-many";
    case ParameterStatus::Free:
      return "free";
  }
  return "free";
}

std::string to_string(SymbolicSolution::State state) {
  switch (state) {
    case SymbolicSolution::State::Solved:
      return "solved";
    case SymbolicSolution::State::NotExtractable:
      return "not-extractable";
    case SymbolicSolution::State::TimedOut:
      return "timeout";
    case SymbolicSolution::State::Skipped:
      return "skipped";
  }
  return "skipped";
}

SolutionSet solve_generic(const TestEquations& eqs, std::span<const std::uint64_t> seeds,
                          const Deadline& deadline) {
  if (seeds.empty()) throw InvalidInput("at least one seed is required");
  SolutionSet out;
  out.unknowns = eqs.unknowns;
  out.knowns = eqs.knowns;
  const std::vector<Poly> nontrivial = eqs.nontrivial();

  if (nontrivial.empty()) {
    // Nothing constrains theta': every unknown is free.
    out.generic_dimension = static_cast<std::uint32_t>(eqs.unknowns.size());
    out.free_unknowns = eqs.unknowns;
    out.generic_status.assign(eqs.unknowns.size(), ParameterStatus::Free);
    out.seeds_used.assign(seeds.begin(), seeds.end());
    for (auto s : seeds) out.seed_outcomes.push_back({s, out.generic_dimension, std::nullopt});
    if (out.generic_dimension == 0) out.generic_count = 1;
    return out;
  }

  std::vector<SeedRun> runs;
  for (auto s : seeds) runs.push_back(run_seed(eqs, nontrivial, s, deadline));
  std::optional<std::size_t> chosen;
  if (unanimous(runs)) {
    chosen = 0;
  } else {
    std::uint64_t next = *std::max_element(seeds.begin(), seeds.end());
    while (runs.size() < 5) runs.push_back(run_seed(eqs, nontrivial, ++next, deadline));
    chosen = majority(runs);
  }
  for (const SeedRun& r : runs) {
    out.seeds_used.push_back(r.outcome.seed);
    out.seed_outcomes.push_back(r.outcome);
  }
  if (!chosen) {
    std::string detail;
    for (const SeedRun& r : runs) {
      detail += " seed " + std::to_string(r.outcome.seed) + ": dimension " +
                std::to_string(r.outcome.dimension) + ";";
    }
    throw Indeterminate("generic solves disagree across seeds:" + detail);
  }

  const SeedRun& run = runs[*chosen];
  out.generic_dimension = run.outcome.dimension;
  out.generic_count = run.outcome.count;
  out.free_unknowns = run.free_unknowns;
  out.generic_status = generic_status(eqs, run, deadline);
  return out;
}

SymbolicSolution solve_symbolic(const TestEquations& eqs, const SymbolicOptions& options) {
  SymbolicSolution out;
  if (eqs.unknowns.size() > options.unknown_cap) {
    out.state = SymbolicSolution::State::Skipped;
    out.note = std::to_string(eqs.unknowns.size()) + " unknowns exceed the symbolic cap of " +
               std::to_string(options.unknown_cap);
    return out;
  }
  const std::vector<Poly> nontrivial = eqs.nontrivial();
  const auto start = Clock::now();
  const auto budget = std::chrono::duration_cast<Clock::duration>(options.timeout);
  const Deadline overall(options.timeout);

  // The grevlex phase is very sensitive to the variable order; each order
  // gets an equal share of the budget. The reduced lex basis computed from
  // whichever succeeds does not depend on that choice.
  std::vector<std::vector<Symbol>> orders;
  orders.emplace_back(eqs.unknowns.rbegin(), eqs.unknowns.rend());
  if (eqs.unknowns.size() > 1) orders.push_back(eqs.unknowns);

  std::optional<GroebnerBasis> first;
  for (std::size_t k = 0; k < orders.size() && !first; ++k) {
    const auto slice_end = start + budget * static_cast<long>(k + 1) /
                                       static_cast<long>(orders.size());
    const std::chrono::duration<double> slice = slice_end - Clock::now();
    if (slice.count() <= 0) break;
    try {
      first = groebner_basis_over_parameters(nontrivial, orders[k], MonomialOrder::GrevLex,
                                             Deadline(slice));
    } catch (const Timeout&) {
    }
  }
  if (!first) {
    out.state = SymbolicSolution::State::TimedOut;
    out.note = "symbolic basis not reached within the time limit";
    return out;
  }
  if (first->is_unit()) throw NoSolution("inconsistent system: Groebner basis is {1}");

  GroebnerBasis lex;
  try {
    lex = groebner_basis_over_parameters(first->polys, eqs.unknowns, MonomialOrder::Lex,
                                         overall);
  } catch (const Timeout&) {
    out.state = SymbolicSolution::State::TimedOut;
    out.note = "lex basis not reached within the time limit";
    return out;
  }
  // Keep every theta symbol in the ring even if the basis does not use it.
  lex.parameters = eqs.knowns;
  return finish_symbolic(eqs, std::move(lex), overall, "");
}

SymbolicSolution tautological_solution(const TestEquations& eqs) {
  std::vector<Poly> identity;
  for (std::size_t i = 0; i < eqs.unknowns.size(); ++i) {
    identity.push_back(Poly{eqs.unknowns[i]} - Poly{eqs.knowns[i]});
  }
  GroebnerBasis lex =
      groebner_basis_over_parameters(identity, eqs.unknowns, MonomialOrder::Lex);
  lex.parameters = eqs.knowns;
  return finish_symbolic(eqs, std::move(lex), Deadline{},
                         "theta' = theta is the only generic solution");
}

RankReport jacobian_rank_oracle(const InvariantSet& inv, std::span<const Symbol> theta,
                                std::uint64_t seed) {
  if (inv.invariants.empty()) throw EmptyInvariants();
  std::set<Symbol> all(theta.begin(), theta.end());
  std::vector<Symbol> symbols(theta.begin(), theta.end());
  for (const Poly& p : inv.invariants) {
    for (const Symbol& s : p.symbols()) {
      if (all.insert(s).second) symbols.push_back(s);
    }
  }
  const GenericPoint point = make_generic_point(symbols, seed);

  const std::size_t rows = inv.invariants.size();
  const std::size_t cols = theta.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m[i][j] = inv.invariants[i].derivative(theta[j]).evaluate(point.assignment);
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return {rank, cols - rank, seed};
}

}  // namespace sgi
