#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgi/deadline.hpp"
#include "sgi/groebner.hpp"
#include "sgi/invariants.hpp"
#include "sgi/variety.hpp"

namespace sgi {

inline constexpr std::uint64_t kDefaultSeeds[] = {1, 2, 3};

/// How many values an unknown takes on the solution set.
enum class ParameterStatus { Unique, FinitelyMany, Free };

std::string to_string(ParameterStatus status);

/// Dimension and solution count found at one generic point.
struct SeedOutcome {
  std::uint64_t seed = 0;
  std::uint32_t dimension = 0;
  std::optional<std::uint64_t> count;  // set iff dimension == 0

  friend bool operator==(const SeedOutcome&, const SeedOutcome&) = default;
};

/// Symbolic presentation of the solution set over Q(theta).
struct SymbolicSolution {
  enum class State {
    Solved,          // lex basis computed and branches extracted
    NotExtractable,  // lex basis computed, branches beyond solve_triangular
    TimedOut,
    Skipped,         // too many unknowns
  };
  State state = State::Skipped;
  std::string note;
  /// Reduced lex basis over Q(theta), unknowns in TestEquations order
  /// (first is highest). Present for Solved and NotExtractable.
  std::optional<GroebnerBasis> basis;
  std::vector<SolutionBranch> branches;
  /// Polynomials in (theta', theta) proven to lie in the ideal.
  std::vector<Poly> relation_certificates;
};

std::string to_string(SymbolicSolution::State state);

struct SolutionSet {
  std::vector<Symbol> unknowns;
  std::vector<Symbol> knowns;
  std::uint32_t generic_dimension = 0;
  /// Number of solutions counted with multiplicity; nullopt when infinite.
  std::optional<std::uint64_t> generic_count;
  std::vector<Symbol> free_unknowns;
  /// Per-unknown status at the generic points, aligned with `unknowns`.
  std::vector<ParameterStatus> generic_status;
  std::vector<std::uint64_t> seeds_used;
  std::vector<SeedOutcome> seed_outcomes;
  std::optional<SymbolicSolution> symbolic;
};

/// Specializes theta at a generic point per seed, computes a grevlex basis in
/// theta' over Q, and reads off dimension and count. Three seeds must agree;
/// otherwise two more are drawn and a majority of five decides. Throws
/// Indeterminate when no majority exists, NoSolution if a specialized system
/// is inconsistent (impossible for genuine test equations), InvalidInput for
/// an empty seed list, and Timeout past the deadline. Extra symbols in the
/// equations (declared constants) are specialized along with theta.
SolutionSet solve_generic(const TestEquations& eqs,
                          std::span<const std::uint64_t> seeds = kDefaultSeeds,
                          const Deadline& deadline = {});

struct SymbolicOptions {
  std::size_t unknown_cap = 12;
  std::chrono::duration<double> timeout{60.0};
};

/// Lex basis of the test equations over Q(theta) with theta' first, branch
/// extraction by solve_triangular, and relation certificates (basis elements
/// tying several unknowns together, plus product and ratio relations
/// theta'_i theta'_j - theta_i theta_j and theta'_i theta_j - theta_i theta'_j
/// that ideal membership confirms). The basis is reached through a grevlex
/// basis first, trying the unknowns in reverse and then in given order.
/// Throws NoSolution for an inconsistent system.
SymbolicSolution solve_symbolic(const TestEquations& eqs, const SymbolicOptions& options = {});

/// The symbolic solution when theta' = theta is known to be the only
/// solution (generic dimension 0, count 1): the reduced lex basis is then
/// {theta'_i - theta_i} and the single branch is the identity.
SymbolicSolution tautological_solution(const TestEquations& eqs);

struct RankReport {
  std::size_t rank = 0;
  std::size_t nullity = 0;
  std::uint64_t seed = 0;
};

/// Exact rank of the Jacobian of the invariants with respect to theta at a
/// generic point. Full rank certifies local identifiability; nullity counts
/// the unidentifiable directions. Throws EmptyInvariants when inv is empty.
RankReport jacobian_rank_oracle(const InvariantSet& inv, std::span<const Symbol> theta,
                                std::uint64_t seed);

}  // namespace sgi
