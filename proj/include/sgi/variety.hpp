#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgi/groebner.hpp"
#include "sgi/ratfunc.hpp"

namespace sgi {

/// Dimension of the complex solution variety of a Gröbner basis.
struct DimensionReport {
  std::uint32_t dimension = 0;
  /// Number of solutions counted with multiplicity; set only for dimension 0.
  std::optional<std::uint64_t> count;
  /// A maximal set of unknowns independent modulo the ideal (empty for
  /// dimension 0), listed in unknown order.
  std::vector<Symbol> free_unknowns;
};

/// Reads the dimension off the leading monomials of `basis`. `unknowns`
/// must be the basis variables (any order). Throws NoSolution for {1}.
DimensionReport variety_dimension(const GroebnerBasis& basis, std::span<const Symbol> unknowns);

/// One solution branch: each unknown mapped to an expression in the
/// remaining symbols, or to nullopt when it is free.
struct SolutionBranch {
  std::vector<std::pair<Symbol, std::optional<RatFunc>>> assignments;

  const std::optional<RatFunc>* find(const Symbol& unknown) const;
};

struct TriangularSolution {
  bool extractable = false;
  std::string obstruction;  // why extraction failed, when it did
  std::vector<SolutionBranch> branches;
};

/// Back-substitutes a lex Gröbner basis from the lowest unknown upward.
/// Handles leading-variable degree 1 and 2 (when the discriminant is a
/// square); anything else yields extractable == false. Symbols other than
/// the unknowns are treated as parameters. Throws NoSolution for {1}.
TriangularSolution solve_triangular(const GroebnerBasis& basis,
                                    std::span<const Symbol> unknowns);

}  // namespace sgi
