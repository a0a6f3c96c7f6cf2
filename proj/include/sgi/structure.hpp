#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sgi/poly.hpp"

namespace sgi {

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Reserved name of the Laplace variable; never a parameter or constant.
inline const Symbol& laplace_symbol() {
  static const Symbol s{"s"};
  return s;
}

/// Uncontrolled linear time-invariant structure x' = A x, y = C x, x(0) = x0.
struct StructureSpec {
  std::size_t n = 0;  // states
  std::size_t k = 0;  // outputs
  std::vector<Symbol> parameters;  // theta, in order
  /// Known symbolic quantities: allowed in entries, never treated as unknown.
  std::vector<Symbol> constants;
  PolyMatrix A;               // n x n
  PolyMatrix C;               // k x n
  std::vector<Poly> x0;       // n
  std::vector<Poly> outflow;  // n, environment outflow labels for diagrams
  bool compartmental = false;

  friend bool operator==(const StructureSpec&, const StructureSpec&) = default;
};

/// Throws InvalidInput on shape mismatch, duplicate or reserved names, or
/// symbols that are neither parameters nor constants.
void validate_structure(const StructureSpec& spec);

struct CompartmentalViolation {
  enum class Kind { OffDiagonal, Diagonal, Observation };
  Kind kind;
  std::size_t row;  // 1-based
  std::size_t col;  // 1-based
  std::string expression;  // the quantity that must be non-negative
};

struct CompartmentalReport {
  bool passed = true;
  std::vector<CompartmentalViolation> violations;
};

/// Conservation-of-mass sign checks: a_ij >= 0 off the diagonal,
/// -a_jj - sum_{i != j} a_ij >= 0 for every column j, and C >= 0. An entry
/// whose coefficients are all non-negative passes outright (parameters are
/// non-negative); anything else is evaluated at a positive generic point.
CompartmentalReport validate_compartmental(const StructureSpec& spec, std::uint64_t seed = 1);

/// Coordinate of an editable experiment-design entry.
struct EditTarget {
  enum class Kind { Observation, InitialCondition };
  Kind kind;
  std::size_t row;      // 0-based
  std::size_t col = 0;  // 0-based, Observation only

  /// Parses "C[i][j]" or "x0[i]" with 1-based indices.
  static EditTarget parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const EditTarget&, const EditTarget&) = default;
};

struct DesignEdit {
  EditTarget target;
  Poly value;

  /// Parses "C[i][j]=expr" or "x0[i]=expr".
  static DesignEdit parse(std::string_view text);
};

/// Returns a copy of `spec` with the edits applied in order. Symbols in edit
/// values that are not yet declared become new parameters (appended);
/// parameters that no longer occur anywhere are dropped. Throws InvalidInput
/// for out-of-range targets.
StructureSpec apply_edits(const StructureSpec& spec, const std::vector<DesignEdit>& edits);

/// Reads the structure file format (a JSON document with fields n, k,
/// parameters, optional constants, A, C, x0, outflow_params, compartmental).
/// Throws ParseError naming the offending field.
StructureSpec parse_structure(std::string_view text);

/// Canonical text of the structure file format; parse_structure inverts it
/// and serialize(parse(t)) == t for canonical t.
std::string serialize_structure(const StructureSpec& spec);

}  // namespace sgi
