#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgi/poly.hpp"
#include "sgi/transfer.hpp"

namespace sgi {

/// Where an invariant was read from.
struct InvariantOrigin {
  enum class Part { Denominator, Numerator };
  std::size_t output;  // 0-based transfer matrix entry
  Part part;
  std::uint32_t power;  // power of s
  friend bool operator==(const InvariantOrigin&, const InvariantOrigin&) = default;
};

/// Non-constant coefficients of a processed transfer matrix, in entry
/// order, denominator before numerator, ascending powers of s. Exact
/// duplicates are kept once, at their first position.
struct InvariantSet {
  std::vector<Poly> invariants;
  std::vector<InvariantOrigin> origins;
};

/// Throws InvalidInput when `tm` is unprocessed. The monic leading
/// denominator coefficient of a canonical entry is skipped (it is 1).
InvariantSet collect_invariants(const TransferMatrix& tm);

enum class NamingMode { Underscore, Caps };

NamingMode parse_naming_mode(std::string_view text);
std::string to_string(NamingMode mode);

/// theta_prime[i] is the alternative name for theta[i].
struct ParameterRenaming {
  std::vector<Symbol> theta;
  std::vector<Symbol> theta_prime;
  NamingMode mode = NamingMode::Caps;

  std::map<Symbol, Symbol> forward() const;
  std::map<Symbol, Symbol> backward() const;
};

/// Underscore mode appends "_"; caps mode upper-cases the first character
/// and requires every name to start with a lower-case letter. Throws
/// InvalidInput for an unsupported name or when a generated name collides
/// with theta or with `reserved` (e.g. declared constants).
ParameterRenaming theta_prime_creation(std::span<const Symbol> theta, NamingMode mode,
                                       std::span<const Symbol> reserved = {});

/// phi_i(theta') - phi_i(theta) for every invariant.
struct TestEquations {
  std::vector<Poly> equations;
  /// Equations that vanish identically; kept for traceability.
  std::vector<bool> identically_zero;
  std::vector<Symbol> unknowns;  // theta'
  std::vector<Symbol> knowns;    // theta

  /// The equations that are not identically zero.
  std::vector<Poly> nontrivial() const;
};

/// Raised when a structure yields no invariants at all: its output carries
/// no parameter information and every parameter is unidentifiable.
class EmptyInvariants : public std::runtime_error {
 public:
  EmptyInvariants() : std::runtime_error("the transfer matrix carries no invariants") {}
};

TestEquations identifiability_eqn_list(const InvariantSet& inv, const ParameterRenaming& ren);

}  // namespace sgi
