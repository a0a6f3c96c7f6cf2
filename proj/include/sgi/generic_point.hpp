#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "sgi/rational.hpp"
#include "sgi/symbol.hpp"

namespace sgi {

/// A random exact specialization standing in for "almost all" parameter
/// values. Values are integers in [1, 10^6], deterministic in the seed.
struct GenericPoint {
  std::map<Symbol, Rational> assignment;
  std::uint64_t seed = 0;
};

/// Draws values for `symbols` in the given order. With `distinct` (the
/// default) no two symbols share a value.
GenericPoint make_generic_point(std::span<const Symbol> symbols, std::uint64_t seed,
                                bool distinct = true);

}  // namespace sgi
