#pragma once

#include <string>
#include <vector>

#include "sgi/ratfunc.hpp"
#include "sgi/structure.hpp"

namespace sgi {

/// Laplace transform of the output, C (sI - A)^-1 x0: one rational function
/// in s and the parameters per output.
struct TransferMatrix {
  std::vector<RatFunc> entries;
  bool processed = false;
  bool canonical = false;
  /// Display order for terms: parameters first, then s.
  std::vector<Symbol> sort_order;
};

/// Exact construction by fraction-free (Bareiss) Gauss–Jordan elimination on
/// [sI - A | x0]. Every entry has denominator det(sI - A), monic of degree n
/// in s; entries are not yet reduced.
TransferMatrix build_transfer_matrix(const StructureSpec& spec);

/// Cancels common factors of each entry (pole-zero cancellation) and, when
/// `canonical_form` is set, divides numerator and denominator by the
/// denominator's leading coefficient in s. An empty `sort_order` keeps the
/// matrix's own. Throws InvalidInput when `tm` is already processed, or when
/// canonical form is requested for a leading coefficient that depends on
/// parameters.
TransferMatrix process_matrix(const TransferMatrix& tm, bool canonical_form,
                              std::vector<Symbol> sort_order = {});

/// Default term order: the spec's parameters, its constants, then s.
std::vector<Symbol> default_sort_order(const StructureSpec& spec);

/// "num/den" pair texts of an entry, terms ordered by `tm.sort_order`.
std::pair<std::string, std::string> entry_text(const TransferMatrix& tm, std::size_t i);

}  // namespace sgi
