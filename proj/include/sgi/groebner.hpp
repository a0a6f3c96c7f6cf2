#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sgi/deadline.hpp"
#include "sgi/poly.hpp"

namespace sgi {

enum class MonomialOrder { Lex, GrevLex };

/// Reduced Gröbner basis together with the ring it lives in.
///
/// `variables` are the ring indeterminates, highest first. When `parameters`
/// is nonempty the coefficient field is Q(parameters): basis elements are
/// stored with polynomial coefficients in the parameters, content removed.
struct GroebnerBasis {
  std::vector<Poly> polys;  // ascending by leading monomial
  std::vector<std::vector<std::uint32_t>> leading_exponents;  // aligned with polys
  std::vector<Symbol> variables;
  std::vector<Symbol> parameters;
  MonomialOrder order = MonomialOrder::GrevLex;

  /// True for the basis {1} of an inconsistent system.
  bool is_unit() const noexcept;
  bool is_zero_ideal() const noexcept { return polys.empty(); }
};

/// Reduced Gröbner basis over Q. Every symbol of `polys` must be listed in
/// `variables` (highest first). Buchberger's algorithm with the
/// Gebauer–Möller criteria and sugar pair selection.
GroebnerBasis groebner_basis(std::span<const Poly> polys, std::span<const Symbol> variables,
                             MonomialOrder order, const Deadline& deadline = {});

/// Same with variables taken as all symbols in alphabetical order.
GroebnerBasis groebner_basis(std::span<const Poly> polys, MonomialOrder order,
                             const Deadline& deadline = {});

/// Reduced Gröbner basis over Q(p1..pm)[variables], where the parameters are
/// every symbol of `polys` not listed in `variables`. Coefficients stay
/// polynomial in the parameters; reductions are fraction-free.
GroebnerBasis groebner_basis_over_parameters(std::span<const Poly> polys,
                                             std::span<const Symbol> variables,
                                             MonomialOrder order,
                                             const Deadline& deadline = {});

/// Fully reduced normal form of p against the basis. Over Q(parameters) the
/// result is determined up to a nonzero factor from Q[parameters].
Poly normal_form(const Poly& p, const GroebnerBasis& basis);

/// Ideal membership test via normal_form.
bool ideal_contains(const GroebnerBasis& basis, const Poly& p);

/// Leading monomial of p in the basis ring, as an exponent vector over
/// basis.variables.
std::vector<std::uint32_t> leading_exponents(const Poly& p, const GroebnerBasis& basis);

}  // namespace sgi
