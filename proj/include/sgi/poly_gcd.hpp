#pragma once

#include <optional>

#include "sgi/poly.hpp"

namespace sgi {

/// Greatest common divisor over the rationals, normalized so that its
/// leading coefficient (MonomialLess) is 1. Computed recursively: content and
/// primitive part with respect to one symbol, then a primitive pseudo-
/// remainder sequence. Throws InvalidInput when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// gcd of the coefficients of `p` viewed as a polynomial in `s`, normalized.
Poly content_in(const Poly& p, const Symbol& s);
/// p divided by content_in(p, s).
Poly primitive_part_in(const Poly& p, const Symbol& s);
/// Pseudo-remainder of a by b with respect to `s`; b must involve s or be
/// a nonzero constant.
Poly pseudo_remainder(const Poly& a, const Poly& b, const Symbol& s);

/// p scaled so that its leading coefficient is 1 (zero stays zero).
Poly monic(const Poly& p);

/// Exact square root when `p` is the square of a polynomial with rational
/// coefficients; nullopt otherwise. The root returned has positive leading
/// coefficient.
std::optional<Poly> poly_sqrt(const Poly& p);

}  // namespace sgi
