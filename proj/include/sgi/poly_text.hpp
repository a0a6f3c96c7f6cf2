#pragma once

#include <string_view>

#include "sgi/poly.hpp"

namespace sgi {

/// Parses polynomial text: integer literals, symbols, + - * ^, parentheses,
/// and division by nonzero constants (so "1/2*k" is a rational literal).
/// Whitespace is ignored. Throws ParseError with the character offset.
Poly parse_poly(std::string_view text);

}  // namespace sgi
