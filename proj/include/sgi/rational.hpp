#pragma once

#include <gmpxx.h>

#include <string>

namespace sgi {

/// Exact arbitrary-precision rational number.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);

}  // namespace sgi
