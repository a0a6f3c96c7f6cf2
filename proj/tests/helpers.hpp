#pragma once

#include <doctest.h>

#include "fixtures.hpp"

namespace doctest {
template <>
struct StringMaker<sgi::Poly> {
  static String convert(const sgi::Poly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<sgi::RatFunc> {
  static String convert(const sgi::RatFunc& f) { return f.to_string().c_str(); }
};
}  // namespace doctest
