#include <doctest.h>

#include "helpers.hpp"
#include "sgi/errors.hpp"
#include "sgi/poly_gcd.hpp"

using namespace sgi;
using sgi::testing::P;
using sgi::testing::S;

TEST_CASE("gcd examples") {
  CHECK(poly_gcd(P("x^2"), P("x")) == P("x"));
  CHECK(poly_gcd(P("3*x^2*y + y"), P("1")) == P("1"));
  CHECK(poly_gcd(P("0"), P("2*x + 4")) == P("x + 2"));
  CHECK_THROWS_AS(poly_gcd(P("0"), P("0")), InvalidInput);

  const Poly a = P("(s + k)*(s + m)");
  const Poly b = P("s + k");
  const Poly g = poly_gcd(a, b);
  // Oracle: exact division of both inputs by the result.
  CHECK(Poly::divide(a, g).has_value());
  CHECK(Poly::divide(b, g).has_value());
  CHECK(g == P("k + s"));
  CHECK(g.leading_coefficient() == 1);
}

TEST_CASE("gcd of transfer-function style polynomials") {
  const Poly den = P("(s + k01)*(s^2 + (k12 + k21)*s + k12*k21)");
  const Poly num = P("c1*x10*(s + k01)*(s + k12)");
  CHECK(poly_gcd(num, den) == P("(s + k01)*(s + k12)"));
  CHECK(poly_gcd(P("2*c*x"), P("4*c*y")) == P("c"));
}

TEST_CASE("gcd property: divides both, cofactors coprime") {
  std::mt19937_64 rng(7);
  const std::vector<Symbol> syms{S("a"), S("b"), S("c")};
  int nontrivial = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Poly common = testing::random_poly(rng, syms, 2, 3);
    const Poly p = testing::random_poly(rng, syms, 2, 3) * common;
    const Poly q = testing::random_poly(rng, syms, 2, 3) * common;
    if (p.is_zero() && q.is_zero()) continue;
    const Poly g = poly_gcd(p, q);
    REQUIRE_FALSE(g.is_zero());
    CHECK(g.leading_coefficient() == 1);
    const auto pg = Poly::divide(p, g);
    const auto qg = Poly::divide(q, g);
    REQUIRE(pg.has_value());
    REQUIRE(qg.has_value());
    if (!pg->is_zero() && !qg->is_zero()) CHECK(poly_gcd(*pg, *qg).is_constant());
    if (!common.is_constant() && !p.is_zero() && !q.is_zero()) {
      CHECK(Poly::divide(g, common).has_value());
      ++nontrivial;
    }
  }
  CHECK(nontrivial > 10);
}

TEST_CASE("content, primitive part, pseudo-remainder") {
  const Symbol s = S("s");
  CHECK(content_in(P("k*s^2 + k^2*s"), s) == P("k"));
  CHECK(primitive_part_in(P("k*s^2 + k^2*s"), s) == P("s^2 + k*s"));
  CHECK(pseudo_remainder(P("s^2"), P("2*s + k"), s) == P("k^2"));
}

TEST_CASE("exact square roots") {
  CHECK(poly_sqrt(P("k^2")) == P("k"));
  CHECK(poly_sqrt(P("4*x^2 + 4*x*y + y^2")) == P("2*x + y"));
  CHECK(poly_sqrt(P("(a - b + 1/3)^2")).value() * poly_sqrt(P("(a - b + 1/3)^2")).value() ==
        P("(a - b + 1/3)^2"));
  CHECK_FALSE(poly_sqrt(P("x^2 + 1")).has_value());
  CHECK_FALSE(poly_sqrt(P("2*x^2")).has_value());
  CHECK_FALSE(poly_sqrt(P("-x^2")).has_value());
}
