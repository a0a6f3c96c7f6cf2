#include <doctest.h>

#include "helpers.hpp"
#include "sgi/errors.hpp"
#include "sgi/ratfunc.hpp"

using namespace sgi;
using sgi::testing::P;
using sgi::testing::S;

TEST_CASE("symbol names") {
  CHECK(Symbol::is_valid_name("k01"));
  CHECK(Symbol::is_valid_name("x1_"));
  CHECK_FALSE(Symbol::is_valid_name(""));
  CHECK_FALSE(Symbol::is_valid_name("1k"));
  CHECK_FALSE(Symbol::is_valid_name("_k"));
  CHECK_THROWS_AS(Symbol("a-b"), std::invalid_argument);
}

TEST_CASE("parse and print") {
  CHECK(P("-(k21 + k01)").to_string() == "-k01 - k21");
  CHECK(P("2*x^2 - x*y + 1/2").to_string() == "2*x^2 - x*y + 1/2");
  CHECK(P("  c1 * x10 ").to_string() == "c1*x10");
  CHECK(P("0").is_zero());
  CHECK(P("(s+k)*(s-k)") == P("s^2 - k^2"));
  CHECK(P("-1/2*c").to_string() == "-1/2*c");
  CHECK(P("x/4") == P("1/4*x"));
  CHECK_THROWS_AS(P("1+"), ParseError);
  CHECK_THROWS_AS(P("x/y"), ParseError);
  CHECK_THROWS_AS(P("(x"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("x^y"), ParseError);
}

TEST_CASE("print with priority lists the priority symbols first") {
  const std::vector<Symbol> order{S("k"), S("c"), S("s")};
  CHECK(P("s^2 + k*s + c*k").to_string(order) == "k*c + k*s + s^2");
  CHECK(P("c*x*s").to_string(order) == "c*s*x");
}

TEST_CASE("structural queries") {
  const Poly p = P("3*s^2*k + s*c - 7");
  CHECK(p.degree(S("s")) == 2);
  CHECK(p.total_degree() == 3);
  const auto cs = p.coefficients(S("s"));
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == P("-7"));
  CHECK(cs[1] == P("c"));
  CHECK(cs[2] == P("3*k"));
  CHECK(Poly::from_coefficients(S("s"), cs) == p);
  CHECK(p.leading_coefficient_in(S("s")) == P("3*k"));
  CHECK(p.derivative(S("s")) == P("6*s*k + c"));
  CHECK(p.constant_term() == -7);
  CHECK(p.substitute({{S("s"), P("k")}}) == P("3*k^3 + k*c - 7"));
  CHECK(p.rename({{S("k"), S("K")}}) == P("3*s^2*K + s*c - 7"));
  CHECK(p.evaluate({{S("s"), 2}, {S("k"), Rational(1, 3)}, {S("c"), 5}}) == 7);
  CHECK_THROWS_AS(p.evaluate({{S("s"), 2}}), std::invalid_argument);
}

TEST_CASE("exact division") {
  CHECK(Poly::divide_exact(P("s^2 - k^2"), P("s + k")) == P("s - k"));
  CHECK_FALSE(Poly::divide(P("s^2 + k^2"), P("s + k")).has_value());
  CHECK_THROWS_AS(Poly::divide_exact(P("x"), P("0")), std::domain_error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(12345);
  const std::vector<Symbol> syms{S("a"), S("b"), S("c")};
  for (int trial = 0; trial < 200; ++trial) {
    const Poly p = testing::random_poly(rng, syms);
    const Poly q = testing::random_poly(rng, syms);
    const Poly r = testing::random_poly(rng, syms);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p - p == Poly{});
    CHECK(p + q - q == p);
  }
}

TEST_CASE("print/parse round trip on random polynomials") {
  std::mt19937_64 rng(99);
  const std::vector<Symbol> syms{S("k01"), S("C1"), S("x_")};
  for (int trial = 0; trial < 200; ++trial) {
    const Poly p = testing::random_poly(rng, syms, 4, 6);
    CHECK(P(p.to_string()) == p);
  }
}

TEST_CASE("rational functions") {
  const RatFunc f{P("(s+k)*c"), P("(s+k)*(s+m)")};
  const RatFunc r = f.reduced();
  CHECK(r.num() == P("c"));
  CHECK(r.den() == P("s + m"));
  CHECK(f == r);
  CHECK((RatFunc{P("1")} / RatFunc{P("x")} + RatFunc{P("1")}) == RatFunc{P("1 + x"), P("x")});
  CHECK(RatFunc{P("c*x"), P("X")}.to_string() == "c*x/X");
  CHECK(RatFunc{P("c + x"), P("2*X")}.to_string() == "(c + x)/(2*X)");
  CHECK_THROWS_AS((RatFunc{P("1"), P("0")}), std::domain_error);
  CHECK(RatFunc{P("x"), P("y")}.evaluate({{S("x"), 3}, {S("y"), 4}}) == Rational(3, 4));
}
