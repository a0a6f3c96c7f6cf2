#include <doctest.h>

#include "helpers.hpp"
#include "sgi/errors.hpp"
#include "sgi/generic_point.hpp"
#include "sgi/poly_gcd.hpp"
#include "sgi/transfer.hpp"

using namespace sgi;
using sgi::testing::load_structure;
using sgi::testing::P;
using sgi::testing::S;

namespace {

StructureSpec one_by_one(const char* a, const char* c, const char* x0) {
  StructureSpec spec;
  spec.n = 1;
  spec.k = 1;
  spec.A = {{P(a)}};
  spec.C = {{P(c)}};
  spec.x0 = {P(x0)};
  spec.outflow = {Poly{}};
  std::set<Symbol> used;
  for (const Poly* p : {&spec.A[0][0], &spec.C[0][0], &spec.x0[0]}) {
    for (const Symbol& s : p->symbols()) used.insert(s);
  }
  spec.parameters.assign(used.begin(), used.end());
  return spec;
}

}  // namespace

TEST_CASE("one compartment by inspection") {
  const TransferMatrix tm = build_transfer_matrix(one_by_one("-k", "c", "x"));
  REQUIRE(tm.entries.size() == 1);
  CHECK(tm.entries[0].num() == P("c*x"));
  CHECK(tm.entries[0].den() == P("s + k"));
  CHECK_FALSE(tm.processed);
}

TEST_CASE("parent entries share det(sI - A), monic of degree 3") {
  const StructureSpec spec = load_structure("parent.json");
  const TransferMatrix tm = build_transfer_matrix(spec);
  REQUIRE(tm.entries.size() == 3);
  const Poly det = tm.entries[0].den();
  CHECK(det.degree(laplace_symbol()) == 3);
  CHECK(det.leading_coefficient_in(laplace_symbol()) == Poly{1});
  for (const RatFunc& e : tm.entries) {
    CHECK(e.den() == det);
    CHECK(e.num().degree(laplace_symbol()) < 3);
  }
  // Independent expansion of the 3x3 determinant.
  const Poly s{laplace_symbol()};
  const auto& A = spec.A;
  auto a = [&](int i, int j) { return (i == j ? s : Poly{}) - A[i][j]; };
  const Poly expected = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                        a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                        a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
  CHECK(det == expected);
}

TEST_CASE("transfer entries agree with an exact linear solve at random points") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> value(-50, 50);
  for (int trial = 0; trial < 20; ++trial) {
    const StructureSpec spec = sgi::testing::random_compartmental(rng, 1 + trial % 3);
    const TransferMatrix tm = build_transfer_matrix(spec);
    for (int point = 0; point < 20; ++point) {
      const GenericPoint g = make_generic_point(spec.parameters, rng());
      // Keep s away from the poles: every eigenvalue of A is non-positive
      // for compartmental matrices, so a positive s is safe.
      Rational s_value(1 + std::abs(value(rng)), 1 + std::abs(value(rng)));
      s_value.canonicalize();
      auto at = g.assignment;
      at[laplace_symbol()] = s_value;
      const auto expected = sgi::testing::output_transform_at(spec, g.assignment, s_value);
      for (std::size_t r = 0; r < spec.k; ++r) {
        CHECK(tm.entries[r].evaluate(at) == expected[r]);
      }
    }
  }
}

TEST_CASE("non-compartmental matrices with pivoting") {
  StructureSpec spec;
  spec.n = 2;
  spec.k = 1;
  spec.parameters = {S("a"), S("b")};
  spec.A = {{P("0"), P("a")}, {P("b"), P("0")}};
  spec.C = {{P("1"), P("1")}};
  spec.x0 = {P("1"), P("0")};
  spec.outflow = {Poly{}, Poly{}};
  const TransferMatrix tm = build_transfer_matrix(spec);
  CHECK(tm.entries[0].den() == P("s^2 - a*b"));
  CHECK(tm.entries[0].num() == P("s + b"));
}

TEST_CASE("process_matrix cancels and normalizes") {
  TransferMatrix tm;
  tm.sort_order = {S("c"), S("k"), S("m"), S("x"), laplace_symbol()};

  SUBCASE("forced cancellation") {
    tm.entries = {RatFunc{P("(s + k)*c"), P("(s + k)*(s + m)")}};
    const TransferMatrix out = process_matrix(tm, true);
    CHECK(out.entries[0].num() == P("c"));
    CHECK(out.entries[0].den() == P("s + m"));
    CHECK(out.processed);
    CHECK(out.canonical);
  }
  SUBCASE("monic normalization") {
    tm.entries = {RatFunc{P("c*x"), P("2*s + 2*k")}};
    const TransferMatrix out = process_matrix(tm, true);
    CHECK(out.entries[0].num() == P("1/2*c*x"));
    CHECK(out.entries[0].den() == P("s + k"));
  }
  SUBCASE("non-canonical keeps the denominator") {
    tm.entries = {RatFunc{P("c*x"), P("2*s + 2*k")}};
    const TransferMatrix out = process_matrix(tm, false);
    CHECK(out.entries[0].den() == P("2*s + 2*k"));
    CHECK(out.entries[0].num() == P("c*x"));
    CHECK_FALSE(out.canonical);
  }
  SUBCASE("non-canonical keeps the cofactor after cancellation") {
    tm.entries = {RatFunc{P("c*(s + m)"), P("(2*s + 2*k)*(s + m)")}};
    const TransferMatrix out = process_matrix(tm, false);
    CHECK(out.entries[0].den() == P("2*s + 2*k"));
    CHECK(out.entries[0].num() == P("c"));
  }
  SUBCASE("already processed") {
    tm.entries = {RatFunc{P("1"), P("s + k")}};
    CHECK_THROWS_AS(process_matrix(process_matrix(tm, true), true), InvalidInput);
  }
  SUBCASE("parameter-dependent leading coefficient") {
    tm.entries = {RatFunc{P("1"), P("k*s + 1")}};
    CHECK_THROWS_AS(process_matrix(tm, true), InvalidInput);
    CHECK(process_matrix(tm, false).entries[0].den() == P("k*s + 1"));
  }
}

TEST_CASE("processed random structures have constant gcd and monic denominators") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const StructureSpec spec = sgi::testing::random_compartmental(rng, 1 + trial % 3);
    const TransferMatrix raw = build_transfer_matrix(spec);
    const TransferMatrix tm = process_matrix(raw, true);
    for (std::size_t i = 0; i < tm.entries.size(); ++i) {
      const RatFunc& e = tm.entries[i];
      CHECK(e.den().leading_coefficient_in(laplace_symbol()) == Poly{1});
      if (!e.num().is_zero()) CHECK(poly_gcd(e.num(), e.den()).is_constant());
      CHECK(e == raw.entries[i]);
    }
  }
}

TEST_CASE("entry text follows the sort order") {
  const StructureSpec spec = one_by_one("-k", "c", "x");
  const TransferMatrix tm = process_matrix(build_transfer_matrix(spec), true);
  const auto [num, den] = entry_text(tm, 0);
  CHECK(num == "c*x");
  CHECK(den == "k + s");
  CHECK(default_sort_order(spec).back() == laplace_symbol());
}
