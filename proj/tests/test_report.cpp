#include <doctest.h>

#include "helpers.hpp"
#include "sgi/errors.hpp"
#include "sgi/report.hpp"
#include "sgi/transfer.hpp"

using namespace sgi;
using sgi::testing::load_structure;
using sgi::testing::P;
using sgi::testing::S;

namespace {

std::set<std::tuple<std::string, std::string, std::string>> edge_set(const CompartmentGraph& g) {
  std::set<std::tuple<std::string, std::string, std::string>> out;
  for (const GraphEdge& e : g.edges) out.insert({e.from, e.to, e.label});
  return out;
}

std::size_t count_kind(const CompartmentGraph& g, GraphNode::Kind kind) {
  return static_cast<std::size_t>(std::count_if(
      g.nodes.begin(), g.nodes.end(), [&](const GraphNode& n) { return n.kind == kind; }));
}

struct Analysis {
  StructureSpec spec;
  ParameterRenaming renaming;
  SolutionSet solution;
  Classification classification;
};

Analysis analyse(const StructureSpec& spec) {
  Analysis a;
  a.spec = spec;
  const InvariantSet inv = collect_invariants(process_matrix(build_transfer_matrix(spec), true));
  a.renaming = theta_prime_creation(spec.parameters, NamingMode::Caps);
  const TestEquations eqs = identifiability_eqn_list(inv, a.renaming);
  a.solution = solve_generic(eqs);
  if (a.solution.generic_dimension == 0 &&
      a.solution.generic_count == std::optional<std::uint64_t>{1}) {
    a.solution.symbolic = tautological_solution(eqs);
  } else {
    a.solution.symbolic = solve_symbolic(eqs);
  }
  a.classification = classify_solutions(a.solution, spec.parameters);
  return a;
}

}  // namespace

TEST_CASE("parent graph") {
  const CompartmentGraph g = build_graph(load_structure("parent.json"));
  CHECK(count_kind(g, GraphNode::Kind::Compartment) == 3);
  CHECK(count_kind(g, GraphNode::Kind::Output) == 3);
  CHECK(count_kind(g, GraphNode::Kind::Environment) == 1);
  const std::set<std::tuple<std::string, std::string, std::string>> expected{
      {"x1", "x2", "k21"}, {"x2", "x1", "k12"}, {"x2", "x3", "k32"}, {"x3", "x2", "k23"},
      {"x1", "env", "k01"}, {"x1", "y1", "c1"}, {"x2", "y2", "c2"}, {"x3", "y3", "c3"},
  };
  CHECK(edge_set(g) == expected);
}

TEST_CASE("a zero gain removes its observation edge and output node") {
  const CompartmentGraph g = build_graph(load_structure("variant_two_gains_known.json"));
  CHECK(count_kind(g, GraphNode::Kind::Output) == 2);
  CHECK(std::none_of(g.edges.begin(), g.edges.end(),
                     [](const GraphEdge& e) { return e.to == "y3"; }));
  CHECK(edge_set(g).contains({"x1", "y1", "1"}));
}

TEST_CASE("single compartment graph") {
  const CompartmentGraph g = build_graph(load_structure("one_compartment.json"));
  CHECK(count_kind(g, GraphNode::Kind::Compartment) == 1);
  const auto obs = std::count_if(g.edges.begin(), g.edges.end(), [](const GraphEdge& e) {
    return e.kind == GraphEdge::Kind::Observation;
  });
  CHECK(obs == 1);
}

TEST_CASE("graph edges follow matrix sparsity on random structures") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const StructureSpec spec = sgi::testing::random_compartmental(rng, 1 + trial % 4);
    const CompartmentGraph g = build_graph(spec);
    std::set<std::tuple<std::string, std::string, std::string>> expected;
    for (std::size_t i = 0; i < spec.n; ++i) {
      for (std::size_t j = 0; j < spec.n; ++j) {
        if (i != j && !spec.A[i][j].is_zero()) {
          expected.insert({"x" + std::to_string(j + 1), "x" + std::to_string(i + 1),
                           spec.A[i][j].to_string()});
        }
      }
      if (!spec.outflow[i].is_zero()) {
        expected.insert({"x" + std::to_string(i + 1), "env", spec.outflow[i].to_string()});
      }
    }
    for (std::size_t r = 0; r < spec.k; ++r) {
      for (std::size_t j = 0; j < spec.n; ++j) {
        if (!spec.C[r][j].is_zero()) {
          expected.insert({"x" + std::to_string(j + 1), "y" + std::to_string(r + 1),
                           spec.C[r][j].to_string()});
        }
      }
    }
    CHECK(edge_set(g) == expected);
    CHECK(g.edges.size() == expected.size());
  }
}

TEST_CASE("DOT output") {
  const std::string dot = to_dot(build_graph(load_structure("parent.json"), "TB"));
  CHECK(dot.starts_with("digraph structure {\n  rankdir=TB;\n"));
  CHECK(dot.find("x1 -> env [label=\"k01\", style=dashed];") != std::string::npos);
  CHECK(dot.find("x2 -> x1 [label=\"k12\"];") != std::string::npos);
  CHECK(dot.ends_with("}\n"));
  CHECK_THROWS_AS(build_graph(load_structure("parent.json"), "sideways"), InvalidInput);
}

TEST_CASE("relation text splits unknown and known sides") {
  const std::vector<Symbol> unknowns{S("C1"), S("X20"), S("X10")};
  CHECK(relation_text(P("C1*X20 - c1*x20"), unknowns) == "C1*X20 = c1*x20");
  CHECK(relation_text(P("X20*x10 - X10*x20"), unknowns) == "X20*x10 = X10*x20");
  CHECK(relation_text(P("-C1 + c1"), unknowns) == "C1 = c1");
}

TEST_CASE("parent report panels") {
  const Analysis a = analyse(load_structure("parent.json"));
  const Json r = render_report(a.spec, a.renaming, &a.solution, a.classification);
  REQUIRE(r["parameters"]["pairs"].size() == 11);
  CHECK(r["parameters"]["pairs"][0] == Json{{"theta", "k01"}, {"theta_prime", "K01"}});
  const Json& sym = r["solution"]["symbolic"];
  CHECK(sym["branches"][0]["K01"] == "k01");
  bool certificate = false;
  for (const Json& rel : sym["relations"]) {
    const std::string t = rel["text"];
    certificate = certificate || t == "X20*C1 = c1*x20" || t == "C1*X20 = c1*x20";
  }
  CHECK(certificate);
  CHECK(r["diagram"]["graph"]["nodes"].size() == 7);
  CHECK(r["classification"]["verdict"] == "SU");

  const std::string text = render_text(r);
  CHECK(text.find("K01 = k01") != std::string::npos);
  CHECK(text.ends_with("verdict: SU\n"));
  CHECK(render_text(render_report(a.spec, a.renaming, &a.solution, a.classification)) == text);
}

TEST_CASE("report without a solution") {
  const StructureSpec spec = load_structure("parent.json");
  const auto ren = theta_prime_creation(spec.parameters, NamingMode::Underscore);
  const Json r = render_report(spec, ren, nullptr, unknown_classification("timed out"));
  CHECK(r["solution"].is_null());
  const std::string text = render_text(r);
  CHECK(text.find("reason: timed out") != std::string::npos);
  CHECK(text.ends_with("verdict: unknown\n"));
}

TEST_CASE("SGI variant report verdict") {
  const Analysis a = analyse(load_structure("variant_c1_known.json"));
  const Json r = render_report(a.spec, a.renaming, &a.solution, a.classification);
  CHECK(r["classification"]["verdict"] == "SGI");
  CHECK(render_text(r).ends_with("verdict: SGI\n"));
}
