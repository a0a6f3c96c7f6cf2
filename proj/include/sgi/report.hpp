#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgi/classify.hpp"
#include "sgi/invariants.hpp"
#include "sgi/solver.hpp"
#include "sgi/structure.hpp"

namespace sgi {

using Json = nlohmann::ordered_json;

struct GraphNode {
  enum class Kind { Compartment, Output, Environment };
  std::string id;
  Kind kind;
  std::string label;
};

struct GraphEdge {
  enum class Kind { Flow, Outflow, Observation };
  std::string from;
  std::string to;
  Kind kind;
  std::string label;
};

/// Compartments x1..xn, one output node per nonzero row of C, and an
/// environment sink. Flow x_j -> x_i for every nonzero off-diagonal A(i,j),
/// outflow x_j -> env for every nonzero outflow label, and an observation
/// edge x_j -> y_i for every nonzero C(i,j).
struct CompartmentGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::string layout_hint = "LR";
};

/// Accepted layout hints, as graph rank directions.
bool is_layout_hint(std::string_view hint);

CompartmentGraph build_graph(const StructureSpec& spec, std::string layout_hint = "LR");

/// Graphviz DOT text.
std::string to_dot(const CompartmentGraph& graph);
Json to_json(const CompartmentGraph& graph);

/// "lhs = rhs" text of a relation p = 0: terms in unknowns on the left when
/// both sides mention different kinds of symbols, otherwise positive terms
/// on the left.
std::string relation_text(const Poly& p, std::span<const Symbol> unknowns);

Json to_json(const SolutionSet& sol);
Json to_json(const Classification& c);

/// theta aligned with theta'.
Json parameters_panel(const ParameterRenaming& renaming);
Json diagram_panel(const CompartmentGraph& graph);

/// Four panels: parameters (theta aligned with theta'), solution (generic
/// summary, branches, relations), diagram (graph object and DOT text) and
/// classification (verdict and per-parameter statuses). `solution` is
/// absent when the solver failed.
Json render_report(const StructureSpec& spec, const ParameterRenaming& renaming,
                   const SolutionSet* solution, const Classification& classification,
                   const std::string& layout_hint = "LR");

/// Plain-text rendering of a report document (or any document carrying its
/// four panels); the last line is "verdict: <verdict>".
std::string render_text(const Json& report);

}  // namespace sgi
