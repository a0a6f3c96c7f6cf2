#include "sgi/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "sgi/errors.hpp"

namespace sgi {
namespace {

std::string node_id(char prefix, std::size_t index) { return prefix + std::to_string(index + 1); }

std::string node_kind(GraphNode::Kind k) {
  switch (k) {
    case GraphNode::Kind::Compartment:
      return "compartment";
    case GraphNode::Kind::Output:
      return "output";
    case GraphNode::Kind::Environment:
      return "environment";
  }
  return "compartment";
}

std::string edge_kind(GraphEdge::Kind k) {
  switch (k) {
    case GraphEdge::Kind::Flow:
      return "flow";
    case GraphEdge::Kind::Outflow:
      return "outflow";
    case GraphEdge::Kind::Observation:
      return "observation";
  }
  return "flow";
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Json names(std::span<const Symbol> symbols) {
  Json out = Json::array();
  for (const Symbol& s : symbols) out.push_back(s.name());
  return out;
}

Json optional_count(const std::optional<std::uint64_t>& count) {
  return count ? Json(*count) : Json(nullptr);
}

Json branch_json(const SolutionBranch& b) {
  Json out = Json::object();
  for (const auto& [unknown, value] : b.assignments) {
    out[unknown.name()] = value ? Json(value->to_string()) : Json(nullptr);
  }
  return out;
}

/// False for null panels and failure markers.
bool available(const Json& panel, const char* key) {
  return panel.is_object() && panel.contains(key);
}

}  // namespace

bool is_layout_hint(std::string_view hint) {
  static constexpr std::array<std::string_view, 4> kHints{"LR", "TB", "RL", "BT"};
  return std::find(kHints.begin(), kHints.end(), hint) != kHints.end();
}

CompartmentGraph build_graph(const StructureSpec& spec, std::string layout_hint) {
  if (!is_layout_hint(layout_hint)) {
    throw InvalidInput("layout hint must be one of LR, TB, RL, BT; got '" + layout_hint + "'");
  }
  CompartmentGraph g;
  g.layout_hint = std::move(layout_hint);
  for (std::size_t j = 0; j < spec.n; ++j) {
    std::string label = node_id('x', j);
    if (!spec.x0[j].is_zero()) label += "(0) = " + spec.x0[j].to_string();
    g.nodes.push_back({node_id('x', j), GraphNode::Kind::Compartment, label});
  }
  for (std::size_t i = 0; i < spec.k; ++i) {
    const bool observed = std::any_of(spec.C[i].begin(), spec.C[i].end(),
                                      [](const Poly& p) { return !p.is_zero(); });
    if (observed) g.nodes.push_back({node_id('y', i), GraphNode::Kind::Output, node_id('y', i)});
  }
  g.nodes.push_back({"env", GraphNode::Kind::Environment, "environment"});

  for (std::size_t j = 0; j < spec.n; ++j) {
    for (std::size_t i = 0; i < spec.n; ++i) {
      if (i != j && !spec.A[i][j].is_zero()) {
        g.edges.push_back(
            {node_id('x', j), node_id('x', i), GraphEdge::Kind::Flow, spec.A[i][j].to_string()});
      }
    }
    if (j < spec.outflow.size() && !spec.outflow[j].is_zero()) {
      g.edges.push_back({node_id('x', j), "env", GraphEdge::Kind::Outflow,
                         spec.outflow[j].to_string()});
    }
  }
  for (std::size_t i = 0; i < spec.k; ++i) {
    for (std::size_t j = 0; j < spec.n; ++j) {
      if (!spec.C[i][j].is_zero()) {
        g.edges.push_back({node_id('x', j), node_id('y', i), GraphEdge::Kind::Observation,
                           spec.C[i][j].to_string()});
      }
    }
  }
  return g;
}

std::string to_dot(const CompartmentGraph& g) {
  std::ostringstream out;
  out << "digraph structure {\n";
  out << "  rankdir=" << g.layout_hint << ";\n";
  for (const GraphNode& n : g.nodes) {
    out << "  " << n.id << " [label=" << dot_quote(n.label);
    switch (n.kind) {
      case GraphNode::Kind::Compartment:
        out << ", shape=circle";
        break;
      case GraphNode::Kind::Output:
        out << ", shape=box";
        break;
      case GraphNode::Kind::Environment:
        out << ", shape=plaintext";
        break;
    }
    out << "];\n";
  }
  for (const GraphEdge& e : g.edges) {
    out << "  " << e.from << " -> " << e.to << " [label=" << dot_quote(e.label);
    if (e.kind == GraphEdge::Kind::Outflow) out << ", style=dashed";
    if (e.kind == GraphEdge::Kind::Observation) out << ", style=dotted";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json to_json(const CompartmentGraph& g) {
  Json nodes = Json::array();
  for (const GraphNode& n : g.nodes) {
    nodes.push_back({{"id", n.id}, {"kind", node_kind(n.kind)}, {"label", n.label}});
  }
  Json edges = Json::array();
  for (const GraphEdge& e : g.edges) {
    edges.push_back(
        {{"from", e.from}, {"to", e.to}, {"kind", edge_kind(e.kind)}, {"label", e.label}});
  }
  return {{"layout_hint", g.layout_hint}, {"nodes", nodes}, {"edges", edges}};
}

std::string relation_text(const Poly& p, std::span<const Symbol> unknowns) {
  if (p.is_zero()) return "0 = 0";
  auto has_unknown = [&](const Monomial& m) {
    return std::any_of(unknowns.begin(), unknowns.end(), [&](const Symbol& u) {
      return Poly(m, Rational(1)).contains(u);
    });
  };
  bool mixed_kinds = false;
  bool any_known_only = false;
  for (const auto& [m, c] : p.terms()) {
    if (has_unknown(m)) mixed_kinds = true;
    else any_known_only = true;
  }
  mixed_kinds = mixed_kinds && any_known_only;
  Poly lhs;
  Poly rhs;
  for (const auto& [m, c] : p.terms()) {
    const bool left = mixed_kinds ? has_unknown(m) : c > 0;
    if (left) {
      lhs += Poly(m, c);
    } else {
      rhs -= Poly(m, c);
    }
  }
  if (lhs.is_zero()) std::swap(lhs, rhs);
  if (lhs.leading_coefficient() < 0) {
    lhs = -lhs;
    rhs = -rhs;
  }
  return lhs.to_string(unknowns) + " = " + rhs.to_string(unknowns);
}

Json to_json(const SolutionSet& sol) {
  Json status = Json::object();
  for (std::size_t i = 0; i < sol.unknowns.size() && i < sol.generic_status.size(); ++i) {
    status[sol.unknowns[i].name()] = to_string(sol.generic_status[i]);
  }
  Json outcomes = Json::array();
  for (const SeedOutcome& o : sol.seed_outcomes) {
    outcomes.push_back(
        {{"seed", o.seed}, {"dimension", o.dimension}, {"count", optional_count(o.count)}});
  }
  Json out = {
      {"unknowns", names(sol.unknowns)},
      {"knowns", names(sol.knowns)},
      {"generic",
       {{"dimension", sol.generic_dimension},
        {"count", optional_count(sol.generic_count)},
        {"free_unknowns", names(sol.free_unknowns)},
        {"status", status},
        {"seeds", sol.seeds_used},
        {"seed_outcomes", outcomes}}},
  };
  if (!sol.symbolic) {
    out["symbolic"] = nullptr;
    return out;
  }
  const SymbolicSolution& sym = *sol.symbolic;
  Json basis = Json::array();
  if (sym.basis) {
    for (const Poly& g : sym.basis->polys) basis.push_back(g.to_string(sol.unknowns));
  }
  Json branches = Json::array();
  for (const SolutionBranch& b : sym.branches) branches.push_back(branch_json(b));
  Json relations = Json::array();
  for (const Poly& r : sym.relation_certificates) {
    relations.push_back(
        {{"polynomial", r.to_string(sol.unknowns)}, {"text", relation_text(r, sol.unknowns)}});
  }
  out["symbolic"] = {{"state", to_string(sym.state)}, {"note", sym.note},
                     {"basis", basis},                {"branches", branches},
                     {"relations", relations}};
  return out;
}

Json to_json(const Classification& c) {
  Json params = Json::array();
  for (const ParameterClassification& p : c.parameters) {
    params.push_back({{"theta", p.theta.name()},
                      {"theta_prime", p.theta_prime.name()},
                      {"status", to_string(p.status)}});
  }
  Json out = {
      {"verdict", to_string(c.verdict)},
      {"reason", c.reason},
      {"dimension", c.dimension ? Json(*c.dimension) : Json(nullptr)},
      {"count", optional_count(c.count)},
      {"free_unknowns", names(c.free_unknowns)},
      {"status_source", c.status_source},
      {"parameters", params},
  };
  if (c.positivity_note) {
    out["positivity"] = {{"note", *c.positivity_note},
                         {"nonnegative_branches", c.nonnegative_branches}};
  } else {
    out["positivity"] = nullptr;
  }
  return out;
}

Json parameters_panel(const ParameterRenaming& renaming) {
  Json pairs = Json::array();
  for (std::size_t i = 0; i < renaming.theta.size(); ++i) {
    pairs.push_back({{"theta", renaming.theta[i].name()},
                     {"theta_prime", renaming.theta_prime[i].name()}});
  }
  return {{"naming", to_string(renaming.mode)}, {"pairs", pairs}};
}

Json diagram_panel(const CompartmentGraph& graph) {
  return {{"graph", to_json(graph)}, {"dot", to_dot(graph)}};
}

Json render_report(const StructureSpec& spec, const ParameterRenaming& renaming,
                   const SolutionSet* solution, const Classification& classification,
                   const std::string& layout_hint) {
  return {
      {"parameters", parameters_panel(renaming)},
      {"solution", solution ? to_json(*solution) : Json(nullptr)},
      {"diagram", diagram_panel(build_graph(spec, layout_hint))},
      {"classification", to_json(classification)},
  };
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  const Json& params = report["parameters"];
  if (available(params, "pairs")) {
    out << "parameters (" << params["naming"].get<std::string>() << " naming)\n";
    std::size_t width = 5;
    for (const Json& p : params["pairs"]) {
      width = std::max(width, p["theta"].get<std::string>().size());
    }
    for (const Json& p : params["pairs"]) {
      const auto theta = p["theta"].get<std::string>();
      out << "  " << theta << std::string(width - theta.size() + 2, ' ')
          << p["theta_prime"].get<std::string>() << "\n";
    }
  } else {
    out << "parameters\n  not available\n";
  }

  out << "\nsolution set\n";
  const Json& sol = report["solution"];
  if (!available(sol, "generic")) {
    out << "  not available\n";
  } else {
    const Json& gen = sol["generic"];
    out << "  generic dimension: " << gen["dimension"].get<std::uint32_t>();
    if (!gen["count"].is_null()) out << ", solutions: " << gen["count"].get<std::uint64_t>();
    out << " (seeds";
    for (const Json& s : gen["seeds"]) out << " " << s.get<std::uint64_t>();
    out << ")\n";
    if (!gen["free_unknowns"].empty()) {
      out << "  free:";
      for (const Json& f : gen["free_unknowns"]) out << " " << f.get<std::string>();
      out << "\n";
    }
    const Json& sym = sol["symbolic"];
    if (sym.is_null()) {
      out << "  symbolic: not attempted\n";
    } else {
      out << "  symbolic: " << sym["state"].get<std::string>();
      if (!sym["note"].get<std::string>().empty()) out << " (" << sym["note"].get<std::string>() << ")";
      out << "\n";
      std::size_t index = 0;
      for (const Json& b : sym["branches"]) {
        out << "  branch " << ++index << "\n";
        for (const auto& [unknown, value] : b.items()) {
          if (value.is_null()) {
            out << "    " << unknown << " free\n";
          } else {
            out << "    " << unknown << " = " << value.get<std::string>() << "\n";
          }
        }
      }
      if (!sym["relations"].empty()) {
        out << "  relations\n";
        for (const Json& r : sym["relations"]) out << "    " << r["text"].get<std::string>() << "\n";
      }
    }
  }

  out << "\ndiagram\n";
  if (available(report["diagram"], "graph")) {
    for (const Json& e : report["diagram"]["graph"]["edges"]) {
      out << "  " << e["from"].get<std::string>() << " -> " << e["to"].get<std::string>()
          << "  " << e["kind"].get<std::string>() << " " << e["label"].get<std::string>()
          << "\n";
    }
  } else {
    out << "  not available\n";
  }

  const Json& c = report["classification"];
  out << "\nclassification\n";
  if (!c["reason"].get<std::string>().empty()) {
    out << "  reason: " << c["reason"].get<std::string>() << "\n";
  }
  for (const Json& p : c["parameters"]) {
    out << "  " << p["theta"].get<std::string>() << ": " << p["status"].get<std::string>() << "\n";
  }
  if (!c["positivity"].is_null()) {
    out << "  positivity: " << c["positivity"]["note"].get<std::string>() << "\n";
  }
  out << "verdict: " << c["verdict"].get<std::string>() << "\n";
  return out.str();
}

}  // namespace sgi
