#include "sgi/structure.hpp"

#include <algorithm>
#include <charconv>
#include <json.hpp>
#include <set>

#include "sgi/errors.hpp"
#include "sgi/generic_point.hpp"
#include "sgi/poly_text.hpp"

namespace sgi {
namespace {

using nlohmann::json;

template <class F>
void for_each_entry(const StructureSpec& spec, F&& f) {
  for (const auto& row : spec.A) {
    for (const auto& p : row) f(p);
  }
  for (const auto& row : spec.C) {
    for (const auto& p : row) f(p);
  }
  for (const auto& p : spec.x0) f(p);
  for (const auto& p : spec.outflow) f(p);
}

void check_shape(const PolyMatrix& m, std::size_t rows, std::size_t cols, const char* name) {
  if (m.size() != rows) {
    throw InvalidInput(std::string(name) + " must have " + std::to_string(rows) + " rows, found " +
                       std::to_string(m.size()));
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (m[i].size() != cols) {
      throw InvalidInput(std::string(name) + " row " + std::to_string(i + 1) + " must have " +
                         std::to_string(cols) + " entries, found " + std::to_string(m[i].size()));
    }
  }
}

/// Non-negativity of a polynomial in non-negative symbols: proved when every
/// coefficient is non-negative, otherwise decided at a positive point.
bool nonnegative(const Poly& p, const GenericPoint& point) {
  const bool all_nonneg = std::all_of(p.terms().begin(), p.terms().end(),
                                      [](const auto& t) { return sgn(t.second) >= 0; });
  if (all_nonneg) return true;
  return sgn(p.evaluate(point.assignment)) >= 0;
}

}  // namespace

void validate_structure(const StructureSpec& spec) {
  if (spec.n < 1) throw InvalidInput("n must be at least 1");
  if (spec.k < 1) throw InvalidInput("k must be at least 1");
  check_shape(spec.A, spec.n, spec.n, "A");
  check_shape(spec.C, spec.k, spec.n, "C");
  if (spec.x0.size() != spec.n) throw InvalidInput("x0 must have n entries");
  if (spec.outflow.size() != spec.n) throw InvalidInput("outflow_params must have n entries");

  std::set<Symbol> declared;
  for (const auto* list : {&spec.parameters, &spec.constants}) {
    for (const Symbol& s : *list) {
      if (s == laplace_symbol()) throw InvalidInput("'s' is reserved for the Laplace variable");
      if (!declared.insert(s).second) {
        throw InvalidInput("duplicate declaration of '" + s.name() + "'");
      }
    }
  }
  for_each_entry(spec, [&](const Poly& p) {
    for (const Symbol& s : p.symbols()) {
      if (!declared.contains(s)) {
        throw InvalidInput("symbol '" + s.name() + "' is neither a parameter nor a constant");
      }
    }
  });
}

CompartmentalReport validate_compartmental(const StructureSpec& spec, std::uint64_t seed) {
  std::vector<Symbol> all = spec.parameters;
  all.insert(all.end(), spec.constants.begin(), spec.constants.end());
  const GenericPoint point = make_generic_point(all, seed);

  CompartmentalReport report;
  auto check = [&](const Poly& p, CompartmentalViolation::Kind kind, std::size_t r,
                   std::size_t c) {
    if (!nonnegative(p, point)) {
      report.passed = false;
      report.violations.push_back({kind, r + 1, c + 1, p.to_string()});
    }
  };
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = 0; j < spec.n; ++j) {
      if (i != j) check(spec.A[i][j], CompartmentalViolation::Kind::OffDiagonal, i, j);
    }
  }
  for (std::size_t j = 0; j < spec.n; ++j) {
    Poly slack = -spec.A[j][j];
    for (std::size_t i = 0; i < spec.n; ++i) {
      if (i != j) slack -= spec.A[i][j];
    }
    check(slack, CompartmentalViolation::Kind::Diagonal, j, j);
  }
  for (std::size_t i = 0; i < spec.k; ++i) {
    for (std::size_t j = 0; j < spec.n; ++j) {
      check(spec.C[i][j], CompartmentalViolation::Kind::Observation, i, j);
    }
  }
  return report;
}

EditTarget EditTarget::parse(std::string_view text) {
  auto fail = [&]() -> EditTarget {
    throw ParseError("expected C[i][j] or x0[i] with 1-based indices", std::string(text));
  };
  auto read_index = [&](std::string_view& rest, std::size_t& out) {
    if (rest.empty() || rest.front() != '[') return false;
    rest.remove_prefix(1);
    const auto close = rest.find(']');
    if (close == std::string_view::npos || close == 0) return false;
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + close, v);
    if (ec != std::errc{} || ptr != rest.data() + close || v == 0) return false;
    out = v - 1;
    rest.remove_prefix(close + 1);
    return true;
  };
  std::string_view rest = text;
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  while (!rest.empty() && rest.back() == ' ') rest.remove_suffix(1);
  EditTarget t{Kind::Observation, 0, 0};
  if (rest.starts_with("x0")) {
    t.kind = Kind::InitialCondition;
    rest.remove_prefix(2);
    if (!read_index(rest, t.row) || !rest.empty()) return fail();
  } else if (rest.starts_with("C")) {
    rest.remove_prefix(1);
    if (!read_index(rest, t.row) || !read_index(rest, t.col) || !rest.empty()) return fail();
  } else {
    return fail();
  }
  return t;
}

std::string EditTarget::to_string() const {
  if (kind == Kind::InitialCondition) return "x0[" + std::to_string(row + 1) + "]";
  return "C[" + std::to_string(row + 1) + "][" + std::to_string(col + 1) + "]";
}

DesignEdit DesignEdit::parse(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ParseError("edit must look like C[i][j]=expr or x0[i]=expr", std::string(text));
  }
  return {EditTarget::parse(text.substr(0, eq)), parse_poly(text.substr(eq + 1))};
}

StructureSpec apply_edits(const StructureSpec& spec, const std::vector<DesignEdit>& edits) {
  StructureSpec out = spec;
  for (const DesignEdit& e : edits) {
    if (e.target.kind == EditTarget::Kind::InitialCondition) {
      if (e.target.row >= out.n) {
        throw InvalidInput("edit target " + e.target.to_string() + " is out of range");
      }
      out.x0[e.target.row] = e.value;
    } else {
      if (e.target.row >= out.k || e.target.col >= out.n) {
        throw InvalidInput("edit target " + e.target.to_string() + " is out of range");
      }
      out.C[e.target.row][e.target.col] = e.value;
    }
    for (const Symbol& s : e.value.symbols()) {
      if (s == laplace_symbol()) throw InvalidInput("'s' is reserved for the Laplace variable");
      const bool known =
          std::find(out.parameters.begin(), out.parameters.end(), s) != out.parameters.end() ||
          std::find(out.constants.begin(), out.constants.end(), s) != out.constants.end();
      if (!known) out.parameters.push_back(s);
    }
  }
  std::set<Symbol> used;
  for_each_entry(out, [&](const Poly& p) {
    for (const Symbol& s : p.symbols()) used.insert(s);
  });
  std::erase_if(out.parameters, [&](const Symbol& s) { return !used.contains(s); });
  return out;
}

namespace {

std::string field_path(const std::string& name, std::size_t i) {
  return name + "[" + std::to_string(i + 1) + "]";
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError("missing field", key);
  return *it;
}

Poly read_poly(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Poly{Rational(v.get<long>())};
  if (!v.is_string()) throw ParseError("expected a polynomial string", where);
  try {
    return parse_poly(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), where);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), where);
  }
}

std::vector<Poly> read_vector(const json& v, const std::string& name) {
  if (!v.is_array()) throw ParseError("expected an array", name);
  std::vector<Poly> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_poly(v[i], field_path(name, i)));
  return out;
}

PolyMatrix read_matrix(const json& v, const std::string& name) {
  if (!v.is_array()) throw ParseError("expected an array of rows", name);
  PolyMatrix out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_vector(v[i], field_path(name, i)));
  return out;
}

std::vector<Symbol> read_symbols(const json& v, const std::string& name) {
  if (!v.is_array()) throw ParseError("expected an array of names", name);
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string() || !Symbol::is_valid_name(v[i].get<std::string>())) {
      throw ParseError("invalid symbol name", field_path(name, i));
    }
    out.emplace_back(v[i].get<std::string>());
  }
  return out;
}

std::size_t read_count(const json& v, const char* name) {
  if (!v.is_number_unsigned()) throw ParseError("expected a positive integer", name);
  return v.get<std::size_t>();
}

std::string row_text(const std::vector<Poly>& row) {
  std::string out = "[";
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j != 0) out += ", ";
    out += json(row[j].to_string()).dump();
  }
  return out + "]";
}

std::string names_text(const std::vector<Symbol>& names) {
  std::string out = "[";
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (j != 0) out += ", ";
    out += json(names[j].name()).dump();
  }
  return out + "]";
}

std::string matrix_text(const PolyMatrix& m) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += "    " + row_text(m[i]) + (i + 1 < m.size() ? ",\n" : "\n");
  }
  return out + "  ]";
}

}  // namespace

StructureSpec parse_structure(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
  if (!doc.is_object()) throw ParseError("structure file must be an object", "");

  StructureSpec spec;
  spec.n = read_count(require(doc, "n"), "n");
  spec.k = read_count(require(doc, "k"), "k");
  spec.parameters = read_symbols(require(doc, "parameters"), "parameters");
  if (doc.contains("constants")) spec.constants = read_symbols(doc["constants"], "constants");
  spec.A = read_matrix(require(doc, "A"), "A");
  spec.C = read_matrix(require(doc, "C"), "C");
  spec.x0 = read_vector(require(doc, "x0"), "x0");
  if (doc.contains("outflow_params")) {
    spec.outflow = read_vector(doc["outflow_params"], "outflow_params");
  } else {
    spec.outflow.assign(spec.n, Poly{});
  }
  if (doc.contains("compartmental")) {
    if (!doc["compartmental"].is_boolean()) throw ParseError("expected true or false", "compartmental");
    spec.compartmental = doc["compartmental"].get<bool>();
  }
  try {
    validate_structure(spec);
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), "structure");
  }
  return spec;
}

std::string serialize_structure(const StructureSpec& spec) {
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(spec.n) + ",\n";
  out += "  \"k\": " + std::to_string(spec.k) + ",\n";
  out += "  \"parameters\": " + names_text(spec.parameters) + ",\n";
  if (!spec.constants.empty()) out += "  \"constants\": " + names_text(spec.constants) + ",\n";
  out += "  \"A\": " + matrix_text(spec.A) + ",\n";
  out += "  \"C\": " + matrix_text(spec.C) + ",\n";
  out += "  \"x0\": " + row_text(spec.x0) + ",\n";
  out += "  \"outflow_params\": " + row_text(spec.outflow) + ",\n";
  out += std::string("  \"compartmental\": ") + (spec.compartmental ? "true" : "false") + "\n";
  out += "}\n";
  return out;
}

}  // namespace sgi
