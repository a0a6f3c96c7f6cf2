#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgi/poly.hpp"
#include "sgi/poly_text.hpp"
#include "sgi/ratfunc.hpp"
#include "sgi/structure.hpp"

namespace sgi::testing {

inline Poly P(const std::string& text) { return parse_poly(text); }
inline Symbol S(const std::string& name) { return Symbol(name); }

/// Random polynomial over `symbols`: up to `max_terms` terms, total degree
/// at most `max_degree`, small rational coefficients.
inline Poly random_poly(std::mt19937_64& rng, const std::vector<Symbol>& symbols,
                        unsigned max_degree = 3, unsigned max_terms = 5) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<unsigned> terms(0, max_terms);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  Poly out;
  const unsigned n = terms(rng);
  for (unsigned t = 0; t < n; ++t) {
    std::vector<Monomial::Power> powers;
    const unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) powers.emplace_back(symbols[pick(rng)], 1);
    out += Poly{Monomial{std::move(powers)}, Rational(coeff(rng), den(rng))};
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string structure_path(const std::string& name) {
  return std::string(SGI_DATA_DIR) + "/structures/" + name;
}

inline StructureSpec load_structure(const std::string& name) {
  return parse_structure(read_file(structure_path(name)));
}

/// Random compartmental structure with `n` compartments: each inter-compartment
/// flow and each outflow is present with probability 1/2, the diagonal
/// balances its column, outputs observe single compartments through a gain.
inline StructureSpec random_compartmental(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  StructureSpec spec;
  spec.n = n;
  spec.compartmental = true;
  spec.A.assign(n, std::vector<Poly>(n));
  spec.outflow.assign(n, Poly{});
  auto param = [&](const std::string& name) {
    Symbol s{name};
    spec.parameters.push_back(s);
    return Poly{s};
  };
  for (std::size_t j = 0; j < n; ++j) {
    if (coin(rng)) spec.outflow[j] = param("k0" + std::to_string(j + 1));
    Poly column = spec.outflow[j];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || !coin(rng)) continue;
      spec.A[i][j] = param("k" + std::to_string(i + 1) + std::to_string(j + 1));
      column += spec.A[i][j];
    }
    spec.A[j][j] = -column;
  }
  std::uniform_int_distribution<std::size_t> rows(1, n);
  std::uniform_int_distribution<std::size_t> which(0, n - 1);
  spec.k = rows(rng);
  spec.C.assign(spec.k, std::vector<Poly>(n));
  for (std::size_t r = 0; r < spec.k; ++r) {
    spec.C[r][which(rng)] = coin(rng) ? Poly{1} : param("c" + std::to_string(r + 1));
  }
  spec.x0.assign(n, Poly{});
  for (std::size_t i = 0; i < n; ++i) {
    if (coin(rng)) spec.x0[i] = param("x" + std::to_string(i + 1) + "0");
  }
  if (std::all_of(spec.x0.begin(), spec.x0.end(), [](const Poly& p) { return p.is_zero(); })) {
    spec.x0[which(rng)] = Poly{1};
  }
  std::sort(spec.parameters.begin(), spec.parameters.end());
  spec.parameters.erase(std::unique(spec.parameters.begin(), spec.parameters.end()),
                        spec.parameters.end());
  return spec;
}

/// C (sI - A)^-1 x0 at a numeric point, by plain Gaussian elimination over Q.
inline std::vector<Rational> output_transform_at(const StructureSpec& spec,
                                                 const std::map<Symbol, Rational>& at,
                                                 const Rational& s) {
  const std::size_t n = spec.n;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = (i == j ? s : Rational(0)) - spec.A[i][j].evaluate(at);
    }
    m[i][n] = spec.x0[i].evaluate(at);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> y(spec.k);
  for (std::size_t r = 0; r < spec.k; ++r) {
    for (std::size_t j = 0; j < n; ++j) y[r] += spec.C[r][j].evaluate(at) * m[j][n] / m[j][j];
  }
  return y;
}

}  // namespace sgi::testing
