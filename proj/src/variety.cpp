#include "sgi/variety.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "sgi/errors.hpp"
#include "sgi/poly_gcd.hpp"

namespace sgi {
namespace {

std::vector<std::size_t> positions(const GroebnerBasis& basis, std::span<const Symbol> unknowns) {
  if (unknowns.size() != basis.variables.size()) {
    throw InvalidInput("unknowns must be exactly the basis variables");
  }
  std::vector<std::size_t> pos;
  for (const Symbol& u : unknowns) {
    auto it = std::find(basis.variables.begin(), basis.variables.end(), u);
    if (it == basis.variables.end()) {
      throw InvalidInput("'" + u.name() + "' is not a basis variable");
    }
    pos.push_back(static_cast<std::size_t>(it - basis.variables.begin()));
  }
  return pos;
}

}  // namespace

DimensionReport variety_dimension(const GroebnerBasis& basis, std::span<const Symbol> unknowns) {
  if (basis.is_unit()) throw NoSolution("inconsistent system: Groebner basis is {1}");
  const auto pos = positions(basis, unknowns);
  const std::size_t n = basis.variables.size();
  if (n > 24) throw InvalidInput("too many unknowns for dimension computation");

  std::vector<std::uint32_t> supports;
  for (const auto& e : basis.leading_exponents) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] != 0) mask |= 1U << i;
    }
    supports.push_back(mask);
  }

  // Largest independent set; ties prefer lower-ranked variables (higher bits).
  std::uint32_t best = 0;
  int best_size = -1;
  const std::uint32_t limit = n == 0 ? 1U : (1U << n);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int size = std::popcount(mask);
    if (size < best_size) continue;
    const bool independent = std::none_of(supports.begin(), supports.end(),
                                          [&](std::uint32_t s) { return (s & ~mask) == 0; });
    if (independent && (size > best_size || mask > best)) {
      best = mask;
      best_size = size;
    }
  }

  DimensionReport report;
  report.dimension = static_cast<std::uint32_t>(best_size);
  if (report.dimension > 0) {
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
      if (best & (1U << pos[k])) report.free_unknowns.push_back(unknowns[k]);
    }
    return report;
  }

  // Zero-dimensional: count standard monomials inside the box cut out by
  // the pure-power leading monomials.
  std::vector<std::uint32_t> bound(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < supports.size(); ++b) {
      if (supports[b] == (1U << i)) {
        const auto e = basis.leading_exponents[b][i];
        bound[i] = bound[i] == 0 ? e : std::min(bound[i], e);
      }
    }
  }
  long double box = 1;
  for (auto b : bound) box *= b;
  if (box > 5e7L) throw InvalidInput("quotient ring too large to enumerate");

  std::uint64_t count = 0;
  std::vector<std::uint32_t> e(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      for (const auto& lm : basis.leading_exponents) {
        bool divisible = true;
        for (std::size_t k = 0; k < n && divisible; ++k) divisible = lm[k] <= e[k];
        if (divisible) return;
      }
      ++count;
      return;
    }
    for (e[i] = 0; e[i] < bound[i]; ++e[i]) walk(i + 1);
    e[i] = 0;
  };
  walk(0);
  report.count = count;
  return report;
}

const std::optional<RatFunc>* SolutionBranch::find(const Symbol& unknown) const {
  for (const auto& [sym, value] : assignments) {
    if (sym == unknown) return &value;
  }
  return nullptr;
}

TriangularSolution solve_triangular(const GroebnerBasis& basis,
                                    std::span<const Symbol> unknowns) {
  if (basis.is_unit()) throw NoSolution("inconsistent system: Groebner basis is {1}");
  if (basis.order != MonomialOrder::Lex) throw InvalidInput("solve_triangular needs a lex basis");
  positions(basis, unknowns);
  const auto& vars = basis.variables;
  const std::size_t n = vars.size();

  // Group basis elements by leading (highest present) variable.
  std::vector<std::vector<std::size_t>> by_var(n);
  for (std::size_t b = 0; b < basis.polys.size(); ++b) {
    const auto& e = basis.leading_exponents[b];
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] != 0) {
        by_var[i].push_back(b);
        break;
      }
    }
  }

  TriangularSolution out;
  auto fail = [&](std::string why) {
    out.extractable = false;
    out.obstruction = std::move(why);
    out.branches.clear();
    return out;
  };

  using Partial = std::map<Symbol, RatFunc>;
  std::vector<Partial> partials(1);
  std::vector<std::vector<bool>> free_flags(1, std::vector<bool>(n, false));

  for (std::size_t v = n; v-- > 0;) {
    const Symbol& x = vars[v];
    if (by_var[v].empty()) {
      for (std::size_t p = 0; p < partials.size(); ++p) {
        partials[p].insert_or_assign(x, RatFunc{Poly{x}});
        free_flags[p][v] = true;
      }
      continue;
    }
    auto chosen = *std::min_element(by_var[v].begin(), by_var[v].end(), [&](auto a, auto b) {
      return basis.polys[a].degree(x) < basis.polys[b].degree(x);
    });
    const Poly& element = basis.polys[chosen];
    const auto degree = element.degree(x);
    if (degree > 2) {
      return fail("unknown " + x.name() + " has degree " + std::to_string(degree));
    }

    std::vector<Partial> next;
    std::vector<std::vector<bool>> next_flags;
    for (std::size_t p = 0; p < partials.size(); ++p) {
      const auto coeffs = element.coefficients(x);
      std::vector<RatFunc> c;
      for (const Poly& k : coeffs) c.push_back(substitute(k, partials[p]));
      std::vector<RatFunc> roots;
      if (degree == 1) {
        if (c[1].is_zero()) return fail("leading coefficient of " + x.name() + " vanishes");
        roots.push_back((-c[0] / c[1]).normalized());
      } else {
        if (c[2].is_zero()) return fail("leading coefficient of " + x.name() + " vanishes");
        const RatFunc disc = (c[1] * c[1] - RatFunc{Poly{4}} * c[2] * c[0]).normalized();
        const auto root = poly_sqrt(disc.num() * disc.den());
        if (!root) return fail("discriminant for " + x.name() + " is not a perfect square");
        const RatFunc r{*root, disc.den()};
        const RatFunc two_a = RatFunc{Poly{2}} * c[2];
        roots.push_back(((-c[1] + r) / two_a).normalized());
        if (!r.is_zero()) roots.push_back(((-c[1] - r) / two_a).normalized());
      }
      for (RatFunc& root : roots) {
        Partial extended = partials[p];
        extended.insert_or_assign(x, std::move(root));
        // Other elements led by x must vanish on the branch.
        for (auto other : by_var[v]) {
          if (other == chosen) continue;
          if (!substitute(basis.polys[other], extended).is_zero()) {
            return fail("several basis elements constrain " + x.name());
          }
        }
        next.push_back(std::move(extended));
        next_flags.push_back(free_flags[p]);
      }
    }
    partials = std::move(next);
    free_flags = std::move(next_flags);
  }

  for (std::size_t p = 0; p < partials.size(); ++p) {
    for (const Poly& g : basis.polys) {
      if (!substitute(g, partials[p]).is_zero()) {
        return fail("back-substitution does not satisfy the basis");
      }
    }
    SolutionBranch branch;
    for (const Symbol& u : unknowns) {
      const auto idx = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), u) -
                                                vars.begin());
      if (free_flags[p][idx]) {
        branch.assignments.emplace_back(u, std::nullopt);
      } else {
        branch.assignments.emplace_back(u, partials[p].at(u));
      }
    }
    out.branches.push_back(std::move(branch));
  }
  out.extractable = true;
  return out;
}

}  // namespace sgi
