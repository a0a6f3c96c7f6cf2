#include "sgi/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sgi/errors.hpp"
#include "sgi/poly_gcd.hpp"

namespace sgi {
namespace {

using Exp = std::vector<std::uint32_t>;

std::uint32_t total(const Exp& e) {
  std::uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool coprime(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

Exp lcm(const Exp& a, const Exp& b) {
  Exp out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exp quotient(const Exp& a, const Exp& b) {
  Exp out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Exp product(const Exp& a, const Exp& b) {
  Exp out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

/// Three-way comparison under the chosen order; index 0 is the highest variable.
struct Order {
  MonomialOrder kind;

  int compare(const Exp& a, const Exp& b) const {
    if (kind == MonomialOrder::GrevLex) {
      std::uint32_t da = 0;
      std::uint32_t db = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      }
      return 0;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }
};

template <class C>
struct Term {
  Exp e;
  C c;
};

/// Terms in strictly descending order.
template <class C>
using DPoly = std::vector<Term<C>>;

/// Coefficients in Q: reductions divide, canonical form is monic.
struct RationalField {
  using C = Rational;
  static bool is_zero(const C& c) { return c == 0; }
  static bool is_one(const C& c) { return c == 1; }
  static C one() { return C(1); }
  static C mul(const C& a, const C& b) { return a * b; }
  static C neg(const C& a) { return -a; }
  static C add(const C& a, const C& b) { return a + b; }
  /// Factors (a, b) with a*f_coeff - b*g_lead == 0.
  static std::pair<C, C> cancel(const C& f_coeff, const C& g_lead) {
    return {C(1), f_coeff / g_lead};
  }
  static void canonicalize(DPoly<C>& p) {
    if (p.empty() || p.front().c == 1) return;
    const C inv = C(1) / p.front().c;
    for (auto& t : p) t.c *= inv;
  }
};

/// Coefficients in Q[parameters] standing for Q(parameters): reductions
/// are fraction-free and canonical form strips the content.
struct ParameterRing {
  using C = Poly;
  static bool is_zero(const C& c) { return c.is_zero(); }
  static bool is_one(const C& c) { return c.is_constant() && c.constant_value() == 1; }
  static C one() { return C(1); }
  static C mul(const C& a, const C& b) {
    if (is_one(a)) return b;
    if (is_one(b)) return a;
    return a * b;
  }
  static C neg(const C& a) { return -a; }
  static C add(const C& a, const C& b) { return a + b; }
  static std::pair<C, C> cancel(const C& f_coeff, const C& g_lead) {
    if (g_lead.is_constant()) {
      return {C(1), f_coeff * Poly{Rational(Rational(1) / g_lead.constant_value())}};
    }
    const C g = poly_gcd(f_coeff, g_lead);
    if (g.is_constant()) return {g_lead, f_coeff};
    return {Poly::divide_exact(g_lead, g), Poly::divide_exact(f_coeff, g)};
  }
  static void canonicalize(DPoly<C>& p) {
    if (p.empty()) return;
    C content;
    for (const auto& t : p) {
      content = content.is_zero() ? monic(t.c) : poly_gcd(content, t.c);
      if (content.is_constant()) break;
    }
    if (!content.is_constant()) {
      for (auto& t : p) t.c = Poly::divide_exact(t.c, content);
    }
    // Fix the remaining unit so that the leading coefficient is monic.
    const Rational scale = Rational(1) / p.front().c.leading_coefficient();
    if (scale != 1) {
      for (auto& t : p) t.c *= scale;
    }
  }
};

template <class D>
class Engine {
 public:
  using C = typename D::C;
  using P = DPoly<C>;

  Engine(Order order, const Deadline& deadline) : order_(order), deadline_(deadline) {}

  /// a*f - b*x^m*g where the leading terms cancel; f and g are nonempty.
  P combine(const P& f, std::size_t f_start, const C& a, const C& b, const Exp& m,
            const P& g) const {
    P out;
    out.reserve(f.size() - f_start + g.size());
    std::size_t i = f_start + 1;
    std::size_t j = 1;
    Exp shifted;
    while (i < f.size() || j < g.size()) {
      if (j < g.size()) shifted = product(g[j].e, m);
      int cmp;
      if (i >= f.size()) {
        cmp = -1;
      } else if (j >= g.size()) {
        cmp = 1;
      } else {
        cmp = order_.compare(f[i].e, shifted);
      }
      if (cmp > 0) {
        out.push_back({f[i].e, D::mul(a, f[i].c)});
        ++i;
      } else if (cmp < 0) {
        out.push_back({std::move(shifted), D::neg(D::mul(b, g[j].c))});
        ++j;
      } else {
        C c = D::add(D::mul(a, f[i].c), D::neg(D::mul(b, g[j].c)));
        if (!D::is_zero(c)) out.push_back({f[i].e, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  /// Full reduction of f modulo the listed basis elements.
  P normal_form(P f, const std::vector<const P*>& basis) const {
    P done;
    std::size_t steps = 0;
    while (!f.empty()) {
      ++steps;
      deadline_.check("Groebner basis computation");
      const Term<C>& lead = f.front();
      const P* divisor = nullptr;
      for (const P* g : basis) {
        if (divides(g->front().e, lead.e)) {
          divisor = g;
          break;
        }
      }
      if (divisor == nullptr) {
        done.push_back(lead);
        f.erase(f.begin());
        continue;
      }
      auto [a, b] = D::cancel(lead.c, divisor->front().c);
      if (!D::is_one(a)) {
        for (auto& t : done) t.c = D::mul(a, t.c);
      }
      f = combine(f, 0, a, b, quotient(lead.e, divisor->front().e), *divisor);
    }
    D::canonicalize(done);
    return done;
  }

  std::vector<P> basis(std::vector<P> input) {
    for (auto& f : input) {
      if (f.empty()) continue;
      const auto sugar = total(f.front().e);
      // Reducing inputs first keeps the active set minimal.
      P p = normal_form(std::move(f), active_polys());
      if (p.empty()) continue;
      if (is_constant(p)) return {unit()};
      add(std::move(p), sugar);
    }
    while (!pairs_.empty()) {
      deadline_.check("Groebner basis computation");
      auto best = pairs_.begin();
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
        if (it->sugar < best->sugar ||
            (it->sugar == best->sugar && order_.compare(it->lcm, best->lcm) < 0)) {
          best = it;
        }
      }
      const Pair pr = *best;
      pairs_.erase(best);
      P h = normal_form(s_poly(pr), active_polys());
      if (h.empty()) continue;
      if (is_constant(h)) return {unit()};
      add(std::move(h), pr.sugar);
    }

    // The active set is minimal; reduce every tail against the others.
    std::vector<P> out;
    for (std::size_t idx : active_) {
      std::vector<const P*> others;
      for (std::size_t o : active_) {
        if (o != idx) others.push_back(&polys_[o].p);
      }
      out.push_back(normal_form(polys_[idx].p, others));
    }
    std::sort(out.begin(), out.end(), [&](const P& x, const P& y) {
      return order_.compare(x.front().e, y.front().e) < 0;
    });
    return out;
  }

  static bool is_constant(const P& p) { return total(p.front().e) == 0; }

 private:
  struct Entry {
    P p;
    std::uint32_t sugar;
  };
  struct Pair {
    std::size_t i;
    std::size_t j;
    Exp lcm;
    std::uint32_t sugar;
  };

  P unit() const {
    const std::size_t n = polys_.empty() ? nvars_ : polys_.front().p.front().e.size();
    return P{{Exp(n, 0), D::one()}};
  }

  std::vector<const P*> active_polys() const {
    std::vector<const P*> out;
    out.reserve(active_.size());
    for (std::size_t idx : active_) out.push_back(&polys_[idx].p);
    return out;
  }

  const Exp& lm(std::size_t idx) const { return polys_[idx].p.front().e; }

  Pair make_pair(std::size_t i, std::size_t j) const {
    Exp l = lcm(lm(i), lm(j));
    const auto li = total(l);
    const std::uint32_t si = polys_[i].sugar + li - total(lm(i));
    const std::uint32_t sj = polys_[j].sugar + li - total(lm(j));
    return {i, j, std::move(l), std::max(si, sj)};
  }

  P s_poly(const Pair& pr) const {
    const P& f = polys_[pr.i].p;
    const P& g = polys_[pr.j].p;
    auto [a, b] = D::cancel(g.front().c, f.front().c);
    // a*x^mi*f - b*x^mj*g with a = lc(f)/d-style factors swapped to match.
    const Exp mi = quotient(pr.lcm, f.front().e);
    const Exp mj = quotient(pr.lcm, g.front().e);
    P shifted_f;
    shifted_f.reserve(f.size());
    for (const auto& t : f) shifted_f.push_back({product(t.e, mi), t.c});
    // b * shifted_f - a * x^mj * g cancels the leading terms since
    // a*lc(g) == b*lc(f).
    return combine(shifted_f, 0, b, a, mj, g);
  }

  void add(P p, std::uint32_t sugar) {
    nvars_ = p.front().e.size();
    polys_.push_back({std::move(p), sugar});
    update(polys_.size() - 1);
  }

  /// Gebauer–Möller installation of a new basis element.
  void update(std::size_t h) {
    const Exp& lh = lm(h);
    std::vector<Pair> candidates;
    for (std::size_t g : active_) candidates.push_back(make_pair(h, g));

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p1 = candidates[c];
      bool keep = coprime(lh, lm(p1.j));
      if (!keep) {
        keep = true;
        for (std::size_t o = c + 1; o < candidates.size() && keep; ++o) {
          if (divides(candidates[o].lcm, p1.lcm)) keep = false;
        }
        for (const Pair& d : kept) {
          if (!keep) break;
          if (divides(d.lcm, p1.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p1);
    }

    std::vector<Pair> fresh;
    for (Pair& p : kept) {
      if (!coprime(lh, lm(p.j))) fresh.push_back(std::move(p));
    }

    std::vector<Pair> remaining;
    for (Pair& p : pairs_) {
      const bool redundant = divides(lh, p.lcm) && lcm(lm(p.i), lh) != p.lcm &&
                             lcm(lh, lm(p.j)) != p.lcm;
      if (!redundant) remaining.push_back(std::move(p));
    }
    for (Pair& p : fresh) remaining.push_back(std::move(p));
    pairs_ = std::move(remaining);

    std::vector<std::size_t> next;
    for (std::size_t g : active_) {
      if (!divides(lh, lm(g))) next.push_back(g);
    }
    next.push_back(h);
    active_ = std::move(next);
  }

  Order order_;
  const Deadline& deadline_;
  std::vector<Entry> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  std::size_t nvars_ = 0;

 public:
  void set_variable_count(std::size_t n) { nvars_ = n; }
};

/// Conversion between Poly and the dense representation.
class Layout {
 public:
  Layout(std::span<const Symbol> variables, Order order)
      : variables_(variables.begin(), variables.end()), order_(order) {
    for (std::size_t i = 0; i < variables_.size(); ++i) index_.emplace(variables_[i], i);
    if (index_.size() != variables_.size()) throw InvalidInput("duplicate Groebner variable");
  }

  bool is_variable(const Symbol& s) const { return index_.contains(s); }

  /// Splits a monomial into the variable exponent vector and the leftover
  /// parameter monomial.
  std::pair<Exp, Monomial> split(const Monomial& m) const {
    Exp e(variables_.size(), 0);
    std::vector<Monomial::Power> rest;
    for (const auto& [sym, k] : m.powers()) {
      auto it = index_.find(sym);
      if (it == index_.end()) {
        rest.emplace_back(sym, k);
      } else {
        e[it->second] = k;
      }
    }
    return {std::move(e), Monomial{std::move(rest)}};
  }

  template <class C>
  void sort(DPoly<C>& p) const {
    std::sort(p.begin(), p.end(),
              [&](const Term<C>& a, const Term<C>& b) { return order_.compare(a.e, b.e) > 0; });
  }

  DPoly<Rational> to_rational(const Poly& p) const {
    DPoly<Rational> out;
    for (const auto& [m, c] : p.terms()) {
      auto [e, rest] = split(m);
      if (!rest.is_one()) {
        throw InvalidInput("symbol '" + rest.powers().front().first.name() +
                           "' is not a Groebner variable");
      }
      out.push_back({std::move(e), c});
    }
    sort(out);
    return out;
  }

  DPoly<Poly> to_parametric(const Poly& p) const {
    std::map<Exp, Poly> grouped;
    for (const auto& [m, c] : p.terms()) {
      auto [e, rest] = split(m);
      grouped[e] += Poly{rest, c};
    }
    DPoly<Poly> out;
    for (auto& [e, c] : grouped) {
      if (!c.is_zero()) out.push_back({e, std::move(c)});
    }
    sort(out);
    return out;
  }

  Monomial monomial(const Exp& e) const {
    std::vector<Monomial::Power> powers;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) powers.emplace_back(variables_[i], e[i]);
    }
    return Monomial{std::move(powers)};
  }

  Poly to_poly(const DPoly<Rational>& p) const {
    Poly out;
    for (const auto& t : p) out += Poly{monomial(t.e), t.c};
    return out;
  }

  Poly to_poly(const DPoly<Poly>& p) const {
    Poly out;
    for (const auto& t : p) out += Poly{monomial(t.e), Rational(1)} * t.c;
    return out;
  }

 private:
  std::vector<Symbol> variables_;
  std::map<Symbol, std::size_t> index_;
  Order order_;
};

template <class D, class Convert>
GroebnerBasis run(std::span<const Poly> polys, std::span<const Symbol> variables,
                  MonomialOrder order, const Deadline& deadline,
                  std::vector<Symbol> parameters, Convert convert) {
  const Layout layout(variables, Order{order});
  std::vector<DPoly<typename D::C>> input;
  for (const Poly& p : polys) {
    if (!p.is_zero()) input.push_back(convert(layout, p));
  }
  Engine<D> engine(Order{order}, deadline);
  engine.set_variable_count(variables.size());
  GroebnerBasis out;
  out.variables.assign(variables.begin(), variables.end());
  out.parameters = std::move(parameters);
  out.order = order;
  for (const auto& g : engine.basis(std::move(input))) {
    out.leading_exponents.push_back(g.front().e);
    out.polys.push_back(layout.to_poly(g));
  }
  return out;
}

}  // namespace

bool GroebnerBasis::is_unit() const noexcept {
  return polys.size() == 1 && std::all_of(leading_exponents.front().begin(),
                                          leading_exponents.front().end(),
                                          [](std::uint32_t e) { return e == 0; });
}

GroebnerBasis groebner_basis(std::span<const Poly> polys, std::span<const Symbol> variables,
                             MonomialOrder order, const Deadline& deadline) {
  return run<RationalField>(polys, variables, order, deadline, {},
                            [](const Layout& l, const Poly& p) { return l.to_rational(p); });
}

GroebnerBasis groebner_basis(std::span<const Poly> polys, MonomialOrder order,
                             const Deadline& deadline) {
  std::set<Symbol> all;
  for (const Poly& p : polys) {
    for (const Symbol& s : p.symbols()) all.insert(s);
  }
  const std::vector<Symbol> variables(all.begin(), all.end());
  return groebner_basis(polys, variables, order, deadline);
}

GroebnerBasis groebner_basis_over_parameters(std::span<const Poly> polys,
                                             std::span<const Symbol> variables,
                                             MonomialOrder order, const Deadline& deadline) {
  std::set<Symbol> params;
  const std::set<Symbol> vars(variables.begin(), variables.end());
  for (const Poly& p : polys) {
    for (const Symbol& s : p.symbols()) {
      if (!vars.contains(s)) params.insert(s);
    }
  }
  return run<ParameterRing>(polys, variables, order, deadline,
                            std::vector<Symbol>(params.begin(), params.end()),
                            [](const Layout& l, const Poly& p) { return l.to_parametric(p); });
}

namespace {

template <class D, class Convert>
Poly reduce_with(const Poly& p, const GroebnerBasis& basis, Convert convert) {
  const Layout layout(basis.variables, Order{basis.order});
  std::vector<DPoly<typename D::C>> gs;
  gs.reserve(basis.polys.size());
  for (const Poly& g : basis.polys) gs.push_back(convert(layout, g));
  std::vector<const DPoly<typename D::C>*> ptrs;
  for (const auto& g : gs) ptrs.push_back(&g);
  const Deadline never;
  Engine<D> engine(Order{basis.order}, never);
  return layout.to_poly(engine.normal_form(convert(layout, p), ptrs));
}

}  // namespace

Poly normal_form(const Poly& p, const GroebnerBasis& basis) {
  if (p.is_zero()) return p;
  if (basis.parameters.empty()) {
    return reduce_with<RationalField>(
        p, basis, [](const Layout& l, const Poly& q) { return l.to_rational(q); });
  }
  return reduce_with<ParameterRing>(
      p, basis, [](const Layout& l, const Poly& q) { return l.to_parametric(q); });
}

bool ideal_contains(const GroebnerBasis& basis, const Poly& p) {
  return normal_form(p, basis).is_zero();
}

std::vector<std::uint32_t> leading_exponents(const Poly& p, const GroebnerBasis& basis) {
  const Layout layout(basis.variables, Order{basis.order});
  if (p.is_zero()) throw InvalidInput("zero polynomial has no leading monomial");
  return layout.to_parametric(p).front().e;
}

}  // namespace sgi
