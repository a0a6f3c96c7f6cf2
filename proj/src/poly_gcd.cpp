#include "sgi/poly_gcd.hpp"

#include <algorithm>
#include <map>

#include "sgi/errors.hpp"

namespace sgi {
namespace {

Poly gcd_rec(const Poly& a, const Poly& b);

// Heuristic gcd on integer polynomials: evaluate one symbol at a large
// integer, recurse, and rebuild the candidate from its symmetric xi-adic
// digits. A candidate is accepted only after exact division of both inputs,
// which together with the size of xi proves it is the gcd.

Integer max_norm(const Poly& p) {
  Integer m = 0;
  for (const auto& [mono, c] : p.terms()) {
    const Integer v = abs(c.get_num());
    if (v > m) m = v;
  }
  return m;
}

Integer integer_content(const Poly& p) {
  Integer g = 0;
  for (const auto& [mono, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// p scaled to a primitive integer polynomial with positive leading coefficient.
Poly integral_primitive(const Poly& p) {
  Integer den = 1;
  for (const auto& [mono, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Poly out = p;
  if (den != 1) out *= Rational(den);
  Integer g = integer_content(out);
  if (sgn(out.leading_coefficient()) < 0) g = -g;
  if (g != 1) out *= Rational(1) / Rational(g);
  return out;
}

Poly evaluate_at(const Poly& p, const Symbol& x, const Integer& xi) {
  std::map<Monomial, Rational, MonomialLess> terms;
  for (const auto& [mono, c] : p.terms()) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), xi.get_mpz_t(), mono.degree(x));
    terms[mono.without(x)] += c * Rational(scale);
  }
  Poly out;
  for (auto& [mono, c] : terms) {
    if (c != 0) out += Poly{mono, c};
  }
  return out;
}

/// Inverse of evaluate_at for polynomials whose coefficients are smaller
/// than xi / 2 in absolute value.
Poly interpolate(Poly h, const Symbol& x, const Integer& xi) {
  Poly out;
  const Integer half = xi / 2;
  for (std::uint32_t power = 0; !h.is_zero(); ++power) {
    Poly digit;
    for (const auto& [mono, c] : h.terms()) {
      Integer r = c.get_num() % xi;  // truncated: same sign as c
      if (r > half) r -= xi;
      if (r < -half) r += xi;
      if (r != 0) digit += Poly{mono, Rational(r)};
    }
    h -= digit;
    h *= Rational(1) / Rational(xi);
    if (!digit.is_zero()) out += digit * Poly{Monomial{x, power}, Rational(1)};
  }
  if (!out.is_zero() && sgn(out.leading_coefficient()) < 0) out = -out;
  return out;
}

bool is_integral(const Poly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

/// Exact quotient in Z[symbols], or nullopt.
std::optional<Poly> divide_integral(const Poly& a, const Poly& b) {
  auto q = Poly::divide(a, b);
  if (q && !is_integral(*q)) return std::nullopt;
  return q;
}

struct HeuristicGcd {
  Poly gcd;
  Poly cofactor_a;
  Poly cofactor_b;
};

std::optional<HeuristicGcd> heuristic_gcd(const Poly& a, const Poly& b);

std::optional<HeuristicGcd> accept(const Poly& candidate, const Poly& a, const Poly& b) {
  if (candidate.is_zero()) return std::nullopt;
  if (!is_integral(candidate)) return std::nullopt;
  auto qa = divide_integral(a, candidate);
  if (!qa) return std::nullopt;
  auto qb = divide_integral(b, candidate);
  if (!qb) return std::nullopt;
  return HeuristicGcd{candidate, std::move(*qa), std::move(*qb)};
}

std::optional<HeuristicGcd> heuristic_gcd(const Poly& a, const Poly& b) {
  if (a.is_constant() && b.is_constant()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.constant_value().get_num_mpz_t(),
            b.constant_value().get_num_mpz_t());
    if (g == 0) return std::nullopt;
    return HeuristicGcd{Poly{Rational(g)}, a * Poly{Rational(1) / Rational(g)},
                        b * Poly{Rational(1) / Rational(g)}};
  }
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  Integer g0;
  {
    const Integer ca = integer_content(a);
    const Integer cb = integer_content(b);
    mpz_gcd(g0.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  const Poly fa = a * Poly{Rational(1) / Rational(g0)};
  const Poly fb = b * Poly{Rational(1) / Rational(g0)};

  auto symbols = fa.symbols();
  for (const Symbol& s : fb.symbols()) symbols.insert(s);
  const Symbol x = *symbols.begin();

  const Integer na = max_norm(fa);
  const Integer nb = max_norm(fb);
  Integer xi = 2 * std::min(na, nb) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Poly ea = evaluate_at(fa, x, xi);
    const Poly eb = evaluate_at(fb, x, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      if (auto image = heuristic_gcd(ea, eb)) {
        Poly h = interpolate(image->gcd, x, xi);
        if (!h.is_zero()) {
          h *= Rational(1) / Rational(integer_content(h));
          if (auto r = accept(h, fa, fb)) {
            r->gcd *= Rational(g0);
            return r;
          }
        }
        const Poly ca = interpolate(image->cofactor_a, x, xi);
        if (!ca.is_zero()) {
          if (auto h2 = divide_integral(fa, ca)) {
            if (auto r = accept(*h2, fa, fb)) {
              r->gcd *= Rational(g0);
              return r;
            }
          }
        }
        const Poly cb = interpolate(image->cofactor_b, x, xi);
        if (!cb.is_zero()) {
          if (auto h2 = divide_integral(fb, cb)) {
            if (auto r = accept(*h2, fa, fb)) {
              r->gcd *= Rational(g0);
              return r;
            }
          }
        }
      }
    }
    xi = xi * 73794 / 27011 + 1;
  }
  return std::nullopt;
}

Poly content_rec(const Poly& p, const Symbol& s) {
  Poly g;
  for (const Poly& c : p.coefficients(s)) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly{1};

  if (auto h = heuristic_gcd(integral_primitive(a), integral_primitive(b))) return monic(h->gcd);

  const auto sa = a.symbols();
  const auto sb = b.symbols();
  // A symbol present in only one argument cannot occur in the gcd.
  for (const Symbol& v : sa) {
    if (!sb.contains(v)) return gcd_rec(content_rec(a, v), b);
  }
  for (const Symbol& v : sb) {
    if (!sa.contains(v)) return gcd_rec(a, content_rec(b, v));
  }

  const Symbol& v = *sa.begin();
  const Poly ca = content_rec(a, v);
  const Poly cb = content_rec(b, v);
  Poly pa = Poly::divide_exact(a, ca);
  Poly pb = Poly::divide_exact(b, cb);
  const Poly c = gcd_rec(ca, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);

  Poly g;
  for (;;) {
    Poly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree(v) == 0) {
      g = Poly{1};
      break;
    }
    pa = std::move(pb);
    pb = Poly::divide_exact(r, content_rec(r, v));
  }
  g = Poly::divide_exact(g, content_rec(g, v));
  return monic(c * g);
}

}  // namespace

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  Poly out = p;
  out *= Rational(1) / p.leading_coefficient();
  return out;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  return gcd_rec(a, b);
}

Poly content_in(const Poly& p, const Symbol& s) { return monic(content_rec(p, s)); }

Poly primitive_part_in(const Poly& p, const Symbol& s) {
  if (p.is_zero()) return p;
  return Poly::divide_exact(p, content_rec(p, s));
}

Poly pseudo_remainder(const Poly& a, const Poly& b, const Symbol& s) {
  const auto n = b.degree(s);
  const Poly lb = b.leading_coefficient_in(s);
  if (lb.is_zero()) throw InvalidInput("pseudo-remainder by zero");
  Poly r = a;
  while (!r.is_zero()) {
    const auto d = r.degree(s);
    if (d < n) break;
    const Poly t = r.leading_coefficient_in(s) * Poly{Monomial{s, d - n}, Rational(1)};
    r = lb * r - t * b;
  }
  return r;
}

std::optional<Poly> poly_sqrt(const Poly& p) {
  if (p.is_zero()) return p;
  const Monomial& lm = p.leading_monomial();
  std::vector<Monomial::Power> half;
  for (const auto& [sym, e] : lm.powers()) {
    if (e % 2 != 0) return std::nullopt;
    half.emplace_back(sym, e / 2);
  }
  const Rational& lc = p.leading_coefficient();
  if (sgn(lc) < 0) return std::nullopt;
  Integer rn;
  Integer rd;
  if (!mpz_perfect_square_p(lc.get_num_mpz_t()) || !mpz_perfect_square_p(lc.get_den_mpz_t())) {
    return std::nullopt;
  }
  mpz_sqrt(rn.get_mpz_t(), lc.get_num_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), lc.get_den_mpz_t());
  const Monomial root_lm{std::move(half)};
  const Rational root_lc = Rational(rn, rd);

  // Long division style: peel the leading term of the remainder off against
  // 2 * leading term of the root.
  Poly root{root_lm, root_lc};
  Poly rem = p - root * root;
  const Poly twice_lead{root_lm, root_lc * 2};
  while (!rem.is_zero()) {
    const Monomial& m = rem.leading_monomial();
    if (!root_lm.divides(m)) return std::nullopt;
    const Monomial q = m.divided_by(root_lm);
    if (!MonomialLess{}(q, root_lm)) return std::nullopt;
    const Poly t{q, rem.leading_coefficient() / twice_lead.leading_coefficient()};
    rem -= t * (root + root + t);
    root += t;
  }
  return root;
}

}  // namespace sgi
