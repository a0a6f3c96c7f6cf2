#include "sgi/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sgi {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Poly::Poly(const Rational& c) {
  if (c != 0) {
    auto it = terms_.emplace(Monomial{}, c).first;
    it->second.canonicalize();
  }
}

Poly::Poly(const Symbol& s) { terms_.emplace(Monomial{s}, Rational(1)); }

Poly::Poly(const Monomial& m, const Rational& c) {
  if (c != 0) {
    auto it = terms_.emplace(m, c).first;
    it->second.canonicalize();
  }
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

std::uint32_t Poly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::uint32_t Poly::degree(const Symbol& s) const noexcept {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(s));
  return d;
}

std::set<Symbol> Poly::symbols() const {
  std::set<Symbol> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& p : m.powers()) out.insert(p.first);
  }
  return out;
}

std::vector<Poly> Poly::coefficients(const Symbol& s) const {
  std::vector<Poly> out(degree(s) + 1);
  for (const auto& [m, c] : terms_) {
    out[m.degree(s)].add_term(m.without(s), c);
  }
  if (terms_.empty()) out.clear();
  return out;
}

Poly Poly::from_coefficients(const Symbol& s, std::span<const Poly> coeffs) {
  Poly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Monomial power{s, static_cast<std::uint32_t>(i)};
    for (const auto& [m, c] : coeffs[i].terms_) out.add_term(m * power, c);
  }
  return out;
}

Poly Poly::leading_coefficient_in(const Symbol& s) const {
  if (terms_.empty()) return {};
  const auto d = degree(s);
  Poly out;
  for (const auto& [m, c] : terms_) {
    if (m.degree(s) == d) out.add_term(m.without(s), c);
  }
  return out;
}

Poly Poly::derivative(const Symbol& s) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    const auto e = m.degree(s);
    if (e == 0) continue;
    out.add_term(m.divided_by(Monomial{s}), c * e);
  }
  return out;
}

Poly Poly::substitute(const std::map<Symbol, Poly>& values) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly term{Monomial{}, c};
    std::vector<Monomial::Power> kept;
    for (const auto& [sym, e] : m.powers()) {
      auto it = values.find(sym);
      if (it == values.end()) {
        kept.emplace_back(sym, e);
      } else {
        term *= it->second.pow(e);
      }
    }
    if (!kept.empty()) term *= Poly{Monomial{std::move(kept)}, Rational(1)};
    out += term;
  }
  return out;
}

Poly Poly::rename(const std::map<Symbol, Symbol>& renaming) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Power> powers;
    powers.reserve(m.powers().size());
    for (const auto& [sym, e] : m.powers()) {
      auto it = renaming.find(sym);
      powers.emplace_back(it == renaming.end() ? sym : it->second, e);
    }
    out.add_term(Monomial{std::move(powers)}, c);
  }
  return out;
}

Rational Poly::evaluate(const std::map<Symbol, Rational>& values) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [sym, e] : m.powers()) {
      auto it = values.find(sym);
      if (it == values.end()) {
        throw std::invalid_argument("no value for symbol '" + sym.name() + "'");
      }
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      p.canonicalize();
      t *= p;
    }
    sum += t;
  }
  return sum;
}

Poly Poly::specialize(const std::map<Symbol, Rational>& values) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    std::vector<Monomial::Power> kept;
    for (const auto& [sym, e] : m.powers()) {
      auto it = values.find(sym);
      if (it == values.end()) {
        kept.emplace_back(sym, e);
        continue;
      }
      for (std::uint32_t i = 0; i < e; ++i) t *= it->second;
    }
    out.add_term(Monomial{std::move(kept)}, t);
  }
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result{Rational(1)};
  Poly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

std::optional<Poly> Poly::divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Monomial& lm = b.leading_monomial();
  const Rational& lc = b.leading_coefficient();
  Poly rem = a;
  Poly quot;
  while (!rem.is_zero()) {
    const Monomial& m = rem.leading_monomial();
    if (!lm.divides(m)) return std::nullopt;
    const Poly t{m.divided_by(lm), rem.leading_coefficient() / lc};
    rem -= t * b;
    quot += t;
  }
  return quot;
}

Poly Poly::divide_exact(const Poly& a, const Poly& b) {
  auto q = divide(a, b);
  if (!q) throw std::domain_error("polynomial division is not exact");
  return *std::move(q);
}

namespace {

std::string monomial_text(const Monomial& m, std::span<const Symbol> priority) {
  std::vector<Monomial::Power> powers = m.powers();
  if (!priority.empty()) {
    auto rank = [&](const Symbol& s) {
      auto it = std::find(priority.begin(), priority.end(), s);
      return static_cast<std::size_t>(it - priority.begin());
    };
    std::stable_sort(powers.begin(), powers.end(), [&](const auto& x, const auto& y) {
      return rank(x.first) < rank(y.first);
    });
  }
  std::string out;
  for (const auto& [sym, e] : powers) {
    if (!out.empty()) out += '*';
    out += sym.name();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string to_string(const Monomial& m) { return m.is_one() ? "1" : monomial_text(m, {}); }

std::string Poly::to_string(std::span<const Symbol> priority) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<const Monomial*, const Rational*>> order;
  order.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    order.emplace_back(&it->first, &it->second);
  }
  if (!priority.empty()) {
    // Graded order; among equal degrees compare exponent vectors in priority
    // order, then fall back to the fixed order.
    auto key = [&](const Monomial& m) {
      std::vector<std::uint32_t> k;
      k.push_back(m.degree());
      for (const auto& s : priority) k.push_back(m.degree(s));
      return k;
    };
    std::stable_sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
      return key(*x.first) > key(*y.first);
    });
  }
  std::string out;
  bool first = true;
  for (const auto& [m, c] : order) {
    const bool negative = sgn(*c) < 0;
    const Rational magnitude = abs(*c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m->is_one()) {
      out += sgi::to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial_text(*m, priority);
    } else {
      out += sgi::to_string(magnitude) + '*' + monomial_text(*m, priority);
    }
  }
  return out;
}

}  // namespace sgi
