#include "sgi/ratfunc.hpp"

#include <stdexcept>

#include "sgi/poly_gcd.hpp"

namespace sgi {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
}

RatFunc RatFunc::reduced() const {
  if (num_.is_zero()) return RatFunc{Poly{}, Poly{1}};
  const Poly g = poly_gcd(num_, den_);
  if (g.is_constant()) return *this;
  return {Poly::divide_exact(num_, g), Poly::divide_exact(den_, g)};
}

RatFunc RatFunc::normalized() const {
  RatFunc r = reduced();
  const Rational lc = r.den_.leading_coefficient();
  if (lc != 1) {
    r.num_ *= Rational(1) / lc;
    r.den_ *= Rational(1) / lc;
  }
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc{a.num_ + b.num_, a.den_}.normalized();
  return RatFunc{a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_}.normalized();
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc{a.num_ * b.num_, a.den_ * b.den_}.normalized();
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc{a.num_ * b.den_, a.den_ * b.num_}.normalized();
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc substitute(const Poly& p, const std::map<Symbol, RatFunc>& values) {
  // Collect a common denominator per term to avoid a gcd per monomial.
  RatFunc acc;
  for (const auto& [m, c] : p.terms()) {
    Poly num{Rational(c)};
    Poly den{1};
    std::vector<Monomial::Power> kept;
    for (const auto& [sym, e] : m.powers()) {
      auto it = values.find(sym);
      if (it == values.end()) {
        kept.emplace_back(sym, e);
        continue;
      }
      num *= it->second.num().pow(e);
      den *= it->second.den().pow(e);
    }
    if (!kept.empty()) num *= Poly{Monomial{std::move(kept)}, Rational(1)};
    acc = acc + RatFunc{std::move(num), std::move(den)};
  }
  return acc.normalized();
}

RatFunc RatFunc::substitute(const std::map<Symbol, RatFunc>& values) const {
  return sgi::substitute(num_, values) / sgi::substitute(den_, values);
}

Rational RatFunc::evaluate(const std::map<Symbol, Rational>& values) const {
  const Rational d = den_.evaluate(values);
  if (d == 0) throw std::domain_error("denominator vanishes at the evaluation point");
  return num_.evaluate(values) / d;
}

std::string RatFunc::to_string(std::span<const Symbol> priority) const {
  if (den_ == Poly{1}) return num_.to_string(priority);
  const std::string num = num_.to_string(priority);
  const std::string den = den_.to_string(priority);
  const bool bare_den =
      den_.size() == 1 && (den_.is_constant() || den_.leading_coefficient() == 1);
  return (num_.size() > 1 ? "(" + num + ")" : num) + "/" + (bare_den ? den : "(" + den + ")");
}

}  // namespace sgi
