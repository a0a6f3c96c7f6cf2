#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sgi/monomial.hpp"
#include "sgi/rational.hpp"
#include "sgi/symbol.hpp"

namespace sgi {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are keyed by monomial under MonomialLess, so the last entry is the
/// leading term. No stored coefficient is ever zero; the zero polynomial has
/// no terms.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Symbol& s);  // NOLINT(google-explicit-constructor)
  Poly(const Monomial& m, const Rational& c);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Requires is_constant().
  Rational constant_value() const;
  /// Coefficient of the monomial 1.
  Rational constant_term() const;

  /// Leading monomial and coefficient under MonomialLess; require !is_zero().
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  std::uint32_t total_degree() const noexcept;
  std::uint32_t degree(const Symbol& s) const noexcept;
  std::set<Symbol> symbols() const;
  bool contains(const Symbol& s) const noexcept { return degree(s) != 0; }

  /// Coefficients with respect to `s`; index i holds the coefficient of s^i.
  std::vector<Poly> coefficients(const Symbol& s) const;
  static Poly from_coefficients(const Symbol& s, std::span<const Poly> coeffs);
  /// Coefficient of the highest power of `s` (the whole polynomial when s is absent).
  Poly leading_coefficient_in(const Symbol& s) const;

  Poly derivative(const Symbol& s) const;
  Poly substitute(const std::map<Symbol, Poly>& values) const;
  Poly rename(const std::map<Symbol, Symbol>& renaming) const;
  /// Every symbol of the polynomial must be assigned.
  Rational evaluate(const std::map<Symbol, Rational>& values) const;
  /// Substitutes the assigned symbols and keeps the others.
  Poly specialize(const std::map<Symbol, Rational>& values) const;

  Poly pow(unsigned e) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Exact quotient a / b if b divides a, otherwise nullopt. b must be nonzero.
  static std::optional<Poly> divide(const Poly& a, const Poly& b);
  /// Like divide() but throws std::domain_error when the division is not exact.
  static Poly divide_exact(const Poly& a, const Poly& b);

  /// Human-readable text, e.g. "-k01 - k21" or "1/2*c1*x10*s^2". Terms are
  /// printed in descending MonomialLess order unless `priority` is given, in
  /// which case a graded order with the listed symbols ranked first (in list
  /// order) is used.
  std::string to_string(std::span<const Symbol> priority = {}) const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

std::string to_string(const Monomial& m);

}  // namespace sgi
