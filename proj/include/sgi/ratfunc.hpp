#pragma once

#include <map>
#include <span>
#include <string>

#include "sgi/poly.hpp"

namespace sgi {

/// Quotient num/den of polynomials; den is never zero.
///
/// Construction does not cancel common factors. reduced() cancels them while
/// keeping the constant scaling of num and den; normalized() additionally
/// makes den's leading coefficient 1, giving a unique representative.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RatFunc reduced() const;
  RatFunc normalized() const;

  /// Symbols not assigned are kept; the result is normalized.
  RatFunc substitute(const std::map<Symbol, RatFunc>& values) const;
  /// Throws std::domain_error when the denominator vanishes.
  Rational evaluate(const std::map<Symbol, Rational>& values) const;

  RatFunc operator-() const { return {-num_, den_}; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws std::domain_error on division by zero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  /// Equality as elements of the fraction field.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  /// "num" when den is 1, otherwise "num/den" with parentheses around
  /// multi-term parts.
  std::string to_string(std::span<const Symbol> priority = {}) const;

 private:
  Poly num_;
  Poly den_;
};

/// Evaluates p with RatFunc values for some of its symbols.
RatFunc substitute(const Poly& p, const std::map<Symbol, RatFunc>& values);

}  // namespace sgi
