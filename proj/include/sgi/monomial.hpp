#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sgi/symbol.hpp"

namespace sgi {

/// Power product of symbols, stored sparsely and sorted by symbol name.
class Monomial {
 public:
  using Power = std::pair<Symbol, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(const Symbol& s, std::uint32_t exponent = 1);
  /// `powers` may be unsorted and contain repeats; zero exponents are dropped.
  explicit Monomial(std::vector<Power> powers);

  const std::vector<Power>& powers() const noexcept { return powers_; }
  bool is_one() const noexcept { return powers_.empty(); }
  std::uint32_t degree() const noexcept;
  std::uint32_t degree(const Symbol& s) const noexcept;
  bool contains(const Symbol& s) const noexcept { return degree(s) != 0; }

  bool divides(const Monomial& other) const noexcept;
  /// Requires divisor.divides(*this).
  Monomial divided_by(const Monomial& divisor) const;
  Monomial without(const Symbol& s) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Power> powers_;
};

/// The fixed term order used for leading terms and normalization: total
/// degree first, ties broken lexicographically with alphabetically earlier
/// symbols ranked higher.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

}  // namespace sgi
