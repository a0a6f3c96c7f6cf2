#include "sgi/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgi {

Monomial::Monomial(const Symbol& s, std::uint32_t exponent) {
  if (exponent != 0) powers_.emplace_back(s, exponent);
}

Monomial::Monomial(std::vector<Power> powers) {
  std::sort(powers.begin(), powers.end(),
            [](const Power& a, const Power& b) { return a.first < b.first; });
  for (auto& p : powers) {
    if (p.second == 0) continue;
    if (!powers_.empty() && powers_.back().first == p.first) {
      powers_.back().second += p.second;
    } else {
      powers_.push_back(std::move(p));
    }
  }
}

std::uint32_t Monomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& p : powers_) d += p.second;
  return d;
}

std::uint32_t Monomial::degree(const Symbol& s) const noexcept {
  auto it = std::lower_bound(
      powers_.begin(), powers_.end(), s,
      [](const Power& p, const Symbol& sym) { return p.first < sym; });
  return (it != powers_.end() && it->first == s) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  auto it = other.powers_.begin();
  for (const auto& p : powers_) {
    while (it != other.powers_.end() && it->first < p.first) ++it;
    if (it == other.powers_.end() || it->first != p.first || it->second < p.second) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  Monomial out;
  auto d = divisor.powers_.begin();
  for (const auto& p : powers_) {
    std::uint32_t e = p.second;
    if (d != divisor.powers_.end() && d->first == p.first) {
      if (d->second > e) throw std::invalid_argument("monomial division is not exact");
      e -= d->second;
      ++d;
    } else if (d != divisor.powers_.end() && d->first < p.first) {
      throw std::invalid_argument("monomial division is not exact");
    }
    if (e != 0) out.powers_.emplace_back(p.first, e);
  }
  if (d != divisor.powers_.end()) throw std::invalid_argument("monomial division is not exact");
  return out;
}

Monomial Monomial::without(const Symbol& s) const {
  Monomial out;
  for (const auto& p : powers_) {
    if (p.first != s) out.powers_.push_back(p);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.powers_.reserve(a.powers_.size() + b.powers_.size());
  auto i = a.powers_.begin();
  auto j = b.powers_.begin();
  while (i != a.powers_.end() || j != b.powers_.end()) {
    if (j == b.powers_.end() || (i != a.powers_.end() && i->first < j->first)) {
      out.powers_.push_back(*i++);
    } else if (i == a.powers_.end() || j->first < i->first) {
      out.powers_.push_back(*j++);
    } else {
      out.powers_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pa.size() && j < pb.size()) {
    if (pa[i].first != pb[j].first) {
      // The alphabetically earlier symbol is present only in one monomial.
      return pb[j].first < pa[i].first;
    }
    if (pa[i].second != pb[j].second) return pa[i].second < pb[j].second;
    ++i;
    ++j;
  }
  return i == pa.size() && j < pb.size();
}

}  // namespace sgi
