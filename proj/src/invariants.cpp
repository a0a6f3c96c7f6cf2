#include "sgi/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "sgi/errors.hpp"

namespace sgi {

InvariantSet collect_invariants(const TransferMatrix& tm) {
  if (!tm.processed) throw InvalidInput("collect_invariants needs a processed transfer matrix");
  const Symbol& s = laplace_symbol();
  InvariantSet out;
  auto take = [&](const Poly& c, InvariantOrigin origin) {
    if (c.is_constant()) return;
    if (std::find(out.invariants.begin(), out.invariants.end(), c) != out.invariants.end()) return;
    out.invariants.push_back(c);
    out.origins.push_back(origin);
  };
  for (std::size_t i = 0; i < tm.entries.size(); ++i) {
    const RatFunc& e = tm.entries[i];
    const auto den = e.den().coefficients(s);
    const std::size_t den_terms = tm.canonical && !den.empty() ? den.size() - 1 : den.size();
    for (std::size_t p = 0; p < den_terms; ++p) {
      take(den[p], {i, InvariantOrigin::Part::Denominator, static_cast<std::uint32_t>(p)});
    }
    const auto num = e.num().coefficients(s);
    for (std::size_t p = 0; p < num.size(); ++p) {
      take(num[p], {i, InvariantOrigin::Part::Numerator, static_cast<std::uint32_t>(p)});
    }
  }
  return out;
}

NamingMode parse_naming_mode(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "underscore") return NamingMode::Underscore;
  if (lower == "caps") return NamingMode::Caps;
  throw InvalidInput("naming mode must be 'underscore' or 'caps', got '" + std::string(text) + "'");
}

std::string to_string(NamingMode mode) {
  return mode == NamingMode::Underscore ? "underscore" : "caps";
}

std::map<Symbol, Symbol> ParameterRenaming::forward() const {
  std::map<Symbol, Symbol> m;
  for (std::size_t i = 0; i < theta.size(); ++i) m.emplace(theta[i], theta_prime[i]);
  return m;
}

std::map<Symbol, Symbol> ParameterRenaming::backward() const {
  std::map<Symbol, Symbol> m;
  for (std::size_t i = 0; i < theta.size(); ++i) m.emplace(theta_prime[i], theta[i]);
  return m;
}

ParameterRenaming theta_prime_creation(std::span<const Symbol> theta, NamingMode mode,
                                       std::span<const Symbol> reserved) {
  ParameterRenaming r;
  r.theta.assign(theta.begin(), theta.end());
  r.mode = mode;
  std::set<Symbol> taken(theta.begin(), theta.end());
  taken.insert(reserved.begin(), reserved.end());
  taken.insert(laplace_symbol());
  for (const Symbol& t : theta) {
    std::string name = t.name();
    if (mode == NamingMode::Underscore) {
      name += '_';
    } else {
      if (!std::islower(static_cast<unsigned char>(name.front()))) {
        throw InvalidInput("caps naming needs lower-case initial letters; '" + name +
                           "' does not have one");
      }
      name.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(name.front())));
    }
    Symbol prime{name};
    if (!taken.insert(prime).second) {
      throw InvalidInput("generated name '" + name + "' collides with an existing symbol");
    }
    r.theta_prime.push_back(std::move(prime));
  }
  return r;
}

std::vector<Poly> TestEquations::nontrivial() const {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < equations.size(); ++i) {
    if (!identically_zero[i]) out.push_back(equations[i]);
  }
  return out;
}

TestEquations identifiability_eqn_list(const InvariantSet& inv, const ParameterRenaming& ren) {
  if (inv.invariants.empty()) throw EmptyInvariants();
  const auto forward = ren.forward();
  TestEquations eqs;
  eqs.unknowns = ren.theta_prime;
  eqs.knowns = ren.theta;
  for (const Poly& phi : inv.invariants) {
    Poly e = phi.rename(forward) - phi;
    eqs.identically_zero.push_back(e.is_zero());
    eqs.equations.push_back(std::move(e));
  }
  return eqs;
}

}  // namespace sgi
