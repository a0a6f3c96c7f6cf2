#include "sgi/generic_point.hpp"

#include <random>
#include <set>

namespace sgi {

GenericPoint make_generic_point(std::span<const Symbol> symbols, std::uint64_t seed,
                                bool distinct) {
  constexpr std::uint64_t kRange = 1'000'000;
  // mt19937_64 output is fixed by the standard; the reduction below keeps the
  // values identical across standard library implementations.
  std::mt19937_64 rng(seed);
  GenericPoint point;
  point.seed = seed;
  std::set<std::uint64_t> used;
  for (const Symbol& s : symbols) {
    std::uint64_t v = 0;
    do {
      v = 1 + rng() % kRange;
    } while (distinct && used.contains(v));
    used.insert(v);
    point.assignment.insert_or_assign(s, Rational(static_cast<unsigned long>(v)));
  }
  return point;
}

}  // namespace sgi
