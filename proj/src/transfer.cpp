#include "sgi/transfer.hpp"

#include "sgi/errors.hpp"

namespace sgi {

std::vector<Symbol> default_sort_order(const StructureSpec& spec) {
  std::vector<Symbol> order = spec.parameters;
  order.insert(order.end(), spec.constants.begin(), spec.constants.end());
  order.push_back(laplace_symbol());
  return order;
}

TransferMatrix build_transfer_matrix(const StructureSpec& spec) {
  validate_structure(spec);
  const std::size_t n = spec.n;
  const Poly s{laplace_symbol()};

  // Augmented [sI - A | x0].
  PolyMatrix m(n, std::vector<Poly>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? s : Poly{}) - spec.A[i][j];
    m[i][n] = spec.x0[i];
  }

  // Fraction-free Gauss–Jordan: after step k every pivot so far equals the
  // k-th leading principal minor, and all divisions by the previous pivot
  // are exact. At the end m = [d I | d y] with d = det(sI - A).
  Poly previous{1};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) throw std::logic_error("sI - A is singular");
    if (pivot != k) {
      // Negating the swapped row keeps the determinant's sign.
      std::swap(m[pivot], m[k]);
      for (auto& e : m[k]) e = -e;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == k) continue;
        m[i][j] = Poly::divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], previous);
      }
      m[i][k] = Poly{};
    }
    previous = m[k][k];
  }

  Poly det = previous;
  const Rational lead = det.leading_coefficient_in(laplace_symbol()).constant_value();
  TransferMatrix tm;
  tm.sort_order = default_sort_order(spec);
  for (std::size_t r = 0; r < spec.k; ++r) {
    Poly num;
    for (std::size_t j = 0; j < n; ++j) {
      if (!spec.C[r][j].is_zero()) num += spec.C[r][j] * m[j][n];
    }
    if (lead != 1) num *= Rational(1) / lead;
    Poly den = det;
    if (lead != 1) den *= Rational(1) / lead;
    tm.entries.emplace_back(std::move(num), std::move(den));
  }
  return tm;
}

TransferMatrix process_matrix(const TransferMatrix& tm, bool canonical_form,
                              std::vector<Symbol> sort_order) {
  if (tm.processed) throw InvalidInput("transfer matrix is already processed");
  TransferMatrix out;
  out.sort_order = sort_order.empty() ? tm.sort_order : std::move(sort_order);
  out.processed = true;
  out.canonical = canonical_form;
  for (const RatFunc& entry : tm.entries) {
    RatFunc r = entry.reduced();
    if (canonical_form) {
      const Poly lead = r.den().leading_coefficient_in(laplace_symbol());
      if (!lead.is_constant()) {
        throw InvalidInput("canonical form needs a numeric leading coefficient in s, found " +
                           lead.to_string());
      }
      const Rational inv = Rational(1) / lead.constant_value();
      Poly num = r.num();
      Poly den = r.den();
      num *= inv;
      den *= inv;
      r = RatFunc{std::move(num), std::move(den)};
    }
    out.entries.push_back(std::move(r));
  }
  return out;
}

std::pair<std::string, std::string> entry_text(const TransferMatrix& tm, std::size_t i) {
  const RatFunc& e = tm.entries.at(i);
  return {e.num().to_string(tm.sort_order), e.den().to_string(tm.sort_order)};
}

}  // namespace sgi
