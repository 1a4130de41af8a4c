#include "nilmult/engine/bar_homology.hpp"

#include "nilmult/abelian/sparse_cokernel.hpp"
#include "nilmult/errors.hpp"

namespace nilmult {

namespace {

void check_cap(const FiniteGroupTable& g, std::size_t cap) {
  if (g.order() > cap)
    throw ResourceLimitError("bar complex for a group of order " + std::to_string(g.order()) +
                             " exceeds the order cap " + std::to_string(cap));
}

// Non-identity elements are renumbered 0..n-2; identity maps to npos.
struct Relabel {
  std::vector<std::size_t> index;
  std::size_t count = 0;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit Relabel(const FiniteGroupTable& g) : index(g.order(), npos) {
    for (std::size_t x = 0; x < g.order(); ++x)
      if (x != g.identity()) index[x] = count++;
  }
};

void add_term(SparseRow& row, std::size_t col, std::int64_t coeff) {
  for (auto& [c, v] : row)
    if (c == col) {
      v += coeff;
      return;
    }
  row.emplace_back(col, coeff);
}

void drop_zeros(SparseRow& row) {
  std::erase_if(row, [](const auto& e) { return e.second == 0; });
}

std::vector<SparseRow> d2_rows(const FiniteGroupTable& g, const Relabel& r) {
  std::vector<SparseRow> rows;
  const std::size_t e = g.identity();
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (a == e) continue;
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (b == e) continue;
      SparseRow row;
      add_term(row, r.index[b], 1);
      if (const std::size_t ab = g.multiply(a, b); ab != e) add_term(row, r.index[ab], -1);
      add_term(row, r.index[a], 1);
      drop_zeros(row);
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

FgAbelianGroup bar_h1(const FiniteGroupTable& g, std::size_t order_cap) {
  check_cap(g, order_cap);
  const Relabel r(g);
  return sparse_cokernel(d2_rows(g, r), r.count);
}

FgAbelianGroup bar_h2(const FiniteGroupTable& g, std::size_t order_cap) {
  check_cap(g, order_cap);
  const Relabel r(g);
  const std::size_t m = r.count;
  const std::size_t e = g.identity();
  auto pair = [&](std::size_t a, std::size_t b) { return r.index[a] * m + r.index[b]; };

  std::vector<SparseRow> rows;
  rows.reserve(m * m * m);
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (a == e) continue;
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (b == e) continue;
      const std::size_t ab = g.multiply(a, b);
      for (std::size_t c = 0; c < g.order(); ++c) {
        if (c == e) continue;
        const std::size_t bc = g.multiply(b, c);
        SparseRow row;
        add_term(row, pair(b, c), 1);
        if (ab != e) add_term(row, pair(ab, c), -1);
        if (bc != e) add_term(row, pair(a, bc), 1);
        add_term(row, pair(a, b), -1);
        drop_zeros(row);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  const FgAbelianGroup coker3 = sparse_cokernel(rows, m * m);
  // C_2 / B_2 = H_2 + (C_2 / Z_2) and C_2 / Z_2 = B_1 is free of rank rank(d_2).
  const FgAbelianGroup h1 = bar_h1(g, order_cap);
  const std::size_t rank_d2 = m - h1.free_rank();
  std::vector<Integer> orders(coker3.invariant_factors());
  for (std::size_t i = rank_d2; i < coker3.free_rank(); ++i) orders.emplace_back(0);
  return FgAbelianGroup::from_cyclic_orders(orders);
}

}  // namespace nilmult
