#include "nilmult/nilpotent/multiplier.hpp"

#include <algorithm>
#include <set>

#include "nilmult/errors.hpp"
#include "nilmult/hall/counting.hpp"

namespace nilmult {

namespace {

struct RowBuilder {
  const std::vector<NilpotentElement>& gens;
  int top;
  std::set<std::vector<Integer>> rows;

  // prefix = [x_i, x_{j1}, ..., x_{jd}]; extends to full length `top`.
  void extend(const NilpotentElement& prefix, int length, const Integer& n_i) {
    if (prefix.is_identity()) return;
    if (length == top) {
      std::vector<Integer> row = prefix.weight_slice(top);
      for (Integer& x : row) x *= n_i;
      // A row and its negative generate the same lattice.
      for (const Integer& x : row)
        if (sgn(x) != 0) {
          if (sgn(x) < 0)
            for (Integer& y : row) y = -y;
          break;
        }
      rows.insert(std::move(row));
      return;
    }
    for (const NilpotentElement& x : gens) extend(commutator(prefix, x), length + 1, n_i);
  }
};

}  // namespace

FgAbelianGroup nilpotent_multiplier_abelian(std::span<const Integer> invariants, int c,
                                            const MultiplierLimits& limits) {
  if (c < 1) throw InvalidInput("c must be at least 1");
  if (invariants.empty()) throw InvalidInput("need at least one cyclic factor");
  for (const Integer& n : invariants)
    if (sgn(n) < 0) throw InvalidInput("cyclic orders must be non-negative");
  const std::size_t k = invariants.size();
  if (k == 1) return FgAbelianGroup::trivial();

  const Integer witt_count = witt(static_cast<long>(k), c + 1);
  if (witt_count > static_cast<unsigned long>(limits.collector.basis_cap))
    throw ResourceLimitError("weight " + std::to_string(c + 1) + " basis on " +
                             std::to_string(k) + " generators exceeds the cap");
  std::size_t row_count = k;
  for (int i = 0; i < c; ++i) {
    if (row_count > limits.row_cap / k)
      throw ResourceLimitError("relation count exceeds the row cap");
    row_count *= k;
  }
  if (row_count > limits.row_cap) throw ResourceLimitError("relation count exceeds the row cap");

  auto ctx = nilpotent_context(k, c + 1, limits.collector);
  std::vector<NilpotentElement> gens;
  for (std::size_t g = 1; g <= k; ++g) gens.push_back(NilpotentElement::generator(ctx, g));

  RowBuilder builder{gens, c + 1, {}};
  for (std::size_t i = 0; i < k; ++i) {
    builder.extend(gens[i], 1, invariants[i]);
  }
  IntegerMatrix relations(0, witt_count.get_ui());
  for (const auto& row : builder.rows)
    if (!std::all_of(row.begin(), row.end(), [](const Integer& x) { return sgn(x) == 0; }))
      relations.append_row(row);
  return cokernel(relations);
}

FgAbelianGroup nilpotent_multiplier_abelian(std::initializer_list<long> invariants, int c,
                                            const MultiplierLimits& limits) {
  std::vector<Integer> v;
  for (long x : invariants) v.emplace_back(x);
  return nilpotent_multiplier_abelian(v, c, limits);
}

FgAbelianGroup nilpotent_multiplier(const FgAbelianGroup& g, int c,
                                    const MultiplierLimits& limits) {
  std::vector<Integer> factors = g.cyclic_factors();
  if (factors.empty()) factors.push_back(1);
  return nilpotent_multiplier_abelian(factors, c, limits);
}

}  // namespace nilmult
