#include "nilmult/hall/counting.hpp"

#include "nilmult/errors.hpp"

namespace nilmult {
namespace {

Integer power(long base, long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return r;
}

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

void require(bool ok, const char* what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace

Integer mobius(long n) {
  require(n >= 1, "mobius: argument must be >= 1");
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

Integer witt(long n, long w) {
  require(n >= 0, "witt: generator count must be >= 0");
  require(w >= 1, "witt: weight must be >= 1");
  Integer sum = 0;
  for (long d = 1; d <= w; ++d)
    if (w % d == 0) sum += mobius(d) * power(n, w / d);
  return sum / w;
}

Integer mixed_rank(long m, long n, long c) {
  require(m >= 1 && n >= 1, "mixed_rank: m, n must be >= 1");
  require(c >= 2, "mixed_rank: c must be >= 2");
  return witt(m + n, c) - witt(m, c) - witt(n, c);
}

std::map<Bidegree, std::size_t> bidegree_count(long m, long n, long c, std::size_t cap) {
  require(m >= 1 && n >= 1, "bidegree_count: m, n must be >= 1");
  require(c >= 2, "bidegree_count: c must be >= 2");
  const HallBasis basis =
      generate_hall_basis(static_cast<std::size_t>(m + n), static_cast<int>(c), cap);
  std::map<Bidegree, std::size_t> counts;
  for (std::size_t k = basis.weight_begin(static_cast<int>(c)); k < basis.weight_end(static_cast<int>(c)); ++k) {
    Bidegree b;
    const auto& md = basis[k].multidegree;
    for (long g = 0; g < m + n; ++g) (g < m ? b.i : b.j) += md[static_cast<std::size_t>(g)];
    if (b.i > 0 && b.j > 0) ++counts[b];
  }
  return counts;
}

Integer necklace_count(long m, long n, long i, long j) {
  require(i >= 1 && j >= 1, "necklace_count: i, j must be >= 1");
  require(m >= 0 && n >= 0, "necklace_count: m, n must be >= 0");
  Integer sum = 0;
  for (long d = 1; d <= std::min(i, j); ++d) {
    if (i % d || j % d) continue;
    sum += mobius(d) * binomial((i + j) / d, i / d) * power(m, i / d) * power(n, j / d);
  }
  return sum / (i + j);
}

GradedPiece graded_piece(const FgAbelianGroup& g_ab, const FgAbelianGroup& h_ab, long c, long m,
                         long n, std::size_t cap) {
  require(m >= 1 && n >= 1, "graded_piece: m, n must be >= 1");
  require(c >= 2, "graded_piece: c must be >= 2");
  GradedPiece piece;
  piece.exact = g_ab == FgAbelianGroup::free(static_cast<std::size_t>(m)) &&
                h_ab == FgAbelianGroup::free(static_cast<std::size_t>(n));
  const bool matched = g_ab.generator_count() == static_cast<std::size_t>(m) &&
                       h_ab.generator_count() == static_cast<std::size_t>(n);
  piece.mode = matched ? "leaf-pattern" : "bidegree";

  std::map<Bidegree, std::pair<std::size_t, std::vector<Integer>>> by_bidegree;
  if (matched) {
    std::vector<Integer> factor = g_ab.cyclic_factors();
    const auto h_factors = h_ab.cyclic_factors();
    factor.insert(factor.end(), h_factors.begin(), h_factors.end());
    const HallBasis basis =
        generate_hall_basis(static_cast<std::size_t>(m + n), static_cast<int>(c), cap);
    for (std::size_t k = basis.weight_begin(static_cast<int>(c)); k < basis.weight_end(static_cast<int>(c)); ++k) {
      const auto& md = basis[k].multidegree;
      Bidegree b;
      Integer order = 0;  // gcd over the leaves' cyclic orders, 0 meaning Z
      for (long g = 0; g < m + n; ++g) {
        if (md[static_cast<std::size_t>(g)] == 0) continue;
        (g < m ? b.i : b.j) += md[static_cast<std::size_t>(g)];
        order = gcd(order, factor[static_cast<std::size_t>(g)]);
      }
      if (b.i == 0 || b.j == 0) continue;
      auto& slot = by_bidegree[b];
      ++slot.first;
      slot.second.push_back(order);
    }
  } else {
    for (const auto& [b, count] : bidegree_count(m, n, c, cap)) {
      const FgAbelianGroup one = tensor(tensor_power(g_ab, static_cast<std::size_t>(b.i)),
                                        tensor_power(h_ab, static_cast<std::size_t>(b.j)));
      auto& slot = by_bidegree[b];
      slot.first = count;
      for (std::size_t r = 0; r < count; ++r) {
        auto f = one.cyclic_factors();
        slot.second.insert(slot.second.end(), f.begin(), f.end());
      }
    }
  }
  std::vector<Integer> all;
  for (auto& [b, slot] : by_bidegree) {
    GradedSummand s;
    s.bidegree = b;
    s.multiplicity = slot.first;
    s.group = FgAbelianGroup::from_cyclic_orders(std::span<const Integer>(slot.second));
    all.insert(all.end(), slot.second.begin(), slot.second.end());
    piece.summands.push_back(std::move(s));
  }
  piece.group = FgAbelianGroup::from_cyclic_orders(std::span<const Integer>(all));
  return piece;
}

}  // namespace nilmult
