#pragma once

#include <cstddef>
#include <vector>

#include "nilmult/integer.hpp"
#include "nilmult/nilpotent/free_word.hpp"

namespace nilmult {

/// Element of Z<X1..Xn> truncated above degree c.
///
/// The substitution x_i -> 1 + X_i embeds F / gamma_{c+1}(F) into the units
/// of this ring (Magnus), so equality of series decides equality in the
/// free nilpotent group. Coefficients are grouped by degree; the word
/// X_{a1} ... X_{ad} sits at position sum_k (a_k - 1) n^{d-k} of block d.
class MagnusSeries {
 public:
  MagnusSeries(std::size_t n, int c);  // zero series

  static MagnusSeries one(std::size_t n, int c);
  /// 1 + X_g, or its inverse sum_k (-X_g)^k when `inverse` is set.
  static MagnusSeries generator(std::size_t n, int c, std::size_t g, bool inverse = false);
  static MagnusSeries of_word(std::size_t n, int c, const FreeGroupWord& w);

  std::size_t generator_count() const noexcept { return n_; }
  int degree_bound() const noexcept { return c_; }

  const std::vector<Integer>& block(int d) const { return blocks_[static_cast<std::size_t>(d)]; }
  std::vector<Integer>& block(int d) { return blocks_[static_cast<std::size_t>(d)]; }
  bool block_is_zero(int d) const;

  /// Lowest degree d >= 1 with a nonzero coefficient; c + 1 when none.
  int valuation() const;
  bool is_one() const;

  /// Multiplicative inverse of a series with constant term 1.
  MagnusSeries inverse() const;
  /// Integer power (any sign) of a series with constant term 1.
  MagnusSeries power(const Integer& k) const;

  MagnusSeries& operator+=(const MagnusSeries& o);
  MagnusSeries& operator-=(const MagnusSeries& o);
  MagnusSeries& scale(const Integer& k);

  friend MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b);
  friend bool operator==(const MagnusSeries&, const MagnusSeries&) = default;

 private:
  std::size_t n_;
  int c_;
  std::vector<std::vector<Integer>> blocks_;
};

/// u^-1 v^-1 u v in the Magnus ring.
MagnusSeries group_commutator(const MagnusSeries& u, const MagnusSeries& v);

}  // namespace nilmult
