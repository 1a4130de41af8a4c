#pragma once

#include <cstddef>
#include <vector>

#include "nilmult/abelian/abelian_group.hpp"
#include "nilmult/abelian/integer_matrix.hpp"

namespace nilmult {

/// Chain complex of free abelian groups C_0 <- C_1 <- ... <- C_top.
///
/// boundary[n] (n >= 1) is the rank(C_n) x rank(C_{n-1}) matrix of
/// d_n in the row-vector convention; boundary[0] is unused.
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntegerMatrix> boundary;

  int top() const noexcept { return static_cast<int>(ranks.size()) - 1; }

  /// Builds the complex from d_1..d_top; ranks are read off the matrices.
  static ChainComplex from_boundaries(std::size_t rank0, std::vector<IntegerMatrix> ds);

  /// Shapes agree and d_{n-1} d_n = 0 throughout.
  bool is_valid() const;
};

/// H_n of the complex for 0 <= n <= top. At n = top nothing is divided out.
FgAbelianGroup homology(const ChainComplex& c, int n);

}  // namespace nilmult
