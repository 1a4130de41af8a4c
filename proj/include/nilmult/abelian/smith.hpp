#pragma once

#include <cstddef>
#include <vector>

#include "nilmult/abelian/integer_matrix.hpp"

namespace nilmult {

/// Smith normal form `U * A * V = S` of an integer matrix.
///
/// `diagonal` has min(rows, cols) non-negative entries, each dividing the
/// next, with all zeros at the end. The inverses of the unimodular
/// transforms are kept as well; kernel and lattice-coordinate helpers use
/// them.
struct SmithForm {
  IntegerMatrix U;
  IntegerMatrix S;
  IntegerMatrix V;
  IntegerMatrix U_inverse;
  IntegerMatrix V_inverse;
  std::vector<Integer> diagonal;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntegerMatrix& a);

/// Diagonal of the Smith form only; skips the transform bookkeeping.
std::vector<Integer> smith_diagonal(IntegerMatrix a);

std::size_t rank(const IntegerMatrix& a);

/// Rows form a basis of { x : x * a = 0 } (a saturated sublattice).
IntegerMatrix left_kernel_basis(const IntegerMatrix& a);

/// A basis of a saturated sublattice together with the map back to
/// coordinates. Built from the U transform of a Smith form.
class SublatticeCoordinates {
 public:
  /// `u` unimodular, `u_inverse` its inverse; the sublattice is spanned by
  /// rows `first..` of `u`.
  SublatticeCoordinates(IntegerMatrix u, IntegerMatrix u_inverse, std::size_t first);

  /// The sublattice { x : x * a = 0 }.
  static SublatticeCoordinates left_kernel(const IntegerMatrix& a);

  const IntegerMatrix& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.rows(); }

  /// Coordinates of `x` in the basis; throws std::domain_error if `x` is
  /// not in the sublattice.
  std::vector<Integer> coordinates(std::span<const Integer> x) const;

  /// Row-wise coordinates of every row of `m`.
  IntegerMatrix coordinates(const IntegerMatrix& m) const;

 private:
  IntegerMatrix basis_;
  IntegerMatrix u_inverse_;
  std::size_t first_;
};

}  // namespace nilmult
