#include "nilmult/simplicial/chain_complex.hpp"

#include "nilmult/abelian/smith.hpp"
#include "nilmult/errors.hpp"

namespace nilmult {

ChainComplex ChainComplex::from_boundaries(std::size_t rank0, std::vector<IntegerMatrix> ds) {
  ChainComplex c;
  c.ranks.push_back(rank0);
  c.boundary.emplace_back(rank0, 0);
  for (IntegerMatrix& d : ds) {
    if (d.cols() != c.ranks.back()) throw InvalidInput("boundary matrix shapes do not chain");
    c.ranks.push_back(d.rows());
    c.boundary.push_back(std::move(d));
  }
  if (!c.is_valid()) throw InvalidInput("boundary of a boundary is not zero");
  return c;
}

bool ChainComplex::is_valid() const {
  if (boundary.size() != ranks.size()) return false;
  for (std::size_t n = 1; n < ranks.size(); ++n) {
    if (boundary[n].rows() != ranks[n] || boundary[n].cols() != ranks[n - 1]) return false;
    if (n >= 2 && !(boundary[n] * boundary[n - 1]).is_zero()) return false;
  }
  return true;
}

FgAbelianGroup homology(const ChainComplex& c, int n) {
  if (n < 0 || n > c.top()) throw OutOfTruncationRange("homology degree outside the complex");
  const auto un = static_cast<std::size_t>(n);
  const std::size_t r = c.ranks[un];
  SublatticeCoordinates cycles = n == 0
      ? SublatticeCoordinates(IntegerMatrix::identity(r), IntegerMatrix::identity(r), 0)
      : SublatticeCoordinates::left_kernel(c.boundary[un]);
  IntegerMatrix relations(0, cycles.dimension());
  if (n < c.top() && c.ranks[un + 1] > 0) relations = cycles.coordinates(c.boundary[un + 1]);
  return cokernel(relations);
}

}  // namespace nilmult
