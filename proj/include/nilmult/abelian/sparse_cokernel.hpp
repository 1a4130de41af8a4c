#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "nilmult/abelian/abelian_group.hpp"

namespace nilmult {

/// One relation: (column, coefficient) pairs, columns distinct.
using SparseRow = std::vector<std::pair<std::size_t, std::int64_t>>;

/// Cokernel of a large, very sparse relation matrix.
///
/// Columns are eliminated through unit pivots first; only the relations
/// left without a unit entry reach a dense Smith form. Coefficient growth
/// past 64 bits falls back to exact arithmetic.
FgAbelianGroup sparse_cokernel(const std::vector<SparseRow>& relations, std::size_t cols);

}  // namespace nilmult
