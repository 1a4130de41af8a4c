#pragma once

#include <cstddef>

#include "nilmult/abelian/abelian_group.hpp"
#include "nilmult/engine/finite_group.hpp"

namespace nilmult {

inline constexpr std::size_t kDefaultBarOrderCap = 24;

/// H_1(G, Z) from the normalized bar complex: Z[G] / (image of d_2).
FgAbelianGroup bar_h1(const FiniteGroupTable& g, std::size_t order_cap = kDefaultBarOrderCap);

/// H_2(G, Z) from the normalized bar complex
///   Z[G'^3] -> Z[G'^2] -> Z[G'],  G' = G minus the identity,
///   d[g|h] = [h] - [gh] + [g],  d[g|h|k] = [h|k] - [gh|k] + [g|hk] - [g|h].
/// Throws ResourceLimitError when |G| exceeds the cap.
FgAbelianGroup bar_h2(const FiniteGroupTable& g, std::size_t order_cap = kDefaultBarOrderCap);

}  // namespace nilmult
