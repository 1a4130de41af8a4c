#pragma once

#include <cstddef>
#include <span>

#include "nilmult/abelian/abelian_group.hpp"
#include "nilmult/nilpotent/nilpotent_group.hpp"

namespace nilmult {

struct MultiplierLimits {
  CollectorLimits collector;
  /// Bound on the number of relation rows k * k^c.
  std::size_t row_cap = 2'000'000;
};

/// c-nilpotent multiplier of the abelian group Z_{n_1} + ... + Z_{n_k}
/// (n_i = 0 stands for Z).
///
/// With G = F/R, F free on x_1..x_k, the group gamma_{c+1}(F) / [R, _c F] is
/// free abelian on the weight c+1 Hall basis modulo the brackets
/// [x_i^{n_i}, x_{j1}, ..., x_{jc}], whose top-weight parts are
/// n_i * [x_i, x_{j1}, ..., x_{jc}].
FgAbelianGroup nilpotent_multiplier_abelian(std::span<const Integer> invariants, int c,
                                            const MultiplierLimits& limits = {});
FgAbelianGroup nilpotent_multiplier_abelian(std::initializer_list<long> invariants, int c,
                                            const MultiplierLimits& limits = {});
FgAbelianGroup nilpotent_multiplier(const FgAbelianGroup& g, int c,
                                    const MultiplierLimits& limits = {});

}  // namespace nilmult
