#pragma once

#include <cstddef>
#include <vector>

#include "nilmult/abelian/abelian_group.hpp"
#include "nilmult/nilpotent/free_word.hpp"

namespace nilmult {

/// <x1..xn | relators>.
struct Presentation {
  std::size_t generator_count = 0;
  std::vector<FreeGroupWord> relators;

  /// Throws InvalidInput when a relator uses a generator above n.
  void check() const;

  /// <a, b | a^2, b^3, (ab)^5>, the alternating group A5.
  static Presentation a5();
};

/// Cokernel of the relator exponent-sum matrix.
FgAbelianGroup abelianization(const Presentation& p);
bool is_perfect(const Presentation& p);

}  // namespace nilmult
