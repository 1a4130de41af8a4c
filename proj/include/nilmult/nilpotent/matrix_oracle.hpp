#pragma once

#include <cstddef>

#include "nilmult/abelian/integer_matrix.hpp"
#include "nilmult/nilpotent/free_word.hpp"
#include "nilmult/nilpotent/nilpotent_group.hpp"

namespace nilmult {

/// Faithful unitriangular representation of the free class-2 group on n <= 3
/// generators: one 2x2 block per generator and one Heisenberg 3x3 block per
/// pair a < b, placed along the diagonal.
IntegerMatrix class2_matrix_image(const FreeGroupWord& word, std::size_t n);

/// Image of a normal form: the product over the Hall basis of block images.
IntegerMatrix class2_matrix_image(const NilpotentElement& element);

/// True iff the matrix image of `word` equals that of `claimed`.
bool matrix_oracle_check(const FreeGroupWord& word, const NilpotentElement& claimed);

/// Collects `word` in class 2 over n = max(1, max generator) and compares.
bool matrix_oracle_check(const FreeGroupWord& word);

}  // namespace nilmult
