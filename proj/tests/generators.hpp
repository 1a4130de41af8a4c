#pragma once

// Random inputs shared by the unit tests and the acceptance suite.

#include <random>

#include "nilmult/abelian/smith.hpp"
#include "nilmult/nilpotent/free_word.hpp"
#include "nilmult/simplicial/chain_complex.hpp"
#include "oracles.hpp"

namespace gen {

/// Chain complex C_0 <- C_1 <- C_2 of total rank 1..3, entries in [-3, 3].
inline nilmult::ChainComplex small_complex(std::mt19937& rng) {
  using nilmult::IntegerMatrix;
  std::size_t r[3];
  do {
    for (auto& x : r) x = rng() % 4;
  } while (r[0] + r[1] + r[2] > 3 || r[0] + r[1] + r[2] == 0);
  IntegerMatrix d1 = oracle::random_matrix(rng, r[1], r[0], 3);
  IntegerMatrix kernel = nilmult::left_kernel_basis(d1);
  IntegerMatrix d2 = oracle::random_matrix(rng, r[2], kernel.rows(), 3) * kernel;
  if (kernel.rows() == 0) d2 = IntegerMatrix(r[2], r[1]);
  return nilmult::ChainComplex::from_boundaries(r[0], {d1, d2});
}

/// Word of `letters` letters on x1..xn with nonzero exponents in [-max_exp, max_exp].
inline nilmult::FreeGroupWord free_word(std::mt19937& rng, std::size_t n, int letters, int max_exp = 2) {
  std::uniform_int_distribution<std::size_t> g(1, n);
  std::uniform_int_distribution<int> ex(-max_exp, max_exp);
  std::vector<nilmult::Letter> out;
  for (int i = 0; i < letters; ++i) {
    int e = 0;
    while (e == 0) e = ex(rng);
    out.push_back({g(rng), e});
  }
  return nilmult::FreeGroupWord(out);
}

}  // namespace gen
