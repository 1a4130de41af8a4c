#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilmult/abelian/abelian_group.hpp"
#include "nilmult/hall/hall_basis.hpp"

namespace nilmult {

/// (i, j): leaves among the first m generators, leaves among the last n.
struct Bidegree {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

Integer mobius(long n);

/// Number of basic commutators of weight w on n generators:
/// (1/w) * sum_{d | w} mu(d) n^{w/d}.
Integer witt(long n, long w);

/// Free rank of the mixed layer for free factors of ranks m and n:
/// witt(m+n, c) - witt(m, c) - witt(n, c).
Integer mixed_rank(long m, long n, long c);

/// Mixed basic commutators of weight c on x1..x{m+n}, counted by bidegree.
/// Bidegrees with i == 0 or j == 0 are omitted. Enumerates the Hall basis.
std::map<Bidegree, std::size_t> bidegree_count(long m, long n, long c,
                                               std::size_t cap = kDefaultBasisCap);

/// Bigraded necklace formula, an enumeration-free count for bidegree (i, j):
/// (1/(i+j)) * sum_{d | gcd(i,j)} mu(d) C((i+j)/d, i/d) m^{i/d} n^{j/d}.
Integer necklace_count(long m, long n, long i, long j);

/// One bidegree of the graded-piece decomposition.
struct GradedSummand {
  Bidegree bidegree;
  std::size_t multiplicity = 0;
  FgAbelianGroup group;  // the direct sum of all `multiplicity` copies
};

struct GradedPiece {
  FgAbelianGroup group;
  std::vector<GradedSummand> summands;
  /// True when both inputs are free of ranks m and n; the decomposition is
  /// only established in that case.
  bool exact = false;
  /// "leaf-pattern" when each leaf is tensored with the cyclic summand of
  /// its own generator (m, n match the cyclic decompositions), "bidegree"
  /// when each K-leaf contributes all of Gab and each L-leaf all of Hab.
  std::string mode;
};

/// Mixed layer [K,L,_{c-2}F]/[K,L,_{c-1}F] with the abelianizations
/// substituted for the free factors.
GradedPiece graded_piece(const FgAbelianGroup& g_ab, const FgAbelianGroup& h_ab, long c, long m,
                         long n, std::size_t cap = kDefaultBasisCap);

}  // namespace nilmult
