#pragma once

#include <cstddef>
#include <vector>

#include "nilmult/abelian/abelian_group.hpp"
#include "nilmult/simplicial/simplicial_abelian.hpp"

namespace nilmult {

/// Per-dimension matrices of a map of truncated simplicial abelian groups.
struct SimplicialMap {
  std::vector<IntegerMatrix> components;
};

/// Whether f commutes with every face and degeneracy of a and b.
bool is_simplicial_map(const SimplicialMap& f, const TruncatedSimplicialAbelianGroup& a,
                       const TruncatedSimplicialAbelianGroup& b);

bool is_isomorphism(const SimplicialMap& f);

/// Induced map on pi_n is onto.
bool induces_surjection(const SimplicialMap& f, const TruncatedSimplicialAbelianGroup& a,
                        const TruncatedSimplicialAbelianGroup& b, int n);

/// A_0 -> A_1 -> ... -> A_m. The last transition A_{m-1} -> A_m is read as
/// repeating forever (so A_{m-1} and A_m must have the same shape), which
/// makes a finite list describe an infinite system.
struct DirectedSystem {
  std::vector<TruncatedSimplicialAbelianGroup> objects;
  std::vector<SimplicialMap> transitions;  // transitions[j] : objects[j] -> objects[j+1]

  /// Shapes agree and every transition is simplicial; throws InvalidInput.
  void check() const;
};

struct Colimit {
  TruncatedSimplicialAbelianGroup object;
  std::size_t stable_from = 0;  // every transition from this index on is an isomorphism
};

/// The system's colimit when all transitions from some index j0 <= window
/// on are isomorphisms; throws Unstabilized otherwise.
Colimit colimit_stabilized(const DirectedSystem& s, std::size_t window);

struct LimitCommutationReport {
  int degree = 0;
  std::size_t object_stable_from = 0;
  std::size_t homotopy_stable_from = 0;
  std::vector<FgAbelianGroup> sequence;  // pi_n(A_j)
  FgAbelianGroup pi_of_colimit;
  FgAbelianGroup colimit_of_pi;
  bool holds = false;
};

/// pi_n of the colimit against the colimit of the pi_n sequence. The latter
/// is pi_n(A_j) for the first j after which every induced map is onto and
/// the groups agree; an onto map between isomorphic finitely generated
/// abelian groups is an isomorphism.
LimitCommutationReport limit_commutes(const DirectedSystem& s, int n, std::size_t window);

}  // namespace nilmult
