#pragma once

#include <cstddef>
#include <vector>

#include "nilmult/nilpotent/free_word.hpp"
#include "nilmult/simplicial/simplicial_abelian.hpp"
#include "nilmult/simplicial/simplicial_set.hpp"

namespace nilmult {

/// Order of the two factors in d_0 of Kan's loop group.
///   AsPrinted:     d_0 k = (d_1 k)(d_0 k)^-1
///   InverseFirst:  d_0 k = (d_0 k)^-1 (d_1 k)
/// Both satisfy the simplicial identities; abelianized results agree up to
/// sign conventions in d_0.
enum class KanFaceConvention { AsPrinted, InverseFirst };

/// Free simplicial group truncated at D: dimension n is free on
/// generator_count(n) letters x1.., and every structure map is given by the
/// images of the generators.
class FreeSimplicialGroupTruncation {
 public:
  using WordMap = std::vector<FreeGroupWord>;

  FreeSimplicialGroupTruncation(std::vector<std::size_t> generator_counts,
                                std::vector<std::vector<WordMap>> faces,
                                std::vector<std::vector<WordMap>> degeneracies);

  int truncation() const noexcept { return static_cast<int>(counts_.size()) - 1; }
  std::size_t generator_count(int n) const { return counts_.at(static_cast<std::size_t>(n)); }
  const WordMap& face(int n, int i) const;
  const WordMap& degeneracy(int n, int i) const;

  /// Simplicial identities on every generator, compared after free reduction.
  ValidationReport validate() const;

  /// Source simplex of each generator (index into K_{n+1}) when built by Kan's functor.
  std::vector<std::vector<std::size_t>> sources;

 private:
  std::vector<std::size_t> counts_;
  std::vector<std::vector<WordMap>> faces_;
  std::vector<std::vector<WordMap>> degeneracies_;
};

/// Image of a word under a homomorphism given on generators.
FreeGroupWord substitute(const FreeGroupWord& w, const std::vector<FreeGroupWord>& images);

/// Kan's functor on a reduced simplicial set truncated at D >= 2; the result
/// is truncated at D - 1. Throws NotReduced unless K_0 is a point.
FreeSimplicialGroupTruncation kan_loop_group(
    const TruncatedSimplicialSet& k, KanFaceConvention convention = KanFaceConvention::AsPrinted);

/// GF / gamma_2 GF: structure maps become exponent-sum matrices.
TruncatedSimplicialAbelianGroup abelianize(const FreeSimplicialGroupTruncation& f);

}  // namespace nilmult
