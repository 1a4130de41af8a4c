#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nilmult/integer.hpp"

namespace nilmult {

/// Default cap on the total number of basic commutators generated.
inline constexpr std::size_t kDefaultBasisCap = 1'000'000;

/// Basic commutator stored inside a HallBasis.
///
/// Leaves carry a generator index (1-based); pairs carry the basis indices
/// of their left and right parts. The commutator convention is
/// [a,b] = a^-1 b^-1 a b with left-normed iteration [a,b,c] = [[a,b],c].
struct BasicCommutator {
  static constexpr std::size_t kNoChild = static_cast<std::size_t>(-1);

  std::size_t left = kNoChild;
  std::size_t right = kNoChild;
  int generator = 0;  // nonzero exactly for leaves
  int weight = 1;
  std::vector<int> multidegree;  // leaf count per generator, size n

  bool is_leaf() const noexcept { return generator != 0; }
};

/// Hall basis of the free group on n generators through a given weight.
///
/// Elements are listed in the basis order: by weight, and within a weight
/// lexicographically by (left, right). Weight 1 is x1 < ... < xn. A pair
/// [u, v] is basic when u > v and, if u = [u1, u2], also u2 <= v.
class HallBasis {
 public:
  HallBasis() = default;

  std::size_t generator_count() const noexcept { return n_; }
  int max_weight() const noexcept { return max_weight_; }
  std::size_t size() const noexcept { return elements_.size(); }

  const BasicCommutator& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<BasicCommutator>& elements() const noexcept { return elements_; }

  /// Basis indices [begin, end) of the elements of weight w.
  std::size_t weight_begin(int w) const { return offsets_.at(static_cast<std::size_t>(w - 1)); }
  std::size_t weight_end(int w) const { return offsets_.at(static_cast<std::size_t>(w)); }
  std::size_t count_of_weight(int w) const { return weight_end(w) - weight_begin(w); }

  /// Index of the pair [left, right] when it is basic.
  std::optional<std::size_t> find_pair(std::size_t left, std::size_t right) const;

  /// Nested bracket text over x1..xn, e.g. "[[x2,x1],x3]".
  std::string to_string(std::size_t i) const;

  /// Builds a basis from already ordered elements (used by the cache).
  /// Validates ordering and the Hall condition; throws InvalidInput.
  static HallBasis from_elements(std::size_t n, int max_weight,
                                 std::vector<BasicCommutator> elements);

  friend HallBasis generate_hall_basis(std::size_t n, int w, std::size_t cap);

 private:
  void index_pairs();

  std::size_t n_ = 0;
  int max_weight_ = 0;
  std::vector<BasicCommutator> elements_;
  std::vector<std::size_t> offsets_;  // offsets_[w-1] = first index of weight w
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index_;
};

/// Complete Hall basis on n >= 1 generators through weight w >= 1.
/// Throws ResourceLimitError if the basis would exceed `cap` elements.
HallBasis generate_hall_basis(std::size_t n, int w, std::size_t cap = kDefaultBasisCap);

/// Compares two basic commutators of the same basis by walking their trees
/// (weight first, then leaf index or (left, right) recursively). Returns
/// -1, 0 or 1. Independent of the stored index order.
int compare_trees(const HallBasis& basis, std::size_t a, std::size_t b);

/// Tag identifying the ordering convention; stored with cached bases.
inline constexpr const char* kHallOrderVersion = "hall-order-v1";

}  // namespace nilmult
