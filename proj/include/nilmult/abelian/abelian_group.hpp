#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilmult/abelian/integer_matrix.hpp"
#include "nilmult/integer.hpp"

namespace nilmult {

/// A finitely generated abelian group Z^r + Z_{d1} + ... + Z_{dk} in
/// invariant-factor form: every d_i >= 2 and d_i divides d_{i+1}.
///
/// The representation is canonical, so structural equality is isomorphism.
class FgAbelianGroup {
 public:
  /// The trivial group.
  FgAbelianGroup() = default;

  /// Throws InvalidInput unless the factors already form a valid chain.
  FgAbelianGroup(std::size_t free_rank, std::vector<Integer> invariant_factors);

  /// Canonical form of a direct sum of cyclic groups; an order of 0 stands
  /// for Z, an order of 1 contributes nothing.
  static FgAbelianGroup from_cyclic_orders(std::span<const Integer> orders);
  static FgAbelianGroup from_cyclic_orders(std::initializer_list<long> orders);

  static FgAbelianGroup trivial() { return {}; }
  static FgAbelianGroup free(std::size_t rank) { return FgAbelianGroup(rank, {}); }
  static FgAbelianGroup cyclic(const Integer& n);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }

  /// Product of the invariant factors; nullopt when the group is infinite.
  std::optional<Integer> order() const;

  /// Cyclic summands, torsion first: each invariant factor, then one 0 per
  /// free summand.
  std::vector<Integer> cyclic_factors() const;

  /// Number of cyclic summands in the canonical decomposition.
  std::size_t generator_count() const noexcept { return free_rank_ + factors_.size(); }

  /// "0", "Z", "Z^2 + Z_2 + Z_6", ...
  std::string to_string() const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
};

/// Z^cols modulo the row lattice of `relations`.
FgAbelianGroup cokernel(const IntegerMatrix& relations);

FgAbelianGroup direct_sum(const FgAbelianGroup& g, const FgAbelianGroup& h);
FgAbelianGroup tensor(const FgAbelianGroup& g, const FgAbelianGroup& h);
FgAbelianGroup tor(const FgAbelianGroup& g, const FgAbelianGroup& h);

/// i-fold tensor power; the empty product is Z.
FgAbelianGroup tensor_power(const FgAbelianGroup& g, std::size_t i);

/// k-fold direct sum of g with itself.
FgAbelianGroup direct_power(const FgAbelianGroup& g, std::size_t k);

inline std::optional<Integer> order(const FgAbelianGroup& g) { return g.order(); }
inline bool is_trivial(const FgAbelianGroup& g) { return g.is_trivial(); }

}  // namespace nilmult
