#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nilmult {

/// Finite group given by its full multiplication table.
///
/// Elements are 0..order-1; table[a][b] is the index of a*b. The constructor
/// checks closure, associativity, the identity and inverses and throws
/// InvalidInput on the first failure.
class FiniteGroupTable {
 public:
  FiniteGroupTable(std::vector<std::vector<std::size_t>> table, std::size_t identity,
                   std::string label = {});

  static FiniteGroupTable cyclic(std::size_t n);
  /// Symmetries of an n-gon (order 2n), labelled "Dn".
  static FiniteGroupTable dihedral(std::size_t n);
  static FiniteGroupTable symmetric3();
  static FiniteGroupTable quaternion8();
  /// Product of cyclic groups, element index in mixed radix (first factor slowest).
  static FiniteGroupTable abelian(const std::vector<std::size_t>& orders);
  static FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);
  /// Closure of a set of permutations of {0..m-1} (each a vector image list).
  static FiniteGroupTable from_permutations(const std::vector<std::vector<std::size_t>>& gens,
                                            std::string label = {});

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
  bool is_abelian() const;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_;
  std::vector<std::size_t> inverse_;
  std::string label_;
};

}  // namespace nilmult
