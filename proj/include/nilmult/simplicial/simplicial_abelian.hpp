#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nilmult/abelian/abelian_group.hpp"
#include "nilmult/abelian/integer_matrix.hpp"
#include "nilmult/simplicial/chain_complex.hpp"
#include "nilmult/simplicial/simplicial_set.hpp"

namespace nilmult {

/// Degreewise free simplicial abelian group truncated at D.
///
/// Matrices act on row vectors: face(n, i) is rank(n) x rank(n-1) and
/// x |-> x * face(n, i). Applying d_i and then d_j is face(n,i) * face(n-1,j).
class TruncatedSimplicialAbelianGroup {
 public:
  TruncatedSimplicialAbelianGroup(std::vector<std::size_t> ranks,
                                  std::vector<std::vector<IntegerMatrix>> faces,
                                  std::vector<std::vector<IntegerMatrix>> degeneracies);

  /// Z[K], the free abelian group on the simplices of K.
  static TruncatedSimplicialAbelianGroup free_on(const TruncatedSimplicialSet& k);
  /// Constant object Z^r with identity structure maps.
  static TruncatedSimplicialAbelianGroup constant(std::size_t r, int D);

  int truncation() const noexcept { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int n) const { return ranks_.at(static_cast<std::size_t>(n)); }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  const IntegerMatrix& face(int n, int i) const;
  const IntegerMatrix& degeneracy(int n, int i) const;

  ValidationReport validate() const;

  /// Same object cut down to dimensions 0..d.
  TruncatedSimplicialAbelianGroup truncate(int d) const;

  void set_face(int n, int i, IntegerMatrix m);

 private:
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<IntegerMatrix>> faces_;
  std::vector<std::vector<IntegerMatrix>> degeneracies_;
};

/// Normalized chains: basis[n] has rows spanning N_n = intersection of
/// ker d_i (i < n) inside Z^{rank n}; boundary[n] is d_n restricted to N_n,
/// written in the bases of N_n and N_{n-1}.
struct MooreComplex {
  std::vector<IntegerMatrix> basis;
  ChainComplex chains;
};

MooreComplex moore_complex(const TruncatedSimplicialAbelianGroup& a);

/// pi_n as H_n of the Moore complex, n <= D - 1.
FgAbelianGroup homotopy(const TruncatedSimplicialAbelianGroup& a, int n);

/// Degreewise tensor product; structure maps are Kronecker products.
TruncatedSimplicialAbelianGroup tensor_sab(const TruncatedSimplicialAbelianGroup& a,
                                           const TruncatedSimplicialAbelianGroup& b);

struct KunnethTerm {
  std::string label;  // e.g. "pi_1(A) (x) pi_0(B)", "Tor(pi_0(A), pi_0(B))"
  FgAbelianGroup group;
};

struct KunnethDegree {
  int degree = 0;
  FgAbelianGroup lhs;  // pi_n(A (x) B)
  FgAbelianGroup rhs;  // sum of the terms
  std::vector<KunnethTerm> terms;
  bool holds = false;
};

struct KunnethReport {
  std::vector<KunnethDegree> degrees;
  bool holds() const;
};

/// Compares pi_n(A (x) B) with
///   sum_{p+q=n} pi_p A (x) pi_q B  +  sum_{p+q=n-1} Tor(pi_p A, pi_q B)
/// for the requested degree, or for every n <= D - 2 when none is given.
/// Throws OutOfTruncationRange for a degree above D - 2.
KunnethReport kunneth_check(const TruncatedSimplicialAbelianGroup& a,
                            const TruncatedSimplicialAbelianGroup& b,
                            std::optional<int> degree = std::nullopt);

/// Dold-Kan: Gamma(C)_n = sum over surjections [n] -> [k] of C_k, k <= top.
TruncatedSimplicialAbelianGroup dold_kan(const ChainComplex& c, int D);

/// Gamma applied to a chain map f_k : C_k -> C'_k (row-vector matrices).
/// Returns the per-dimension matrices of Gamma(f).
std::vector<IntegerMatrix> dold_kan_map(const ChainComplex& source, const ChainComplex& target,
                                        const std::vector<IntegerMatrix>& f, int D);

}  // namespace nilmult
