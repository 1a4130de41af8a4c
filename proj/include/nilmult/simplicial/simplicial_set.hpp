#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nilmult {

class FiniteGroupTable;

/// One failed simplicial identity. `identity` is "dd", "ss" or "ds";
/// `dimension` is the dimension of the source; i and j index the operators
/// as they appear in d_j d_i, s_j s_i or d_j s_i.
struct SimplicialViolation {
  std::string identity;
  int dimension = 0;
  int i = 0;
  int j = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<SimplicialViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string to_string() const;
};

/// Simplicial set truncated at dimension D: sets K_0..K_D (as sizes), faces
/// d_i : K_n -> K_{n-1} for 1 <= n <= D, degeneracies s_i : K_n -> K_{n+1}
/// for n <= D - 1, all as index maps.
class TruncatedSimplicialSet {
 public:
  using Map = std::vector<std::size_t>;

  /// faces[n][i] for n = 1..D (faces[0] empty), degeneracies[n][i] for
  /// n = 0..D-1. Shapes and index ranges are checked (InvalidInput); the
  /// identities are not, see validate().
  TruncatedSimplicialSet(std::vector<std::size_t> sizes, std::vector<std::vector<Map>> faces,
                         std::vector<std::vector<Map>> degeneracies);

  int truncation() const noexcept { return static_cast<int>(sizes_.size()) - 1; }
  std::size_t size(int n) const { return sizes_.at(static_cast<std::size_t>(n)); }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  const Map& face(int n, int i) const;
  const Map& degeneracy(int n, int i) const;
  bool reduced() const { return sizes_[0] == 1; }

  ValidationReport validate() const;

  /// Overwrites one face map entry; used to build negative controls.
  void set_face_value(int n, int i, std::size_t x, std::size_t value);

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<Map>> faces_;
  std::vector<std::vector<Map>> degeneracies_;
};

/// Delta[1] / boundary: one vertex, one nondegenerate 1-simplex; |K_n| = n + 1.
TruncatedSimplicialSet simplicial_circle(int D);
/// The one-point simplicial set.
TruncatedSimplicialSet simplicial_point(int D);
/// Nerve of a finite group: K_n = G^n. Throws ResourceLimitError when
/// |G|^D exceeds `cap`.
TruncatedSimplicialSet nerve(const FiniteGroupTable& g, int D, std::size_t cap = 2'000'000);

}  // namespace nilmult
