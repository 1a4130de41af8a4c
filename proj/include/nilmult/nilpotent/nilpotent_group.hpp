#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "nilmult/abelian/integer_matrix.hpp"
#include "nilmult/hall/hall_basis.hpp"
#include "nilmult/integer.hpp"
#include "nilmult/nilpotent/free_word.hpp"
#include "nilmult/nilpotent/magnus.hpp"

namespace nilmult {

using ExponentVector = std::vector<Integer>;

struct CollectorLimits {
  std::size_t basis_cap = kDefaultBasisCap;
  /// Bound on elementary collection steps per top-level call.
  std::size_t step_cap = 50'000'000;
};

/// Power-commutator presentation of F / gamma_{c+1}(F) on the Hall basis.
///
/// Built once per (n, c) and shared; immutable afterwards. The relations
/// b_j^{b_i} and b_j^{b_i^-1} (i < j) are obtained by reading products of
/// basis elements back out of the Magnus model.
class NilpotentContext {
 public:
  NilpotentContext(std::size_t n, int c, const CollectorLimits& limits = {});

  std::size_t generator_count() const noexcept { return n_; }
  int nilpotency_class() const noexcept { return c_; }
  const HallBasis& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const CollectorLimits& limits() const noexcept { return limits_; }

  const MagnusSeries& magnus(std::size_t k) const { return images_[k]; }
  MagnusSeries magnus_of(std::span<const Integer> exponents) const;

  /// Hall exponents of a unit of the Magnus ring lying in the image of the group.
  /// Throws InvalidInput when the series is not a group element.
  ExponentVector exponents_of(MagnusSeries g) const;

  /// Normal form of b_j^{b_i} (sign > 0) or b_j^{b_i^-1} (sign < 0), i < j.
  const ExponentVector& conjugate(std::size_t j, std::size_t i, int sign) const;
  bool commutes(std::size_t j, std::size_t i) const;

  // Raw collection on exponent vectors.
  void multiply_letter(ExponentVector& e, std::size_t k, const Integer& f, std::size_t& steps) const;
  void multiply_into(ExponentVector& x, const ExponentVector& y, std::size_t& steps) const;
  ExponentVector power_of(const ExponentVector& x, Integer f, std::size_t& steps) const;
  ExponentVector inverse_of(const ExponentVector& x, std::size_t& steps) const;

 private:
  struct WeightSolver {
    std::vector<std::size_t> pivot_columns;
    IntegerMatrix adjugate;  // inverse of the pivot block is adjugate / denominator
    Integer denominator;
  };

  void build_solvers();
  void build_relations();
  MagnusSeries basis_power(std::size_t k, const Integer& e) const;
  void charge(std::size_t& steps) const;

  std::size_t n_;
  int c_;
  CollectorLimits limits_;
  HallBasis basis_;
  std::vector<MagnusSeries> images_;
  std::vector<std::vector<MagnusSeries>> image_powers_;  // (b_k - 1)^m, m <= c / w_k
  std::vector<WeightSolver> solvers_;                    // indexed by weight
  std::vector<ExponentVector> conj_plus_;
  std::vector<ExponentVector> conj_minus_;
  std::vector<char> commutes_;
};

/// Shared context from a process-wide cache.
std::shared_ptr<const NilpotentContext> nilpotent_context(std::size_t n, int c,
                                                          const CollectorLimits& limits = {});

class NilpotentElement {
 public:
  explicit NilpotentElement(std::shared_ptr<const NilpotentContext> ctx);  // identity
  NilpotentElement(std::shared_ptr<const NilpotentContext> ctx, ExponentVector exponents);

  static NilpotentElement generator(std::shared_ptr<const NilpotentContext> ctx, std::size_t g);
  static NilpotentElement basis_element(std::shared_ptr<const NilpotentContext> ctx, std::size_t k);

  const NilpotentContext& context() const noexcept { return *ctx_; }
  const std::shared_ptr<const NilpotentContext>& context_ptr() const noexcept { return ctx_; }
  const ExponentVector& exponents() const noexcept { return exponents_; }
  const Integer& exponent(std::size_t k) const { return exponents_[k]; }

  bool is_identity() const;
  /// Exponents on the basis elements of weight w.
  ExponentVector weight_slice(int w) const;

  /// "x1^2 x2 [x2,x1]", "1" for the identity.
  std::string to_string() const;

  friend bool operator==(const NilpotentElement& a, const NilpotentElement& b);

 private:
  std::shared_ptr<const NilpotentContext> ctx_;
  ExponentVector exponents_;
};

NilpotentElement collect(const FreeGroupWord& word, std::size_t n, int c,
                         const CollectorLimits& limits = {});
NilpotentElement collect(const FreeGroupWord& word, std::shared_ptr<const NilpotentContext> ctx);

NilpotentElement multiply(const NilpotentElement& a, const NilpotentElement& b);
NilpotentElement inverse(const NilpotentElement& a);
NilpotentElement power(const NilpotentElement& a, const Integer& k);
NilpotentElement commutator(const NilpotentElement& a, const NilpotentElement& b);
/// Left-normed [a1, a2, ..., am]; a single entry is returned unchanged.
NilpotentElement left_normed_commutator(std::span<const NilpotentElement> entries);

inline NilpotentElement operator*(const NilpotentElement& a, const NilpotentElement& b) {
  return multiply(a, b);
}

/// Exponents of the left-normed bracket [x_{l1}, ..., x_{lm}] on the weight-m
/// Hall basis elements of F / gamma_{c+1}(F), m <= c.
ExponentVector bracket_expand(std::span<const std::size_t> leaves, std::size_t n, int c,
                              const CollectorLimits& limits = {});

}  // namespace nilmult
