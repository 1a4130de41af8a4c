#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilmult/integer.hpp"

namespace nilmult {

struct Letter {
  std::size_t generator = 1;  // 1-based
  long exponent = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the free group on x1, x2, ...
///
/// Adjacent letters always carry distinct generators and no exponent is 0.
class FreeGroupWord {
 public:
  FreeGroupWord() = default;
  explicit FreeGroupWord(std::vector<Letter> letters);

  static FreeGroupWord generator(std::size_t g, long exponent = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }

  /// Largest generator index used, 0 for the empty word.
  std::size_t max_generator() const;

  /// Total number of x^{+-1} symbols.
  std::size_t length() const;

  FreeGroupWord inverse() const;
  FreeGroupWord power(long k) const;

  /// Exponent sum of each generator 1..n (the image in Z^n).
  std::vector<Integer> exponent_sums(std::size_t n) const;

  /// "x1^2 x2^-1", "1" for the empty word.
  std::string to_string() const;

  friend FreeGroupWord operator*(const FreeGroupWord& a, const FreeGroupWord& b);
  friend bool operator==(const FreeGroupWord&, const FreeGroupWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// [a, b] = a^-1 b^-1 a b.
FreeGroupWord commutator(const FreeGroupWord& a, const FreeGroupWord& b);

}  // namespace nilmult
