#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "nilmult/integer.hpp"

namespace nilmult {

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Either dimension may be zero. When a matrix describes relations on an
/// abelian group, each row is one relation and each column one generator.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);

  /// Rows given as nested lists; all rows must have the same length.
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                                 std::size_t cols);
  static IntegerMatrix diagonal(std::span<const Integer> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::vector<Integer> column(std::size_t c) const;

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  IntegerMatrix transpose() const;

  /// Sub-block of rows [r0, r0+nr) and columns [c0, c0+nc).
  IntegerMatrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;

  /// Appends another matrix's rows; column counts must agree.
  void append_rows(const IntegerMatrix& other);
  void append_row(std::span<const Integer> row);

  /// Exact determinant by fraction-free elimination.
  Integer determinant() const;
  bool is_unimodular() const;

  std::string to_string() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator*(const Integer& k, const IntegerMatrix& a);

/// Row vector times matrix.
std::vector<Integer> operator*(std::span<const Integer> v, const IntegerMatrix& m);

/// Kronecker product; row (i,k) of the result is indexed i * b.rows() + k.
IntegerMatrix kronecker(const IntegerMatrix& a, const IntegerMatrix& b);

/// Block matrix [a | b].
IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b);
/// Block matrix [a ; b].
IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace nilmult
