#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "affmon/numeric.hpp"

namespace affmon {

/// Dense rectangular matrix of exact integers. Rows of a matrix frequently
/// stand for lattice vectors (generators, basis elements, functionals).
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  std::vector<Vec> row_list() const;

  IntegerMatrix transposed() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += c * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
  /// col i += c * col j
  void add_col_multiple(std::size_t i, std::size_t j, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  void append_row(const Vec& v);

  bool is_zero() const;
  bool operator==(const IntegerMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// x * M for a row vector x.
Vec mul_row(const Vec& x, const IntegerMatrix& m);
/// M * x^T, returned as a row vector.
Vec mul_col(const IntegerMatrix& m, const Vec& x);

/// Exact determinant (square matrices) by fraction-free elimination.
Int determinant(const IntegerMatrix& m);

/// Stack the rows of b under the rows of a (column counts must agree).
IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace affmon
