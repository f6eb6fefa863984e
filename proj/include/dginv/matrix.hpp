#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dginv/errors.hpp"
#include "dginv/rational.hpp"

namespace dginv {

// Dense matrix of exact rationals, row-major. Indices are 0-based
// throughout the library; human-facing output converts to 1-based labels.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    Matrix m(static_cast<int>(rows.size()),
             rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != m.cols_)
        throw DimensionError("ragged row in matrix literal");
      int j = 0;
      for (long long v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  const Rational& at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("matrix index out of range");
    return (*this)(i, j);
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // a_ii = 0 and a_ij != 0 <=> a_ji != 0; the matrix-side counterpart of a
  // simple symmetric digraph.
  bool combinatorially_symmetric_zero_diagonal() const {
    if (!square()) return false;
    for (int i = 0; i < rows_; ++i) {
      if ((*this)(i, i) != 0) return false;
      for (int j = i + 1; j < cols_; ++j)
        if (((*this)(i, j) != 0) != ((*this)(j, i) != 0)) return false;
    }
    return true;
  }

  // Rows and columns reindexed by `new_to_old`: result(r, c) = a(new_to_old[r], new_to_old[c]).
  Matrix conjugate_by_permutation(const std::vector<int>& new_to_old) const {
    if (!square() || static_cast<int>(new_to_old.size()) != rows_)
      throw DimensionError("permutation size mismatch");
    Matrix out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(new_to_old[r], new_to_old[c]);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("matrix product dimension mismatch: " + std::to_string(a.rows_) +
                           "x" + std::to_string(a.cols_) + " * " + std::to_string(b.rows_) +
                           "x" + std::to_string(b.cols_));
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) {
          if (b(k, j) == 0) continue;
          out(i, j) += aik * b(k, j);
        }
      }
    return out;
  }

  friend Matrix operator*(const Rational& c, const Matrix& a) {
    Matrix out(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) out(i, j) = c * a(i, j);
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionError("matrix difference dimension mismatch");
    Matrix out(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace dginv
