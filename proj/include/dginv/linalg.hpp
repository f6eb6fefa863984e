#pragma once

#include <optional>
#include <vector>

#include "dginv/matrix.hpp"

namespace dginv {

struct Rref {
  Matrix reduced;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Gauss-Jordan over the rationals; exact, no pivot-magnitude concerns.
inline Rref rref(Matrix a) {
  Rref out;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows(); ++r)
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(pivot, c));
    Rational inv = Rational(1) / a(row, col);
    for (int c = 0; c < a.cols(); ++c) a(row, c) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      Rational factor = a(r, col);
      for (int c = 0; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(a);
  return out;
}

inline int rank(const Matrix& a) { return rref(a).rank; }

inline std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.square()) throw DimensionError("inverse of non-square matrix");
  int n = a.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  Rref r = rref(std::move(aug));
  // invertible iff every pivot sits in the left block
  if (r.rank < n || r.pivot_cols[n - 1] >= n) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

// Group inverse by full-rank factorization: with A = C*R (C = pivot
// columns of A, R = nonzero rows of rref(A)), the group inverse is
// C*(RC)^-2*R, and it exists exactly when RC is invertible, i.e. when
// rank(A) = rank(A^2).
inline Matrix group_inverse_oracle(const Matrix& a) {
  if (!a.square()) throw DimensionError("group inverse of non-square matrix");
  int n = a.rows();
  Rref red = rref(a);
  int r = red.rank;
  if (r == 0) return Matrix(n, n);  // A = 0, X = 0

  Matrix c(n, r);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < r; ++k) c(i, k) = a(i, red.pivot_cols[k]);
  Matrix rr(r, a.cols());
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < a.cols(); ++j) rr(k, j) = red.reduced(k, j);

  auto rc_inv = inverse(rr * c);
  if (!rc_inv)
    throw NoGroupInverse("rank_condition",
                         "no group inverse: rank(A) != rank(A^2)");
  return c * (*rc_inv * *rc_inv) * rr;
}

struct GroupAxioms {
  bool axa_equals_a = false;
  bool xax_equals_x = false;
  bool ax_commutes = false;
  bool all() const { return axa_equals_a && xax_equals_x && ax_commutes; }
};

inline GroupAxioms verify_group_axioms(const Matrix& a, const Matrix& x) {
  if (!a.square() || !x.square() || a.rows() != x.rows())
    throw DimensionError("axiom check needs square matrices of equal size");
  Matrix ax = a * x;
  Matrix xa = x * a;
  GroupAxioms res;
  res.axa_equals_a = (ax * a == a);
  res.xax_equals_x = (xa * x == x);
  res.ax_commutes = (ax == xa);
  return res;
}

}  // namespace dginv
