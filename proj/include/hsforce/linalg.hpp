//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_LINALG_HPP_
#define HSFORCE_LINALG_HPP_

#include <optional>
#include <utility>

#include "hsforce/scalar.hpp"

// Pivoted elimination used as the single degeneracy gate. Float matrices go
// through Eigen's LU decompositions with a relative threshold; exact
// matrices are reduced by hand because Eigen's pivoting heuristics assume a
// floating-point epsilon.

namespace hsforce {
namespace internal {
  // In-place row echelon reduction with full pivoting on nonzero entries.
  // Returns the rank and accumulates the determinant when square.
  inline Index exact_echelon(Matrix<Rational> &a, Rational *det = nullptr) {
    const Index rows = a.rows(), cols = a.cols();
    Rational sign = 1;
    Index rank = 0;
    for (Index col = 0; col < cols && rank < rows; ++col) {
      Index pivot = -1;
      for (Index r = rank; r < rows; ++r) {
        if (a(r, col) != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0)
        continue;
      if (pivot != rank) {
        a.row(pivot).swap(a.row(rank));
        sign = -sign;
      }
      for (Index r = rank + 1; r < rows; ++r) {
        if (a(r, col) == 0)
          continue;
        Rational factor = a(r, col) / a(rank, col);
        for (Index c = col; c < cols; ++c)
          a(r, c) -= factor * a(rank, c);
      }
      ++rank;
    }
    if (det != nullptr) {
      if (rows != cols || rank < rows) {
        *det = 0;
      } else {
        Rational d = sign;
        for (Index i = 0; i < rows; ++i)
          d *= a(i, i);
        *det = d;
      }
    }
    return rank;
  }
}  // namespace internal

template <Scalar T>
Index matrix_rank(Matrix<T> a, Tolerance tol = {}) {
  if (a.size() == 0)
    return 0;
  if constexpr (FloatScalar<T>) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(tol.rel);
    return lu.rank();
  } else {
    return internal::exact_echelon(a);
  }
}

template <Scalar T>
T determinant(Matrix<T> a) {
  if (a.rows() == 0)
    return T(1);
  if constexpr (FloatScalar<T>) {
    return a.partialPivLu().determinant();
  } else {
    Rational det;
    internal::exact_echelon(a, &det);
    return det;
  }
}

/// Solves a square system; nullopt when the matrix is singular under the
/// degeneracy gate.
template <Scalar T>
std::optional<Vector<T>> solve_square(const Matrix<T> &a, const Vector<T> &b,
                                      Tolerance tol = {}) {
  const Index n = a.rows();
  if constexpr (FloatScalar<T>) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(tol.rel);
    if (lu.rank() < n)
      return std::nullopt;
    return Eigen::VectorXd(lu.solve(b));
  } else {
    Matrix<Rational> aug(n, n + 1);
    aug.leftCols(n) = a;
    aug.col(n) = b;
    internal::exact_echelon(aug);
    // A column of A without a pivot leaves a zero on the diagonal.
    for (Index i = 0; i < n; ++i) {
      if (aug(i, i) == 0)
        return std::nullopt;
    }
    Vector<Rational> x(n);
    for (Index i = n - 1; i >= 0; --i) {
      Rational acc = aug(i, n);
      for (Index j = i + 1; j < n; ++j)
        acc -= aug(i, j) * x[j];
      x[i] = acc / aug(i, i);
    }
    return x;
  }
}

}  // namespace hsforce

#endif  // HSFORCE_LINALG_HPP_
