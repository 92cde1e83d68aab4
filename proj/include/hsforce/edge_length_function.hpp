//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_EDGE_LENGTH_FUNCTION_HPP_
#define HSFORCE_EDGE_LENGTH_FUNCTION_HPP_

#include <string>
#include <vector>

#include "hsforce/error.hpp"
#include "hsforce/linalg.hpp"
#include "hsforce/scalar.hpp"
#include "hsforce/simplex.hpp"

namespace hsforce {

/// Prescribed lengths h(i, j), 0 <= i < j <= n, for the N = binom(n+1, 2)
/// edges of an n-simplex. Values are stored in lexicographic pair order
/// (0,1), (0,2), ..., (0,n), (1,2), ...
template <Scalar T>
class EdgeLengthFunction {
public:
  EdgeLengthFunction(Index n, std::vector<T> values)
      : n_(n), values_(std::move(values)) {
    if (n < 1)
      throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
    if (static_cast<Index>(values_.size()) != edge_count(n))
      throw Error(ErrorCode::kInvalidArgument,
                  "expected " + std::to_string(edge_count(n))
                      + " edge lengths, got "
                      + std::to_string(values_.size()));
    for (const T &v: values_)
      if (!(v > 0))
        throw Error(ErrorCode::kInvalidArgument,
                    "edge lengths must be positive");
  }

  /// Measures a full-dimensional simplex.
  static EdgeLengthFunction of(const Simplex<T> &s)
    requires FloatScalar<T>
  {
    const Index n = s.dimension();
    std::vector<T> values;
    for (Index i = 0; i <= n; ++i)
      for (Index j = i + 1; j <= n; ++j)
        values.push_back(std::sqrt(s.squared_distance(i, j)));
    return EdgeLengthFunction(n, std::move(values));
  }

  static constexpr Index edge_count(Index n) { return n * (n + 1) / 2; }

  Index dimension() const { return n_; }
  const std::vector<T> &values() const { return values_; }

  const T &operator()(Index i, Index j) const {
    if (i > j)
      std::swap(i, j);
    // Offset of row i in the lexicographic layout.
    const Index row = i * n_ - i * (i - 1) / 2;
    return values_[static_cast<std::size_t>(row + (j - i - 1))];
  }

  T squared(Index i, Index j) const {
    const T &v = (*this)(i, j);
    return v * v;
  }

  Matrix<T> squared_distances() const {
    Matrix<T> d = Matrix<T>::Zero(n_ + 1, n_ + 1);
    for (Index i = 0; i <= n_; ++i) {
      for (Index j = i + 1; j <= n_; ++j) {
        d(i, j) = squared(i, j);
        d(j, i) = d(i, j);
      }
    }
    return d;
  }

  /// Gram matrix of the edge vectors anchored at vertex 0:
  /// G(i, j) = (h(0,i)^2 + h(0,j)^2 - h(i,j)^2) / 2.
  Matrix<T> gram_matrix() const {
    Matrix<T> g(n_, n_);
    for (Index i = 1; i <= n_; ++i) {
      for (Index j = 1; j <= n_; ++j) {
        const T dij = i == j ? T(0) : squared(i, j);
        g(i - 1, j - 1) = (squared(0, i) + squared(0, j) - dij) / T(2);
      }
    }
    return g;
  }

private:
  Index n_;
  std::vector<T> values_;
};

/// Leading pivots of the Gram matrix; all positive iff every leading
/// Cayley-Menger determinant has the sign of a nondegenerate simplex.
template <Scalar T>
std::vector<T> gram_pivots(const Matrix<T> &gram) {
  Matrix<T> a = gram;
  const Index n = a.rows();
  std::vector<T> pivots;
  for (Index k = 0; k < n; ++k) {
    pivots.push_back(a(k, k));
    if (a(k, k) == 0)
      break;
    for (Index i = k + 1; i < n; ++i) {
      T factor = a(i, k) / a(k, k);
      for (Index j = k; j < n; ++j)
        a(i, j) -= factor * a(k, j);
    }
  }
  return pivots;
}

/// True iff an n-simplex in R^n realizes all prescribed distances.
template <Scalar T>
bool feasible(const EdgeLengthFunction<T> &h, Tolerance tol = {}) {
  const Matrix<T> g = h.gram_matrix();
  const std::vector<T> pivots = gram_pivots<T>(g);
  if (static_cast<Index>(pivots.size()) < h.dimension())
    return false;
  T scale = T(0);
  for (Index i = 0; i < g.rows(); ++i)
    scale = std::max<T>(scale, g(i, i));
  for (const T &p: pivots) {
    if (!(p > 0) || is_negligible(p, scale, tol))
      return false;
  }
  return true;
}

/// Canonical realization: vertex 0 at the origin, vertex k in the span of
/// the first k axes with a positive k-th coordinate.
SimplexD realize(const EdgeLengthFunction<double> &h, Tolerance tol = {});
SimplexD realize(const EdgeLengthFunction<Rational> &h, Tolerance tol = {});

/// Circumradius^2 straight from the lengths: R^2 = -det(D) / (2 det(CM)).
/// Exact for rational lengths.
template <Scalar T>
T circumradius_squared(const EdgeLengthFunction<T> &h) {
  const Matrix<T> d = h.squared_distances();
  const T cm = determinant<T>(cayley_menger_matrix<T>(d));
  if (cm == 0)
    throw Error(ErrorCode::kInfeasibleLengths, "degenerate lengths");
  return -determinant<T>(d) / (T(2) * cm);
}

}  // namespace hsforce

#endif  // HSFORCE_EDGE_LENGTH_FUNCTION_HPP_
