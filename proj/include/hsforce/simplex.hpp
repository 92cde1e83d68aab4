//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_SIMPLEX_HPP_
#define HSFORCE_SIMPLEX_HPP_

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hsforce/error.hpp"
#include "hsforce/linalg.hpp"
#include "hsforce/scalar.hpp"
#include "hsforce/sphere.hpp"

namespace hsforce {

/// Difference matrix [v1 - v0, ..., vm - v0] of column vertices.
template <Scalar T>
Matrix<T> edge_matrix(const Matrix<T> &vertices) {
  const Index m = vertices.cols() - 1;
  Matrix<T> diff(vertices.rows(), std::max<Index>(m, 0));
  for (Index i = 0; i < m; ++i)
    diff.col(i) = vertices.col(i + 1) - vertices.col(0);
  return diff;
}

template <Scalar T>
bool affinely_independent(const Matrix<T> &vertices, Tolerance tol = {}) {
  const Index m = vertices.cols() - 1;
  if (m < 1 || m > vertices.rows())
    return false;
  return matrix_rank<T>(edge_matrix<T>(vertices), tol) == m;
}

/// An m-simplex in R^n: m+1 affinely independent vertices, stored as the
/// columns of an n x (m+1) matrix. Immutable after construction.
template <Scalar T>
class Simplex {
public:
  explicit Simplex(Matrix<T> vertices, Tolerance tol = {})
      : vertices_(std::move(vertices)) {
    if (vertices_.cols() < 2)
      throw Error(ErrorCode::kDegenerateSimplex,
                  "a simplex needs at least two vertices");
    if (!affinely_independent<T>(vertices_, tol))
      throw Error(ErrorCode::kDegenerateSimplex,
                  "vertices are not affinely independent");
  }

  static Simplex from_points(std::span<const Vector<T>> points,
                             Tolerance tol = {}) {
    if (points.empty())
      throw Error(ErrorCode::kDegenerateSimplex, "no vertices");
    Matrix<T> v(points.front().size(), static_cast<Index>(points.size()));
    for (Index i = 0; i < v.cols(); ++i)
      v.col(i) = points[static_cast<std::size_t>(i)];
    return Simplex(std::move(v), tol);
  }

  Index ambient_dimension() const { return vertices_.rows(); }
  /// m
  Index dimension() const { return vertices_.cols() - 1; }
  Index vertex_count() const { return vertices_.cols(); }
  Index edge_count() const { return vertex_count() * dimension() / 2; }
  bool full_dimensional() const { return dimension() == ambient_dimension(); }

  const Matrix<T> &vertices() const { return vertices_; }
  Vector<T> vertex(Index i) const { return vertices_.col(i); }

  std::vector<Vector<T>> points() const {
    std::vector<Vector<T>> out;
    out.reserve(static_cast<std::size_t>(vertex_count()));
    for (Index i = 0; i < vertex_count(); ++i)
      out.push_back(vertices_.col(i));
    return out;
  }

  T squared_distance(Index i, Index j) const {
    return (vertices_.col(i) - vertices_.col(j)).squaredNorm();
  }

  /// Squared distance matrix D(i, j) = |v_i - v_j|^2.
  Matrix<T> squared_distances() const {
    const Index k = vertex_count();
    Matrix<T> d = Matrix<T>::Zero(k, k);
    for (Index i = 0; i < k; ++i) {
      for (Index j = i + 1; j < k; ++j) {
        d(i, j) = squared_distance(i, j);
        d(j, i) = d(i, j);
      }
    }
    return d;
  }

  /// Applies x -> rotation * x + translation to every vertex.
  Simplex transformed(const Matrix<T> &rotation,
                      const Vector<T> &translation) const {
    Matrix<T> v = rotation * vertices_;
    v.colwise() += translation;
    return Simplex(std::move(v));
  }

private:
  Matrix<T> vertices_;
};

using SimplexD = Simplex<double>;
using SimplexQ = Simplex<Rational>;

/// Cayley-Menger matrix of a squared-distance matrix.
template <Scalar T>
Matrix<T> cayley_menger_matrix(const Matrix<T> &squared_distances) {
  const Index k = squared_distances.rows();
  Matrix<T> cm(k + 1, k + 1);
  cm(0, 0) = T(0);
  for (Index i = 1; i <= k; ++i) {
    cm(0, i) = T(1);
    cm(i, 0) = T(1);
  }
  cm.bottomRightCorner(k, k) = squared_distances;
  return cm;
}

/// vol_m^2 = (-1)^(m+1) det(CM) / (2^m (m!)^2), exact over the rationals.
inline Rational cm_volume_squared_exact(const Matrix<Rational> &sq_dist) {
  const Index m = sq_dist.rows() - 1;
  Rational det = determinant<Rational>(cayley_menger_matrix<Rational>(sq_dist));
  Rational denom = 1;
  for (Index i = 1; i <= m; ++i)
    denom *= Rational(2 * i * i);
  Rational v = det / denom;
  return (m % 2 == 0) ? Rational(-v) : v;
}

/// Squared m-volume via the Cayley-Menger determinant. Float simplices are
/// evaluated exactly on their binary-rational coordinates and rounded once,
/// so thin simplices keep full relative accuracy.
template <Scalar T>
T cm_volume_squared(const Simplex<T> &s) {
  if constexpr (ExactScalar<T>) {
    return cm_volume_squared_exact(s.squared_distances());
  } else {
    const Matrix<Rational> v = s.vertices().template cast<Rational>();
    const Index k = v.cols();
    Matrix<Rational> sq = Matrix<Rational>::Zero(k, k);
    for (Index i = 0; i < k; ++i) {
      for (Index j = i + 1; j < k; ++j) {
        sq(i, j) = (v.col(i) - v.col(j)).squaredNorm();
        sq(j, i) = sq(i, j);
      }
    }
    return to_double(cm_volume_squared_exact(sq));
  }
}

inline double cm_volume(const SimplexD &s) {
  return std::sqrt(std::max(0.0, cm_volume_squared(s)));
}

inline double cm_volume(const SimplexQ &s) {
  return std::sqrt(std::max(0.0, to_double(cm_volume_squared(s))));
}

/// Circumcenter of a full-dimensional simplex (exact for rational input).
template <Scalar T>
Vector<T> circumcenter(const Simplex<T> &s, Tolerance tol = {}) {
  if (!s.full_dimensional())
    throw Error(ErrorCode::kNotFullDimensional,
                "circumsphere needs m = n, got m = "
                    + std::to_string(s.dimension())
                    + ", n = " + std::to_string(s.ambient_dimension()));
  const Index n = s.ambient_dimension();
  Matrix<T> edges = edge_matrix<T>(s.vertices());
  Matrix<T> a = T(2) * edges.transpose();
  Vector<T> b(n);
  for (Index i = 0; i < n; ++i)
    b[i] = edges.col(i).squaredNorm();
  auto offset = solve_square<T>(a, b, tol);
  if (!offset)
    throw Error(ErrorCode::kDegenerateSimplex, "bisector system is singular");
  return Vector<T>(s.vertex(0) + *offset);
}

template <Scalar T>
T circumradius_squared(const Simplex<T> &s, Tolerance tol = {}) {
  return (circumcenter(s, tol) - s.vertex(0)).squaredNorm();
}

/// Circumsphere with the radius averaged over the vertices.
inline Sphere circumsphere(const SimplexD &s, Tolerance tol = {}) {
  Eigen::VectorXd c = circumcenter(s, tol);
  double r = 0;
  for (Index i = 0; i < s.vertex_count(); ++i)
    r += (s.vertex(i) - c).norm();
  return Sphere(std::move(c), r / static_cast<double>(s.vertex_count()));
}

/// max_v |dist(center, v) - radius|
inline double circumsphere_residual(const SimplexD &s, const Sphere &sphere) {
  double worst = 0;
  for (Index i = 0; i < s.vertex_count(); ++i)
    worst = std::max(worst, sphere.residual(s.vertex(i)));
  return worst;
}

/// Sorted squared edge lengths, binom(m+1, 2) values.
template <Scalar T>
std::vector<T> edge_lengths_squared(const Simplex<T> &s) {
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(s.edge_count()));
  for (Index i = 0; i < s.vertex_count(); ++i)
    for (Index j = i + 1; j < s.vertex_count(); ++j)
      out.push_back(s.squared_distance(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<double> edge_lengths(const SimplexD &s) {
  std::vector<double> out = edge_lengths_squared(s);
  for (double &x: out)
    x = std::sqrt(x);
  return out;
}

/// All pairwise distances equal.
template <Scalar T>
bool is_regular(const Simplex<T> &s, Tolerance tol = {}) {
  const T first = s.squared_distance(0, 1);
  for (Index i = 0; i < s.vertex_count(); ++i)
    for (Index j = i + 1; j < s.vertex_count(); ++j)
      if (!approx_equal(s.squared_distance(i, j), first, tol))
        return false;
  return true;
}

/// Lowest-index vertex equidistant from all others.
template <Scalar T>
std::optional<Index> is_isosceles(const Simplex<T> &s, Tolerance tol = {}) {
  for (Index apex = 0; apex < s.vertex_count(); ++apex) {
    const Index ref = apex == 0 ? 1 : 0;
    const T first = s.squared_distance(apex, ref);
    bool ok = true;
    for (Index j = 0; j < s.vertex_count() && ok; ++j)
      if (j != apex)
        ok = approx_equal(s.squared_distance(apex, j), first, tol);
    if (ok)
      return apex;
  }
  return std::nullopt;
}

/// Lowest-index vertex whose edge vectors are pairwise orthogonal.
template <Scalar T>
std::optional<Index> is_right(const Simplex<T> &s, Tolerance tol = {}) {
  const Index k = s.vertex_count();
  for (Index apex = 0; apex < k; ++apex) {
    bool ok = true;
    for (Index i = 0; i < k && ok; ++i) {
      if (i == apex)
        continue;
      const Vector<T> u = s.vertex(i) - s.vertex(apex);
      for (Index j = i + 1; j < k && ok; ++j) {
        if (j == apex)
          continue;
        const Vector<T> w = s.vertex(j) - s.vertex(apex);
        if constexpr (FloatScalar<T>)
          ok = is_negligible(u.dot(w), u.norm() * w.norm(), tol);
        else
          ok = u.dot(w) == 0;
      }
    }
    if (ok)
      return apex;
  }
  return std::nullopt;
}

/// Upper bound (delta sqrt(n))^m / m! on the m-volume of any m-simplex
/// with vertices in a closed hypercube of edge delta.
double cube_volume_bound(Index m, Index n, double delta);

}  // namespace hsforce

#endif  // HSFORCE_SIMPLEX_HPP_
