//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "hsforce/sphere_ops.hpp"

#include <cmath>
#include <string>

#include "hsforce/error.hpp"

namespace hsforce {

Eigen::VectorXd gaussian_vector(Index dim, Rng &rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(dim);
  for (Index i = 0; i < dim; ++i)
    v[i] = normal(rng);
  return v;
}

Eigen::VectorXd random_unit_vector(Index dim, Rng &rng) {
  for (;;) {
    Eigen::VectorXd v = gaussian_vector(dim, rng);
    const double norm = v.norm();
    if (norm > 1e-12)
      return v / norm;
  }
}

Eigen::MatrixXd random_rotation(Index dim, Rng &rng) {
  Eigen::MatrixXd g(dim, dim);
  for (Index j = 0; j < dim; ++j)
    g.col(j) = gaussian_vector(dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::VectorXd diag = qr.matrixQR().diagonal();
  for (Index i = 0; i < dim; ++i)
    if (diag[i] < 0)
      q.col(i) *= -1;
  if (dim > 0 && q.determinant() < 0)
    q.col(0) *= -1;
  return q;
}

namespace {
  // Orthonormal basis (columns) of the complement of unit vector w.
  Eigen::MatrixXd orthogonal_complement(const Eigen::VectorXd &w) {
    const Eigen::MatrixXd col = w;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(col);
    Eigen::MatrixXd q = qr.householderQ();
    return q.rightCols(w.size() - 1);
  }

  bool near(double a, double b, double scale, Tolerance tol) {
    return std::abs(a - b) <= tol.rel * scale;
  }
}  // namespace

Intersection intersect(const SubSphere &a, const Sphere &b, Tolerance tol) {
  if (a.ambient_dimension() != b.ambient_dimension())
    throw Error(ErrorCode::kInvalidArgument, "dimension mismatch");

  const Eigen::VectorXd &c = a.center();
  const Eigen::MatrixXd &basis = a.basis();
  const double big_r = a.radius();
  const double scale = std::max({big_r, b.radius(), 1e-300});

  // Restrict b to the flat: a sphere of radius sqrt(r^2 - h^2) about the
  // projection of its center.
  const Eigen::VectorXd foot =
      c + basis * (basis.transpose() * (b.center() - c));
  const double h2 = (b.center() - foot).squaredNorm();
  double r2 = b.radius() * b.radius() - h2;
  if (r2 < -tol.rel * scale * scale)
    return EmptyIntersection {};
  const double r = std::sqrt(std::max(0.0, r2));

  if (big_r == 0) {
    if (near((c - foot).norm(), r, scale, tol))
      return TangentPoint {c};
    return EmptyIntersection {};
  }

  const Eigen::VectorXd to_foot = foot - c;
  const double d = to_foot.norm();
  if (d <= tol.rel * scale)
    throw Error(ErrorCode::kConcentricSpheres, "centers coincide");
  const Eigen::VectorXd u = to_foot / d;

  if (a.sphere_dimension() == 0) {
    // Point pair c +- R b0: keep whichever points also lie on b.
    std::vector<Eigen::VectorXd> hits;
    for (double sgn: {1.0, -1.0}) {
      Eigen::VectorXd p = c + sgn * big_r * basis.col(0);
      if (near((p - b.center()).norm(), b.radius(), scale, tol))
        hits.push_back(std::move(p));
    }
    if (hits.empty())
      return EmptyIntersection {};
    if (hits.size() == 1)
      return TangentPoint {hits.front()};
    return a;
  }

  if (near(d, big_r + r, scale, tol))
    return TangentPoint {Eigen::VectorXd(c + big_r * u)};
  if (d > big_r + r)
    return EmptyIntersection {};
  if (near(d, std::abs(big_r - r), scale, tol)) {
    const double sgn = big_r >= r ? 1.0 : -1.0;
    return TangentPoint {Eigen::VectorXd(c + sgn * big_r * u)};
  }
  if (d < std::abs(big_r - r))
    return EmptyIntersection {};

  // y = R - x in factored form; R^2 - x^2 cancels badly when r << R.
  const double gap = d - big_r;
  const double y = (r - gap) * (r + gap) / (2 * d);
  const double x = big_r - y;
  const double rho = std::sqrt(std::max(0.0, y * (2 * big_r - y)));
  const Eigen::VectorXd w = basis.transpose() * u;
  Eigen::MatrixXd new_basis = basis * orthogonal_complement(w / w.norm());
  return SubSphere(c + x * u, rho, std::move(new_basis));
}

Intersection intersect(const Sphere &a, const Sphere &b, Tolerance tol) {
  return intersect(SubSphere::from(a), b, tol);
}

std::vector<Eigen::VectorXd> sample_uniform(const SubSphere &s,
                                            std::size_t count,
                                            std::uint64_t seed) {
  if (count < 1)
    throw Error(ErrorCode::kInvalidArgument, "count must be >= 1");
  Rng rng(seed);
  std::vector<Eigen::VectorXd> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (s.radius() == 0) {
      out.push_back(s.center());
      continue;
    }
    const Eigen::VectorXd dir = random_unit_vector(s.flat_dimension(), rng);
    out.push_back(s.center() + s.radius() * (s.basis() * dir));
  }
  return out;
}

std::vector<Eigen::VectorXd> sample_uniform(const Sphere &s,
                                            std::size_t count,
                                            std::uint64_t seed) {
  return sample_uniform(SubSphere::from(s), count, seed);
}

Eigen::MatrixXd unit_regular_simplex(Index m) {
  if (m < 1)
    throw Error(ErrorCode::kInvalidArgument, "simplex dimension must be >= 1");
  const Index k = m + 1;
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(k) / std::sqrt(double(k));
  // Standard basis vectors of R^(m+1) centered at their centroid, expressed
  // in an orthonormal basis of the sum-zero hyperplane.
  const Eigen::MatrixXd centered =
      Eigen::MatrixXd::Identity(k, k)
      - Eigen::MatrixXd::Constant(k, k, 1.0 / static_cast<double>(k));
  Eigen::MatrixXd coords = orthogonal_complement(ones).transpose() * centered;
  return coords * std::sqrt(static_cast<double>(k) / static_cast<double>(m));
}

SimplexD inscribed_regular(const SubSphere &s, std::uint64_t seed) {
  if (!(s.radius() > 0))
    throw Error(ErrorCode::kZeroRadius,
                "cannot inscribe a simplex in a zero-radius sphere");
  const Index m = s.flat_dimension();
  Rng rng(seed);
  const Eigen::MatrixXd frame = s.basis() * random_rotation(m, rng);
  Eigen::MatrixXd vertices = s.radius() * (frame * unit_regular_simplex(m));
  vertices.colwise() += s.center();
  return SimplexD(std::move(vertices));
}

SimplexD inscribed_regular(const Sphere &s, std::uint64_t seed) {
  return inscribed_regular(SubSphere::from(s), seed);
}

double h_edge(double big_radius, double t, Index n) {
  if (n < 2)
    throw Error(ErrorCode::kOutOfRange, "h_edge needs n >= 2");
  if (!(big_radius > 0) || !(t > 0) || !(t < 2 * big_radius))
    throw Error(ErrorCode::kOutOfRange,
                "h_edge needs 0 < t < 2R, got t = " + format_double(t)
                    + ", R = " + format_double(big_radius));
  const double rho =
      t * std::sqrt(1 - t * t / (4 * big_radius * big_radius));
  const double nd = static_cast<double>(n);
  return rho * std::sqrt(2 * nd / (nd - 1));
}

Eigen::MatrixXd random_subflat(const SubSphere &s, Index m, Rng &rng) {
  if (m < 1 || m > s.flat_dimension())
    throw Error(ErrorCode::kOutOfRange, "subflat dimension out of range");
  return s.basis() * random_rotation(s.flat_dimension(), rng).leftCols(m);
}

Eigen::MatrixXd random_subflat_through(const SubSphere &s,
                                       const Eigen::VectorXd &x, Index m,
                                       Rng &rng) {
  const Index k = s.flat_dimension();
  if (m < 1 || m > k)
    throw Error(ErrorCode::kOutOfRange, "subflat dimension out of range");
  Eigen::VectorXd w = s.basis().transpose() * (x - s.center());
  if (w.norm() == 0)
    throw Error(ErrorCode::kInvalidArgument, "direction is zero");
  Eigen::MatrixXd seedcols(k, m);
  seedcols.col(0) = w / w.norm();
  for (Index j = 1; j < m; ++j)
    seedcols.col(j) = gaussian_vector(k, rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(seedcols);
  Eigen::MatrixXd q = Eigen::MatrixXd(qr.householderQ()).leftCols(m);
  return s.basis() * q;
}

SimplexD rigid_transform(const SimplexD &s, const Eigen::MatrixXd &rotation,
                         const Eigen::VectorXd &translation) {
  Eigen::MatrixXd v = rotation * s.vertices();
  v.colwise() += translation;
  return SimplexD(std::move(v));
}

}  // namespace hsforce
