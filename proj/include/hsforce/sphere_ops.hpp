//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_SPHERE_OPS_HPP_
#define HSFORCE_SPHERE_OPS_HPP_

#include <cstdint>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "hsforce/random.hpp"
#include "hsforce/scalar.hpp"
#include "hsforce/simplex.hpp"
#include "hsforce/sphere.hpp"

namespace hsforce {

struct EmptyIntersection { };

struct TangentPoint {
  Eigen::VectorXd point;
};

using Intersection = std::variant<EmptyIntersection, TangentPoint, SubSphere>;

/// Intersection of a k-sphere with a full sphere S_r(q). The result lives
/// in the k-sphere's flat: a (k-1)-sphere orthogonal to the line joining
/// the k-sphere's center to the projection of q. Throws kConcentricSpheres
/// when that projection coincides with the center.
Intersection intersect(const SubSphere &a, const Sphere &b,
                       Tolerance tol = {});

/// Two full spheres: nonempty (n-2)-sphere iff |R - r| < d < R + r.
Intersection intersect(const Sphere &a, const Sphere &b, Tolerance tol = {});

/// `count` points on the sub-sphere, uniform in direction, deterministic for
/// a fixed seed.
std::vector<Eigen::VectorXd> sample_uniform(const SubSphere &s,
                                            std::size_t count,
                                            std::uint64_t seed);
std::vector<Eigen::VectorXd> sample_uniform(const Sphere &s,
                                            std::size_t count,
                                            std::uint64_t seed);

/// Vertices of a regular m-simplex with unit circumradius centered at the
/// origin of R^m, as the columns of an m x (m+1) matrix.
Eigen::MatrixXd unit_regular_simplex(Index m);

/// Regular (k+1)-simplex inscribed in a k-sphere, randomly oriented within
/// its flat. Edge length is radius * sqrt(2 (m+1) / m) with m = k+1.
SimplexD inscribed_regular(const SubSphere &s, std::uint64_t seed);
SimplexD inscribed_regular(const Sphere &s, std::uint64_t seed);

/// Edge of the regular (n-1)-simplex inscribed in S_R(O) cap S_t(p0), for
/// any p0 on S_R(O): rho(t) sqrt(2n/(n-1)), rho(t) = t sqrt(1 - t^2/(4R^2)).
double h_edge(double big_radius, double t, Index n);

/// Random m-dimensional linear subspace of the sub-sphere's flat, as an
/// orthonormal basis.
Eigen::MatrixXd random_subflat(const SubSphere &s, Index m, Rng &rng);

/// m-dimensional subflat containing the direction of `x - center`.
Eigen::MatrixXd random_subflat_through(const SubSphere &s,
                                       const Eigen::VectorXd &x, Index m,
                                       Rng &rng);

/// Applies x -> rotation * x + translation.
SimplexD rigid_transform(const SimplexD &s, const Eigen::MatrixXd &rotation,
                         const Eigen::VectorXd &translation);

}  // namespace hsforce

#endif  // HSFORCE_SPHERE_OPS_HPP_
