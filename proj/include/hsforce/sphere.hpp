//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_SPHERE_HPP_
#define HSFORCE_SPHERE_HPP_

#include <Eigen/Dense>

#include "hsforce/scalar.hpp"

namespace hsforce {

/// S_r(p) in R^n. Spheres are Float-only: their points are generally
/// irrational.
class Sphere {
public:
  Sphere(Eigen::VectorXd center, double radius);

  const Eigen::VectorXd &center() const { return center_; }
  double radius() const { return radius_; }
  Index ambient_dimension() const { return center_.size(); }

  /// |dist(center, x) - radius|
  double residual(const Eigen::VectorXd &x) const {
    return std::abs((x - center_).norm() - radius_);
  }

private:
  Eigen::VectorXd center_;
  double radius_;
};

/// A k-sphere: the points of the affine flat `center + span(basis)` at
/// distance `radius` from `center`. `basis` has k+1 orthonormal columns;
/// k = 0 is a point pair and radius 0 is a single point.
class SubSphere {
public:
  SubSphere(Eigen::VectorXd center, double radius, Eigen::MatrixXd basis);

  /// The full sphere viewed as an (n-1)-sphere of the whole space.
  static SubSphere from(const Sphere &sphere);

  const Eigen::VectorXd &center() const { return center_; }
  double radius() const { return radius_; }
  const Eigen::MatrixXd &basis() const { return basis_; }
  Index ambient_dimension() const { return center_.size(); }
  Index flat_dimension() const { return basis_.cols(); }
  Index sphere_dimension() const { return basis_.cols() - 1; }

  /// Distance of x from the flat.
  double flat_residual(const Eigen::VectorXd &x) const;
  double residual(const Eigen::VectorXd &x) const {
    return std::abs((x - center_).norm() - radius_);
  }

  Sphere as_sphere() const { return Sphere(center_, radius_); }

private:
  Eigen::VectorXd center_;
  double radius_;
  Eigen::MatrixXd basis_;
};

/// The open cap {x on sphere : |x - pole| < euclid_radius}.
class Cap {
public:
  Cap(SubSphere sphere, Eigen::VectorXd pole, double euclid_radius);
  Cap(const Sphere &sphere, Eigen::VectorXd pole, double euclid_radius)
      : Cap(SubSphere::from(sphere), std::move(pole), euclid_radius) { }

  /// Cap of Euclidean radius delta * r * sqrt(2), the uniform-cap family.
  static Cap with_delta(const Sphere &sphere, Eigen::VectorXd pole,
                        double delta);

  const SubSphere &sphere() const { return sphere_; }
  const Eigen::VectorXd &pole() const { return pole_; }
  double euclid_radius() const { return euclid_radius_; }

  bool contains(const Eigen::VectorXd &x, double sphere_tol = 1e-9) const {
    return sphere_.residual(x) <= sphere_tol * (1 + sphere_.radius())
           && (x - pole_).norm() < euclid_radius_;
  }

private:
  SubSphere sphere_;
  Eigen::VectorXd pole_;
  double euclid_radius_;
};

}  // namespace hsforce

#endif  // HSFORCE_SPHERE_HPP_
