//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "hsforce/sphere.hpp"

#include <string>

#include "hsforce/error.hpp"

namespace hsforce {

Sphere::Sphere(Eigen::VectorXd center, double radius)
    : center_(std::move(center)), radius_(radius) {
  if (!(radius_ > 0) || !std::isfinite(radius_))
    throw Error(ErrorCode::kZeroRadius,
                "sphere radius must be positive, got "
                    + format_double(radius_));
  if (center_.size() < 1)
    throw Error(ErrorCode::kInvalidArgument, "empty center");
}

SubSphere::SubSphere(Eigen::VectorXd center, double radius,
                     Eigen::MatrixXd basis)
    : center_(std::move(center)), radius_(radius), basis_(std::move(basis)) {
  if (!(radius_ >= 0) || !std::isfinite(radius_))
    throw Error(ErrorCode::kInvalidArgument,
                "sub-sphere radius must be nonnegative");
  if (basis_.rows() != center_.size() || basis_.cols() < 1
      || basis_.cols() > center_.size())
    throw Error(ErrorCode::kInvalidArgument,
                "sub-sphere basis must be n x (k+1) with k+1 <= n");
}

SubSphere SubSphere::from(const Sphere &sphere) {
  const Index n = sphere.ambient_dimension();
  return SubSphere(sphere.center(), sphere.radius(),
                   Eigen::MatrixXd::Identity(n, n));
}

double SubSphere::flat_residual(const Eigen::VectorXd &x) const {
  const Eigen::VectorXd d = x - center_;
  return (d - basis_ * (basis_.transpose() * d)).norm();
}

Cap::Cap(SubSphere sphere, Eigen::VectorXd pole, double euclid_radius)
    : sphere_(std::move(sphere)), pole_(std::move(pole)),
      euclid_radius_(euclid_radius) {
  if (!(euclid_radius_ > 0))
    throw Error(ErrorCode::kOutOfRange, "cap radius must be positive");
  if (euclid_radius_ > 2 * sphere_.radius() * (1 + 1e-12))
    throw Error(ErrorCode::kOutOfRange,
                "cap radius exceeds the sphere diameter");
  if (pole_.size() != sphere_.ambient_dimension())
    throw Error(ErrorCode::kInvalidArgument, "pole dimension mismatch");
  const double scale = 1 + sphere_.radius();
  if (sphere_.residual(pole_) > 1e-9 * scale
      || sphere_.flat_residual(pole_) > 1e-9 * scale)
    throw Error(ErrorCode::kInvalidArgument, "pole is not on the sphere");
}

Cap Cap::with_delta(const Sphere &sphere, Eigen::VectorXd pole, double delta) {
  if (!(delta > 0 && delta < 1))
    throw Error(ErrorCode::kOutOfRange, "delta must lie in (0, 1)");
  return Cap(sphere, std::move(pole),
             delta * sphere.radius() * std::sqrt(2.0));
}

}  // namespace hsforce
