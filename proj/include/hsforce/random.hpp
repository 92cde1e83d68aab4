//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_RANDOM_HPP_
#define HSFORCE_RANDOM_HPP_

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "hsforce/scalar.hpp"

namespace hsforce {

// All randomness is seeded explicitly; nothing reads ambient state.
using Rng = std::mt19937_64;

inline double uniform01(Rng &rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline double uniform(Rng &rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

Eigen::VectorXd gaussian_vector(Index dim, Rng &rng);

/// Uniform direction on S^(dim-1).
Eigen::VectorXd random_unit_vector(Index dim, Rng &rng);

/// Haar-uniform element of SO(dim): QR of a Gaussian matrix with the sign
/// of R's diagonal folded into Q, then a column flip to force det = +1.
Eigen::MatrixXd random_rotation(Index dim, Rng &rng);

}  // namespace hsforce

#endif  // HSFORCE_RANDOM_HPP_
