//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_TESTS_GENERATORS_HPP_
#define HSFORCE_TESTS_GENERATORS_HPP_

#include "hsforce/random.hpp"
#include "hsforce/scalar.hpp"
#include "hsforce/simplex.hpp"

namespace hsforce::test {

inline Eigen::VectorXd box_point(Index n, double half, Rng &rng) {
  Eigen::VectorXd v(n);
  for (Index i = 0; i < n; ++i)
    v[i] = uniform(rng, -half, half);
  return v;
}

inline Rational small_rational(Rng &rng, long range = 50, long max_den = 13) {
  const auto num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
  const auto den = static_cast<long>(rng() % static_cast<std::uint64_t>(max_den)) + 1;
  return Rational(num, den);
}

inline Vector<Rational> rational_point(Index n, Rng &rng) {
  Vector<Rational> v(n);
  for (Index i = 0; i < n; ++i)
    v[i] = small_rational(rng);
  return v;
}

/// Random full-dimensional simplex in [-half, half]^n, retrying degenerate
/// draws.
inline SimplexD random_simplex(Index n, Rng &rng, double half = 1) {
  for (;;) {
    Eigen::MatrixXd v(n, n + 1);
    for (Index j = 0; j <= n; ++j)
      v.col(j) = box_point(n, half, rng);
    if (affinely_independent<double>(v, Tolerance {1e-6}))
      return SimplexD(v);
  }
}

}  // namespace hsforce::test

#endif  // HSFORCE_TESTS_GENERATORS_HPP_
