//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_CONSTRUCTIONS_HPP_
#define HSFORCE_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <optional>

#include "hsforce/admissible.hpp"
#include "hsforce/random.hpp"
#include "hsforce/simplex.hpp"
#include "hsforce/sphere.hpp"

// Witness constructions on spheres: each returns an explicit simplex whose
// vertices lie on the given sphere (or inside the given cap).

namespace hsforce {

/// Right m-simplex inscribed in an (m-1)-sphere (m = flat dimension) with
/// random positive leg lengths and a random frame.
SimplexD right_simplex_inscribed(const SubSphere &s, Rng &rng);

/// Right simplex with equal legs a = 2 rho / sqrt(m) and its apex at `pole`;
/// its circumradius is a sqrt(m) / 2 = rho.
SimplexD right_simplex_at_pole(const SubSphere &s, const Eigen::VectorXd &pole);

/// On S_r with a cap of Euclidean radius delta r sqrt(2): a right n-simplex
/// with circumradius r inside the cap when delta > sqrt(2/n), nullopt
/// otherwise. Requires n >= 3.
std::optional<SimplexD> cap_contains_right_simplex(double r, double delta,
                                                   Index n);

/// Builds p_0 = pole, then p_{i+1} on S_{i+1} = S_i cap S_{r_i}(p_i) with
/// r_i the admissible length chosen strictly below half the current room,
/// down to a point pair {p_{n-1}, p_n}. All edges except d(p_{n-1}, p_n)
/// are admissible lengths. Throws kNoSmallLength.
SimplexD chain_construction(const Cap &cap, const AdmissibleLengths &lengths,
                            std::uint64_t seed, Tolerance tol = {});

/// Delta(r): the pole plus the first m vertices of a regular (n-1)-simplex
/// inscribed in S cap S_r(pole). The orientation depends on the seed only,
/// so r -> Delta(r) is continuous.
SimplexD delta_simplex(const Cap &cap, Index m, double r, std::uint64_t seed);

struct VolumeWitness {
  SimplexD simplex;
  double r;
  int iterations;
};

/// Bisection on r -> vol_m(Delta(r)) over (0, r1], r1 the cap's room bound.
/// Throws kOutOfRange for v <= 0 and kTargetTooLarge when v >= vol(Delta(r1)).
VolumeWitness volume_witness(const Cap &cap, Index m, double v,
                             std::uint64_t seed);

/// vol_m(Delta(r1)) at the cap's room bound: the largest target
/// volume_witness accepts.
double volume_witness_limit(const Cap &cap, Index m, std::uint64_t seed);

}  // namespace hsforce

#endif  // HSFORCE_CONSTRUCTIONS_HPP_
