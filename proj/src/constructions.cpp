//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "hsforce/constructions.hpp"

#include <cmath>
#include <vector>

#include "hsforce/error.hpp"
#include "hsforce/sphere_ops.hpp"

namespace hsforce {
namespace {
  constexpr int kMaxBisection = 200;
  constexpr double kVolumeRelTol = 1e-12;

  // Maps right-simplex vertices given in flat coordinates (apex first) into
  // the ambient space.
  SimplexD right_from_frame(const SubSphere &s, const Eigen::MatrixXd &frame,
                            const Eigen::VectorXd &legs) {
    const Index d = s.flat_dimension();
    const Eigen::VectorXd apex = -0.5 * (frame * legs);
    Eigen::MatrixXd local(d, d + 1);
    local.col(0) = apex;
    for (Index i = 0; i < d; ++i)
      local.col(i + 1) = apex + legs[i] * frame.col(i);
    Eigen::MatrixXd vertices = s.basis() * local;
    vertices.colwise() += s.center();
    return SimplexD(std::move(vertices));
  }

  double room_bound(const Cap &cap) {
    // Intersections with S_r(pole) stay proper for r < 2R.
    return std::min(cap.euclid_radius(),
                    2 * cap.sphere().radius() * (1 - 1e-9));
  }
}  // namespace

SimplexD right_simplex_inscribed(const SubSphere &s, Rng &rng) {
  const Index d = s.flat_dimension();
  Eigen::VectorXd legs = gaussian_vector(d, rng).cwiseAbs();
  // Keep legs comparable so the simplex stays far from the degeneracy gate.
  legs.array() += 0.05 * legs.maxCoeff() + 1e-3;
  legs *= 2 * s.radius() / legs.norm();
  return right_from_frame(s, random_rotation(d, rng), legs);
}

SimplexD right_simplex_at_pole(const SubSphere &s,
                               const Eigen::VectorXd &pole) {
  const Index d = s.flat_dimension();
  const double rho = s.radius();
  if (!(rho > 0))
    throw Error(ErrorCode::kZeroRadius, "zero-radius sphere");
  const Eigen::VectorXd w =
      s.basis().transpose() * (pole - s.center()) / rho;
  const Eigen::VectorXd e =
      Eigen::VectorXd::Ones(d) / std::sqrt(static_cast<double>(d));

  // Householder reflection sending e to -w, so the apex -rho Q e lands on
  // the pole.
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(d, d);
  const Eigen::VectorXd v = e + w;
  if (v.squaredNorm() > 1e-24)
    q -= 2 * v * v.transpose() / v.squaredNorm();

  const Eigen::VectorXd legs =
      Eigen::VectorXd::Constant(d, 2 * rho / std::sqrt(static_cast<double>(d)));
  return right_from_frame(s, q, legs);
}

std::optional<SimplexD> cap_contains_right_simplex(double r, double delta,
                                                   Index n) {
  if (n < 3)
    throw Error(ErrorCode::kUnsupported,
                "the right-simplex cap construction needs n >= 3");
  if (!(r > 0))
    throw Error(ErrorCode::kOutOfRange, "radius must be positive");
  const Sphere sphere(Eigen::VectorXd::Zero(n), r);
  Eigen::VectorXd pole = Eigen::VectorXd::Zero(n);
  pole[n - 1] = r;
  const Cap cap = Cap::with_delta(sphere, pole, delta);

  SimplexD witness = right_simplex_at_pole(cap.sphere(), pole);
  for (Index i = 0; i < witness.vertex_count(); ++i)
    if (!cap.contains(witness.vertex(i)))
      return std::nullopt;
  return witness;
}

SimplexD chain_construction(const Cap &cap, const AdmissibleLengths &lengths,
                            std::uint64_t seed, Tolerance tol) {
  if (cap.sphere().sphere_dimension() < 1)
    throw Error(ErrorCode::kInvalidArgument,
                "chain construction needs a sphere of dimension >= 1");

  SubSphere current = cap.sphere();
  Eigen::VectorXd p = cap.pole();
  double room = room_bound(cap);
  std::vector<Eigen::VectorXd> points {p};

  for (std::uint64_t step = 0;; ++step) {
    const auto r = lengths.member_below(room / 2, tol);
    if (!r)
      throw Error(ErrorCode::kNoSmallLength,
                  "no admissible length below " + format_double(room / 2));
    Intersection next = intersect(current, Sphere(p, *r), tol);
    const auto *sub = std::get_if<SubSphere>(&next);
    if (sub == nullptr || !(sub->radius() > 0))
      throw Error(ErrorCode::kInvalidArgument,
                  "internal: chain step produced a degenerate intersection");

    if (sub->sphere_dimension() == 0) {
      points.push_back(sub->center() + sub->radius() * sub->basis().col(0));
      points.push_back(sub->center() - sub->radius() * sub->basis().col(0));
      break;
    }
    p = sample_uniform(*sub, 1, mix_seed(seed, step)).front();
    points.push_back(p);
    room = sub->radius();
    current = *sub;
  }
  return SimplexD::from_points(points);
}

SimplexD delta_simplex(const Cap &cap, Index m, double r, std::uint64_t seed) {
  const Index n = cap.sphere().flat_dimension();
  if (m < 1 || m > n)
    throw Error(ErrorCode::kOutOfRange, "need 1 <= m <= n");
  Intersection cut = intersect(cap.sphere(), Sphere(cap.pole(), r));
  const auto *sub = std::get_if<SubSphere>(&cut);
  if (sub == nullptr)
    throw Error(ErrorCode::kOutOfRange,
                "S cap S_r(pole) is not a sphere for r = " + format_double(r));
  const SimplexD regular = inscribed_regular(*sub, seed);
  Eigen::MatrixXd vertices(cap.pole().size(), m + 1);
  vertices.col(0) = cap.pole();
  vertices.rightCols(m) = regular.vertices().leftCols(m);
  return SimplexD(std::move(vertices));
}

double volume_witness_limit(const Cap &cap, Index m, std::uint64_t seed) {
  return cm_volume(delta_simplex(cap, m, room_bound(cap), seed));
}

VolumeWitness volume_witness(const Cap &cap, Index m, double v,
                             std::uint64_t seed) {
  if (!(v > 0))
    throw Error(ErrorCode::kOutOfRange, "target volume must be positive");
  const double r1 = room_bound(cap);
  const double limit = cm_volume(delta_simplex(cap, m, r1, seed));
  if (!(v < limit))
    throw Error(ErrorCode::kTargetTooLarge,
                "target " + format_double(v) + " is not below vol(Delta(r1)) = "
                    + format_double(limit));

  // Invariant: vol(Delta(lo)) < v <= vol(Delta(hi)), with vol -> 0 as r -> 0.
  double lo = 0, hi = r1;
  std::optional<VolumeWitness> best;
  double best_err = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= kMaxBisection; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi))
      break;
    SimplexD s = delta_simplex(cap, m, mid, seed);
    const double vol = cm_volume(s);
    const double err = std::abs(vol - v);
    if (err < best_err) {
      best_err = err;
      best = VolumeWitness {std::move(s), mid, it};
    }
    if (err <= kVolumeRelTol * v)
      break;
    if (vol < v)
      lo = mid;
    else
      hi = mid;
  }
  if (!best)
    throw Error(ErrorCode::kOutOfRange, "internal: bisection made no progress");
  return *best;
}

}  // namespace hsforce
