//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include "generators.hpp"
#include "hsforce/constructions.hpp"
#include "hsforce/error.hpp"
#include "hsforce/sphere_ops.hpp"

using namespace hsforce;
using test::box_point;

TEST_SUITE("constructions") {
  TEST_CASE("inscribed right simplices are right and on the sphere") {
    Rng rng(21);
    for (Index n = 2; n <= 5; ++n) {
      const Sphere s(box_point(n, 2, rng), uniform(rng, 0.2, 2));
      const SimplexD t = right_simplex_inscribed(SubSphere::from(s), rng);
      CHECK(is_right(t).has_value());
      for (Index i = 0; i <= n; ++i)
        CHECK(s.residual(t.vertex(i)) < 1e-9);
    }
  }

  TEST_CASE("right simplex at a pole has its apex there") {
    const Sphere s(Eigen::Vector3d(0, 0, 0), 2);
    const Eigen::VectorXd pole = Eigen::Vector3d(0, 0, 2);
    const SimplexD t = right_simplex_at_pole(SubSphere::from(s), pole);
    CHECK((t.vertex(0) - pole).norm() < 1e-12);
    CHECK(is_right(t) == Index {0});
  }

  TEST_CASE("right simplex in a cap for n >= 3") {
    for (Index n = 3; n <= 6; ++n) {
      const auto s = cap_contains_right_simplex(1.5, 0.9, n);
      REQUIRE(s.has_value());
      CHECK(is_right(*s).has_value());
    }
    CHECK_FALSE(cap_contains_right_simplex(1, 0.1, 3).has_value());
    CHECK_THROWS_AS(cap_contains_right_simplex(1, 0.9, 2), Error);
    CHECK_THROWS_AS(cap_contains_right_simplex(0, 0.9, 3), Error);
  }

  TEST_CASE("chain construction stays in the cap") {
    Rng rng(22);
    const auto lengths = AdmissibleSet::geometric(1, Rational(1, 2));
    for (Index n = 2; n <= 4; ++n) {
      for (int t = 0; t < 20; ++t) {
        const Sphere s(box_point(n, 2, rng), uniform(rng, 0.1, 3));
        const Eigen::VectorXd pole = s.center() + s.radius() * random_unit_vector(n, rng);
        const Cap cap = Cap::with_delta(s, pole, uniform(rng, 0.05, 0.99));
        const SimplexD w = chain_construction(cap, lengths, rng());
        CHECK(w.full_dimensional());
        int hits = 0;
        for (Index i = 0; i <= n; ++i) {
          CHECK(cap.contains(w.vertex(i)));
          for (Index j = i + 1; j <= n; ++j)
            hits += lengths.contains(std::sqrt(w.squared_distance(i, j)));
        }
        CHECK(hits >= n * (n + 1) / 2 - 1);
      }
    }
  }

  TEST_CASE("chain construction needs small lengths") {
    const Sphere s(Eigen::Vector2d(0, 0), 1);
    const Cap cap(s, Eigen::Vector2d(0, 1), 0.5);
    CHECK_THROWS_AS(chain_construction(cap, AdmissibleSet::finite({3}), 1), Error);
    try {
      chain_construction(cap, AdmissibleSet::interval(1, Rational(2)), 1);
      FAIL("expected an error");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::kNoSmallLength);
    }
  }

  TEST_CASE("volume witness hits targets and rejects bad ones") {
    const Sphere s(Eigen::Vector3d(0.5, 0, -1), 1.5);
    const Cap cap(s, Eigen::Vector3d(0.5, 0, 0.5), 1.5 * std::sqrt(2.0));
    for (Index m = 1; m <= 3; ++m) {
      const double limit = volume_witness_limit(cap, m, 4);
      for (double v: {1e-4, 1e-2}) {
        REQUIRE(v < limit);
        const auto w = volume_witness(cap, m, v, 4);
        CHECK(cm_volume(w.simplex) == doctest::Approx(v).epsilon(1e-9));
        CHECK(w.iterations <= 200);
        for (Index i = 0; i < w.simplex.vertex_count(); ++i)
          CHECK(cap.contains(w.simplex.vertex(i)));
      }
      try {
        volume_witness(cap, m, 2 * limit, 4);
        FAIL("expected an error");
      } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::kTargetTooLarge);
      }
    }
    CHECK_THROWS_AS(volume_witness(cap, 2, 0, 4), Error);
    CHECK_THROWS_AS(volume_witness(cap, 2, -1, 4), Error);
  }

  TEST_CASE("delta simplex starts at the pole") {
    const Sphere s(Eigen::Vector3d(0, 0, 0), 1);
    const Cap cap(s, Eigen::Vector3d(0, 0, 1), 1.4);
    const SimplexD d = delta_simplex(cap, 2, 0.5, 1);
    CHECK((d.vertex(0) - cap.pole()).norm() < 1e-15);
    CHECK(std::sqrt(d.squared_distance(0, 1)) == doctest::Approx(0.5));
    CHECK(std::sqrt(d.squared_distance(0, 2)) == doctest::Approx(0.5));
    CHECK_THROWS_AS(delta_simplex(cap, 4, 0.5, 1), Error);
  }
}
