//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include "generators.hpp"
#include "hsforce/error.hpp"
#include "hsforce/sphere_ops.hpp"

using namespace hsforce;
using test::box_point;

TEST_SUITE("sphere_ops") {
  TEST_CASE("two unit circles meet in two points") {
    const Sphere a(Eigen::Vector2d(0, 0), 1), b(Eigen::Vector2d(1, 0), 1);
    const auto cut = intersect(a, b);
    const auto *sub = std::get_if<SubSphere>(&cut);
    REQUIRE(sub != nullptr);
    CHECK(sub->sphere_dimension() == 0);
    CHECK(sub->center()[0] == doctest::Approx(0.5));
    CHECK(sub->center()[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(sub->radius() == doctest::Approx(std::sqrt(3.0) / 2));
    const Eigen::VectorXd p = sub->center() + sub->radius() * sub->basis().col(0);
    CHECK(std::abs(p[1]) == doctest::Approx(std::sqrt(3.0) / 2));
  }

  TEST_CASE("tangent, empty and concentric cases") {
    const Sphere a(Eigen::Vector2d(0, 0), 1);
    CHECK(std::holds_alternative<TangentPoint>(intersect(a, Sphere(Eigen::Vector2d(2, 0), 1))));
    CHECK(std::holds_alternative<TangentPoint>(intersect(a, Sphere(Eigen::Vector2d(0.5, 0), 0.5))));
    CHECK(std::holds_alternative<EmptyIntersection>(intersect(a, Sphere(Eigen::Vector2d(3, 0), 1))));
    CHECK(std::holds_alternative<EmptyIntersection>(intersect(a, Sphere(Eigen::Vector2d(0.1, 0), 0.2))));
    CHECK_THROWS_AS(intersect(a, Sphere(Eigen::Vector2d(0, 0), 2)), Error);
  }

  TEST_CASE("intersection points lie on both spheres") {
    Rng rng(11);
    for (Index n = 2; n <= 5; ++n) {
      for (int t = 0; t < 40; ++t) {
        const Sphere a(box_point(n, 2, rng), uniform(rng, 0.5, 2));
        const Eigen::VectorXd q = a.center() + a.radius() * random_unit_vector(n, rng);
        const Sphere b(q, uniform(rng, 0.01, 1.9) * a.radius());
        const auto cut = intersect(a, b);
        const auto *sub = std::get_if<SubSphere>(&cut);
        REQUIRE(sub != nullptr);
        CHECK(sub->sphere_dimension() == n - 2);
        for (const auto &p: sample_uniform(*sub, 5, rng())) {
          CHECK(a.residual(p) <= 1e-9 * (1 + a.radius()));
          CHECK(b.residual(p) <= 1e-9 * (1 + a.radius()));
        }
      }
    }
  }

  TEST_CASE("tiny intersection radii keep their relative accuracy") {
    const Sphere a(Eigen::Vector3d(1.5, -2, 0.5), 2.2);
    const Eigen::VectorXd pole = a.center() + Eigen::Vector3d(0, 0, 2.2);
    for (double r: {1e-3, 1e-5, 1e-7}) {
      const auto cut = intersect(a, Sphere(pole, r));
      const auto &sub = std::get<SubSphere>(cut);
      const Eigen::VectorXd p = sub.center() + sub.radius() * sub.basis().col(0);
      CHECK(std::abs((p - pole).norm() - r) <= 1e-8 * r);
    }
  }

  TEST_CASE("nested intersections walk down the dimension") {
    Rng rng(12);
    SubSphere s = SubSphere::from(Sphere(Eigen::VectorXd::Zero(4), 1));
    for (Index d = 3; d >= 1; --d) {
      const Eigen::VectorXd p = sample_uniform(s, 1, rng()).front();
      const auto cut = intersect(s, Sphere(p, 0.7 * s.radius()));
      s = std::get<SubSphere>(cut);
      CHECK(s.sphere_dimension() == d - 1);
      CHECK(s.flat_residual(s.center()) < 1e-12);
    }
  }

  TEST_CASE("sampled points are on the sphere") {
    const Sphere s(Eigen::Vector3d(1, 2, 3), 0.75);
    for (const auto &p: sample_uniform(s, 100, 9))
      CHECK(s.residual(p) < 1e-12);
    CHECK(sample_uniform(s, 3, 5) == sample_uniform(s, 3, 5));
  }

  TEST_CASE("inscribed regular simplices have the expected edge") {
    Rng rng(13);
    for (Index n = 2; n <= 5; ++n) {
      const Sphere s(box_point(n, 2, rng), uniform(rng, 0.1, 3));
      const SimplexD t = inscribed_regular(s, rng());
      CHECK(t.full_dimensional());
      CHECK(is_regular(t));
      const double m = static_cast<double>(n);
      const double edge = s.radius() * std::sqrt(2 * (m + 1) / m);
      CHECK(std::sqrt(t.squared_distance(0, 1)) == doctest::Approx(edge).epsilon(1e-9));
      for (Index i = 0; i <= n; ++i)
        CHECK(s.residual(t.vertex(i)) < 1e-9);
    }
  }

  TEST_CASE("unit regular simplex is centered with unit vertices") {
    for (Index m = 1; m <= 5; ++m) {
      const Eigen::MatrixXd u = unit_regular_simplex(m);
      CHECK(u.rowwise().sum().norm() < 1e-12);
      for (Index j = 0; j < u.cols(); ++j)
        CHECK(u.col(j).norm() == doctest::Approx(1.0));
    }
  }

  TEST_CASE("h_edge increases up to t = R sqrt 2 and matches the n = 2 chord") {
    for (Index n = 2; n <= 4; ++n) {
      double prev = 0;
      for (double t = 0.05; t < std::sqrt(2.0); t += 0.05) {
        const double h = h_edge(1, t, n);
        CHECK(h > prev);
        prev = h;
      }
    }
    // n = 2: two ring points are the chord ends, at distance 2 rho.
    const double t = 0.6;
    const double rho = t * std::sqrt(1 - t * t / 4);
    CHECK(h_edge(1, t, 2) == doctest::Approx(2 * rho));
  }

  TEST_CASE("random subflats are orthonormal and inside the flat") {
    Rng rng(14);
    const SubSphere s = SubSphere::from(Sphere(Eigen::VectorXd::Zero(4), 1));
    const Eigen::MatrixXd b = random_subflat(s, 2, rng);
    CHECK(b.cols() == 2);
    CHECK((b.transpose() * b - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-12);
    const Eigen::VectorXd x = Eigen::Vector4d(0, 0, 0, 1);
    const Eigen::MatrixXd bt = random_subflat_through(s, x, 2, rng);
    CHECK((bt * (bt.transpose() * x) - x).norm() < 1e-12);
  }
}
