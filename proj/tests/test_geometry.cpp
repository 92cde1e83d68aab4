//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include "generators.hpp"
#include "hsforce/edge_length_function.hpp"
#include "hsforce/error.hpp"

using namespace hsforce;
using test::box_point;
using test::random_simplex;

namespace {

// det of the edge matrix over n!, the textbook formula.
double det_volume(const SimplexD &s) {
  const Eigen::MatrixXd e = edge_matrix<double>(s.vertices());
  double f = 1;
  for (Index i = 2; i <= s.dimension(); ++i)
    f *= static_cast<double>(i);
  return std::abs(e.determinant()) / f;
}

// Circumcenter in the plane from the perpendicular-bisector formula.
Eigen::Vector2d bisector_center(const Eigen::Vector2d &a, const Eigen::Vector2d &b,
                                const Eigen::Vector2d &c) {
  const double d = 2 * (a.x() * (b.y() - c.y()) + b.x() * (c.y() - a.y())
                        + c.x() * (a.y() - b.y()));
  const double a2 = a.squaredNorm(), b2 = b.squaredNorm(), c2 = c.squaredNorm();
  return {(a2 * (b.y() - c.y()) + b2 * (c.y() - a.y()) + c2 * (a.y() - b.y())) / d,
          (a2 * (c.x() - b.x()) + b2 * (a.x() - c.x()) + c2 * (b.x() - a.x())) / d};
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("rational parsing and formatting round trip") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("2") == Rational(2));
    CHECK(parse_rational("0.08") == Rational(2, 25));
    CHECK(parse_rational("007/010") == Rational(7, 10));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(format_rational(Rational(-7, 3)) == "-7/3");
    CHECK_THROWS_AS(parse_rational("x1"), Error);
    CHECK(floor_to_int(Rational(-1, 2)) == -1);
    CHECK(floor_to_int(2.0) == 2);
  }

  TEST_CASE("cm volume matches the determinant formula") {
    Rng rng(1);
    for (Index n = 1; n <= 5; ++n) {
      for (int t = 0; t < 50; ++t) {
        const SimplexD s = random_simplex(n, rng);
        CHECK(cm_volume(s) == doctest::Approx(det_volume(s)).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("exact cm volume of the unit right triangle and tetrahedron") {
    Matrix<Rational> tri(2, 3);
    tri << 0, 1, 0, 0, 0, 1;
    CHECK(cm_volume_squared(SimplexQ(tri)) == Rational(1, 4));
    Matrix<Rational> tet(3, 4);
    tet << 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1;
    CHECK(cm_volume_squared(SimplexQ(tet)) == Rational(1, 36));
  }

  TEST_CASE("lower-dimensional simplices measure their own volume") {
    Matrix<Rational> seg(3, 2);
    seg << 0, 2, 0, 0, 0, 0;
    CHECK(cm_volume_squared(SimplexQ(seg)) == Rational(4));
    Matrix<Rational> tri(3, 3);
    tri << 0, 2, 0, 0, 0, 2, 5, 5, 5;
    CHECK(cm_volume_squared(SimplexQ(tri)) == Rational(4));
  }

  TEST_CASE("circumcenter agrees with the bisector formula") {
    Rng rng(2);
    for (int t = 0; t < 200; ++t) {
      const SimplexD s = random_simplex(2, rng);
      const Eigen::Vector2d expect = bisector_center(s.vertex(0), s.vertex(1), s.vertex(2));
      const Eigen::VectorXd got = circumcenter(s);
      CHECK((got - expect).norm() <= 1e-9 * (1 + expect.norm()));
    }
  }

  TEST_CASE("exact circumcenter is equidistant") {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
      Matrix<Rational> v(3, 4);
      for (Index j = 0; j < 4; ++j)
        v.col(j) = test::rational_point(3, rng);
      if (matrix_rank<Rational>(edge_matrix<Rational>(v)) < 3)
        continue;
      const SimplexQ s(v);
      const Vector<Rational> c = circumcenter(s);
      for (Index j = 1; j < 4; ++j)
        CHECK((s.vertex(j) - c).squaredNorm() == (s.vertex(0) - c).squaredNorm());
    }
  }

  TEST_CASE("circumsphere needs a full-dimensional simplex") {
    Eigen::MatrixXd v(3, 3);
    v << 0, 1, 0, 0, 0, 1, 0, 0, 0;
    CHECK_THROWS_AS(circumcenter(SimplexD(v)), Error);
  }

  TEST_CASE("degenerate vertex sets are rejected") {
    Eigen::MatrixXd v(2, 3);
    v << 0, 1, 2, 0, 1, 2;
    CHECK_THROWS_AS(SimplexD {v}, Error);
    CHECK_THROWS_AS(SimplexD {Eigen::MatrixXd::Zero(2, 1)}, Error);
  }

  TEST_CASE("shape predicates") {
    Eigen::MatrixXd eq(2, 3);
    eq << 0, 1, 0.5, 0, 0, std::sqrt(3.0) / 2;
    CHECK(is_regular(SimplexD(eq)));
    CHECK(is_isosceles(SimplexD(eq)).has_value());
    CHECK_FALSE(is_right(SimplexD(eq)).has_value());

    Matrix<Rational> rt(2, 3);
    rt << 3, 0, 3, 0, 0, 4;
    CHECK(is_right(SimplexQ(rt)) == Index {0});
    CHECK_FALSE(is_regular(SimplexQ(rt)));
    CHECK_FALSE(is_isosceles(SimplexQ(rt)).has_value());

    Matrix<Rational> iso(2, 3);
    iso << 0, 2, 1, 0, 0, 5;
    CHECK(is_isosceles(SimplexQ(iso)) == Index {2});
  }

  TEST_CASE("edge length function indexing and gram matrix") {
    const EdgeLengthFunction<Rational> h(3, {1, 2, 3, 4, 5, 6});
    CHECK(h(0, 1) == 1);
    CHECK(h(0, 3) == 3);
    CHECK(h(2, 1) == 4);
    CHECK(h(1, 3) == 5);
    CHECK(h(2, 3) == 6);
    CHECK_THROWS_AS(EdgeLengthFunction<Rational>(2, {1, 2}), Error);
    CHECK_THROWS_AS(EdgeLengthFunction<Rational>(2, {1, 0, 1}), Error);
  }

  TEST_CASE("exact feasibility is the strict triangle inequality") {
    Rng rng(4);
    for (int t = 0; t < 2000; ++t) {
      const Rational a(1 + static_cast<long>(rng() % 9)), b(1 + static_cast<long>(rng() % 9)),
          c(1 + static_cast<long>(rng() % 9));
      const EdgeLengthFunction<Rational> h(2, {a, b, c});
      CHECK(feasible(h) == (a + b > c && a + c > b && b + c > a));
    }
    CHECK_FALSE(feasible(EdgeLengthFunction<Rational>(2, {1, 1, 2})));
  }

  TEST_CASE("regular tetrahedron lengths are feasible; a flat one is not") {
    CHECK(feasible(EdgeLengthFunction<Rational>(3, {1, 1, 1, 1, 1, 1})));
    // Corners of a 3-by-4 rectangle are coplanar.
    CHECK_FALSE(feasible(EdgeLengthFunction<Rational>(3, {3, 5, 4, 4, 5, 3})));
  }

  TEST_CASE("realize reproduces the lengths") {
    Rng rng(5);
    for (Index n = 2; n <= 4; ++n) {
      for (int t = 0; t < 50; ++t) {
        const SimplexD s = random_simplex(n, rng);
        const auto h = EdgeLengthFunction<double>::of(s);
        REQUIRE(feasible(h));
        const SimplexD r = realize(h);
        for (Index i = 0; i <= n; ++i)
          for (Index j = i + 1; j <= n; ++j)
            CHECK(std::sqrt(r.squared_distance(i, j)) == doctest::Approx(h(i, j)).epsilon(1e-9));
      }
    }
    CHECK_THROWS_AS(realize(EdgeLengthFunction<double>(2, {1, 1, 3})), Error);
  }

  TEST_CASE("circumradius from lengths matches the realized simplex") {
    const EdgeLengthFunction<Rational> h(2, {3, 4, 5});
    CHECK(circumradius_squared(h) == Rational(25, 4));
    const EdgeLengthFunction<Rational> eq(2, {3, 3, 3});
    CHECK(circumradius_squared(eq) == Rational(3));
  }

  TEST_CASE("rigid motions preserve volume and circumradius") {
    Rng rng(6);
    for (Index n = 2; n <= 4; ++n) {
      for (int t = 0; t < 30; ++t) {
        const SimplexD s = random_simplex(n, rng);
        const SimplexD m = s.transformed(random_rotation(n, rng), box_point(n, 5, rng));
        CHECK(cm_volume(m) == doctest::Approx(cm_volume(s)).epsilon(1e-9));
        CHECK(circumradius_squared(m) == doctest::Approx(circumradius_squared(s)).epsilon(1e-8));
      }
    }
  }

  TEST_CASE("random rotations are special orthogonal") {
    Rng rng(7);
    for (Index n = 2; n <= 5; ++n) {
      const Eigen::MatrixXd q = random_rotation(n, rng);
      CHECK((q.transpose() * q - Eigen::MatrixXd::Identity(n, n)).norm() < 1e-12);
      CHECK(q.determinant() == doctest::Approx(1.0));
    }
  }

  TEST_CASE("cube volume bound") {
    CHECK(cube_volume_bound(1, 2, 1) == doctest::Approx(std::sqrt(2.0)));
    CHECK(cube_volume_bound(2, 2, 1) == doctest::Approx(1.0));
    CHECK(cube_volume_bound(3, 3, 2) == doctest::Approx(std::pow(2 * std::sqrt(3.0), 3) / 6));
  }
}
