//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include <set>

#include <doctest.h>

#include "generators.hpp"
#include "hsforce/coloring.hpp"
#include "hsforce/error.hpp"

using namespace hsforce;
using test::box_point;
using test::small_rational;

namespace {

Eigen::VectorXd pt(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x: xs)
    v[i++] = x;
  return v;
}

}  // namespace

TEST_SUITE("colorings") {
  TEST_CASE("strip coloring reads the last coordinate") {
    const Coloring f = Coloring::strip(2);
    CHECK(f(pt({5, 0.5})) == 0);
    CHECK(f(pt({-3, 1.0})) == 1);
    CHECK(f(pt({0, -0.25})) == -1);
    CHECK(f(to_vector<Rational>({0, Rational(-1, 3)})) == -1);
    CHECK(Coloring::strip(3)(pt({9, 9, 2.5})) == 2);
    CHECK_THROWS_AS(f(pt({1, 2, 3})), Error);
  }

  TEST_CASE("strips are convex color classes") {
    Rng rng(31);
    const Coloring f = Coloring::strip(3);
    for (int t = 0; t < 500; ++t) {
      const Eigen::VectorXd a = box_point(3, 3, rng), b = box_point(3, 3, rng);
      if (f(a) != f(b))
        continue;
      const double s = uniform01(rng);
      CHECK(f(Eigen::VectorXd((1 - s) * a + s * b)) == f(a));
    }
  }

  TEST_CASE("merged strips use k colors") {
    const Coloring f = Coloring::merged_strip(2, 4);
    CHECK(f(pt({0, -7})) == 0);
    CHECK(f(pt({0, 0.5})) == 1);
    CHECK(f(pt({0, 1.5})) == 2);
    CHECK(f(pt({0, 2.5})) == 3);
    CHECK(f(pt({0, 100})) == 3);
    std::set<Color> seen;
    for (double y = -5; y < 10; y += 0.25)
      seen.insert(f(pt({0, y})));
    CHECK(seen.size() == 4);
  }

  TEST_CASE("cell encoding is injective on a box") {
    for (Index n: {2, 3}) {
      std::set<std::int64_t> codes;
      std::vector<std::int64_t> cell(static_cast<std::size_t>(n), -20);
      std::size_t count = 0;
      for (;;) {
        codes.insert(kappa(cell));
        ++count;
        std::size_t i = 0;
        while (i < cell.size() && cell[i] == 20)
          cell[i++] = -20;
        if (i == cell.size())
          break;
        ++cell[i];
      }
      CHECK(codes.size() == count);
    }
  }

  TEST_CASE("cell encoding overflow is reported") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 4;
    const std::vector<std::int64_t> cell {big, big};
    CHECK_THROWS_AS(kappa(cell), Error);
    CHECK(fold_sign(0) == 0);
    CHECK(fold_sign(-1) == 1);
    CHECK(fold_sign(3) == 6);
    CHECK(cantor_pair(0, 0) == 0);
    CHECK(cantor_pair(1, 2) == 8);
  }

  TEST_CASE("grid color classes have diameter below delta sqrt(n)") {
    Rng rng(32);
    for (Index n: {2, 3}) {
      const Rational delta(3, 10);
      const Coloring f = Coloring::grid(n, delta);
      const double bound = 0.3 * std::sqrt(static_cast<double>(n));
      int same = 0;
      for (int t = 0; t < 4000; ++t) {
        const Eigen::VectorXd a = box_point(n, 2, rng);
        const Eigen::VectorXd b = a + box_point(n, bound, rng);
        if (f(a) != f(b))
          continue;
        ++same;
        CHECK((a - b).norm() < bound);
      }
      CHECK(same > 100);
    }
  }

  TEST_CASE("grid exact and float agree off the cell walls") {
    Rng rng(33);
    const Coloring f = Coloring::grid(2, Rational(1, 3));
    for (int t = 0; t < 200; ++t) {
      const Vector<Rational> q = test::rational_point(2, rng);
      bool on_wall = false;
      for (Index i = 0; i < 2; ++i)
        on_wall = on_wall || denominator(Rational(3 * q[i])) == 1;
      if (!on_wall)
        CHECK(f(q) == f(to_float(q)));
    }
  }

  TEST_CASE("two-ball coloring") {
    const Coloring f = Coloring::two_ball();
    CHECK(f(pt({2, 0})) == 2);
    CHECK(f(pt({-2, 0})) == 1);
    CHECK(f(pt({0, 5})) == 1);
    CHECK(f(pt({0, 0})) == 1);
    CHECK(f(to_vector<Rational>({Rational(1, 10), 0})) == 2);
  }

  TEST_CASE("rational plane coloring") {
    const Coloring f = Coloring::rational2d();
    CHECK(f(to_vector<Rational>({Rational(1, 3), 2})) == 1);
    CHECK(f(quad_point(1, 2)) == 1);
    CHECK(f(QuadPoint {QuadExt {0, 1}, QuadExt {1, 0}}) == 0);
    CHECK_THROWS_AS(f(pt({0.5, 0.5})), Error);
  }

  TEST_CASE("constant coloring ignores the point") {
    const Coloring f = Coloring::constant(7);
    CHECK(f(pt({1, 2})) == 7);
    CHECK(f(pt({1, 2, 3, 4})) == 7);
    CHECK(f.dimension() == 0);
  }

  TEST_CASE("circle through rational points has a rational center") {
    Rng rng(34);
    for (int t = 0; t < 300; ++t) {
      const QuadPoint p = quad_point(small_rational(rng), small_rational(rng));
      const QuadPoint q = quad_point(small_rational(rng), small_rational(rng));
      const QuadPoint r = quad_point(small_rational(rng), small_rational(rng));
      const Rational cross = (q[0].a - p[0].a) * (r[1].a - p[1].a)
                             - (q[1].a - p[1].a) * (r[0].a - p[0].a);
      if (cross == 0) {
        CHECK_THROWS_AS(rational_circle_center(p, q, r), Error);
        continue;
      }
      const Vector<Rational> c = rational_circle_center(p, q, r);
      const auto d2 = [&](const QuadPoint &x) {
        return Rational((x[0].a - c[0]) * (x[0].a - c[0]) + (x[1].a - c[1]) * (x[1].a - c[1]));
      };
      CHECK(d2(p) == d2(q));
      CHECK(d2(p) == d2(r));
    }
  }

  TEST_CASE("collinear and irrational inputs are rejected") {
    try {
      rational_circle_center(quad_point(0, 0), quad_point(1, 1), quad_point(2, 2));
      FAIL("expected an error");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::kCollinearPoints);
    }
    const QuadPoint irrational {QuadExt {0, 1}, QuadExt {0, 0}};
    CHECK_THROWS_AS(rational_circle_center(irrational, quad_point(1, 0), quad_point(0, 1)),
                    Error);
  }

  TEST_CASE("quadratic extension arithmetic") {
    const QuadExt s {0, 1};  // sqrt 2
    CHECK(s * s == QuadExt {2, 0});
    CHECK((QuadExt {1, 1} * QuadExt {1, -1}) == QuadExt {-1, 0});
    CHECK((s + s - s) == s);
  }
}
