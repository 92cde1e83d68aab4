//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include "hsforce/error.hpp"
#include "hsforce/svg.hpp"

using namespace hsforce;

namespace {

std::size_t count(const std::string &svg, const std::string &cls) {
  const std::string needle = "class=\"" + cls + "\"";
  std::size_t n = 0;
  for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1))
    ++n;
  return n;
}

}  // namespace

TEST_SUITE("svg") {
  TEST_CASE("grid cells cover the view") {
    const std::string svg = render_coloring(Coloring::grid(2, Rational(1, 2)), {-1, 1, -1, 1});
    CHECK(count(svg, "cell") == 16);
    const std::string off = render_coloring(Coloring::grid(2, Rational(1, 2)), {-0.75, 0.75, 0, 1});
    CHECK(count(off, "cell") == 8);
  }

  TEST_CASE("strip bands") {
    CHECK(count(render_coloring(Coloring::strip(2), {-4, 4, -4, 4}), "band") == 8);
    CHECK(count(render_coloring(Coloring::merged_strip(2, 3), {0, 1, -0.5, 2.5}), "band") == 4);
  }

  TEST_CASE("other colorings draw regions") {
    const std::string two = render_coloring(Coloring::two_ball(), {-4, 4, -4, 4});
    CHECK(count(two, "region") == 1);
    CHECK(count(two, "region-ball") == 2);
    CHECK(count(render_coloring(Coloring::constant(2), {0, 1, 0, 1}), "region") == 1);
  }

  TEST_CASE("overlays add one element per item") {
    const Violation v {Sphere(Eigen::Vector2d(0, 1), 0.5),
                       {Eigen::Vector2d(0.5, 1), Eigen::Vector2d(-0.5, 1), Eigen::Vector2d(0, 1.5)},
                       1,
                       0};
    const std::string svg = render_coloring(Coloring::strip(2), {-2, 2, -2, 2}, overlay_of(v));
    CHECK(count(svg, "sphere") == 1);
    CHECK(count(svg, "witness") == 3);
    CHECK(count(svg, "center") == 1);
  }

  TEST_CASE("rendering is deterministic") {
    const ViewBox view {-3, 3, -2, 2};
    CHECK(render_coloring(Coloring::grid(2, Rational(1, 3)), view)
          == render_coloring(Coloring::grid(2, Rational(1, 3)), view));
  }

  TEST_CASE("points render with and without colors") {
    FiniteConfig<double> cfg;
    cfg.points = {Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 1)};
    cfg.colors = {std::nullopt, 2};
    const std::string svg = render_points(cfg, {-1, 2, -1, 2});
    CHECK(count(svg, "point") == 1);
    CHECK(count(svg, "point-uncolored") == 1);
  }

  TEST_CASE("bad inputs") {
    CHECK_THROWS_AS(render_coloring(Coloring::strip(3), {0, 1, 0, 1}), Error);
    CHECK_THROWS_AS(render_coloring(Coloring::strip(2), {1, 0, 0, 1}), Error);
    CHECK_THROWS_AS(render_coloring(Coloring::grid(2, Rational(1, 1000)), {-10, 10, -10, 10}), Error);
  }
}
