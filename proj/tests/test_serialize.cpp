//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include "hsforce/error.hpp"
#include "hsforce/serialize.hpp"

using namespace hsforce;

namespace {

std::vector<AdmissibleSet> sample_sets() {
  using I = AdmissibleSet::Interval;
  return {
      AdmissibleSet::interval(0, Rational(1)),
      AdmissibleSet::interval(Rational(1, 3), std::nullopt, true),
      AdmissibleSet::interval(1, Rational(2), true, true),
      AdmissibleSet::finite({3, 4, 5}),
      AdmissibleSet::interval_minus(I {0, Rational(1, 10)}, {Rational(1, 107), Rational(2, 107)}),
      AdmissibleSet::union_of({I {0, Rational(1)}, I {2, Rational(3), true, false}}),
      AdmissibleSet::geometric(1, Rational(1, 2)),
  };
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("admissible sets round trip through JSON and strings") {
    for (const auto &s: sample_sets()) {
      const Json j = admissible_json(s);
      CHECK(admissible_json(parse_admissible(j)) == j);
      const std::string text = admissible_string(s);
      INFO(text);
      CHECK(admissible_json(parse_admissible(std::string_view(text))) == j);
    }
  }

  TEST_CASE("admissible string syntax") {
    CHECK(parse_admissible(std::string_view("3,4,5")).finite_members()->size() == 3);
    CHECK(parse_admissible(std::string_view("{1/2, 1}")).contains(Rational(1, 2)));
    const auto open = parse_admissible(std::string_view("(0,1)"));
    CHECK_FALSE(open.contains(Rational(1)));
    CHECK(open.contains(Rational(1, 2)));
    const auto closed = parse_admissible(std::string_view("[1,2]"));
    CHECK(closed.contains(Rational(1)));
    const auto unbounded = parse_admissible(std::string_view("(0,inf)"));
    CHECK(unbounded.contains(Rational(1000)));
    const auto minus = parse_admissible(std::string_view("(0,1)\\{1/2}"));
    CHECK_FALSE(minus.contains(Rational(1, 2)));
    const auto geom = parse_admissible(std::string_view("geom:1:1/2"));
    CHECK(geom.contains(Rational(1, 8)));
    CHECK_FALSE(geom.contains(Rational(3, 8)));
    const auto both = parse_admissible(std::string_view("(0,1)|[2,3]"));
    CHECK(both.contains(Rational(5, 2)));
    CHECK_THROWS_AS(parse_admissible(std::string_view("(1,0)")), Error);
    CHECK_THROWS_AS(parse_admissible(std::string_view("(0,")), Error);
  }

  TEST_CASE("colorings round trip") {
    for (const Coloring &c: {Coloring::constant(3), Coloring::strip(2), Coloring::merged_strip(2, 4),
                             Coloring::grid(3, Rational(1, 4)), Coloring::two_ball(),
                             Coloring::rational2d()}) {
      const Json j = coloring_json(c);
      const Index n = c.dimension() == 0 ? 3 : c.dimension();
      CHECK(coloring_json(parse_coloring(j, n)) == j);
    }
    CHECK(parse_coloring(std::string_view("grid:1/2"), 2).kind() == "grid");
    CHECK(parse_coloring(std::string_view("merged_strip:3"), 2).kind() == coloring_json(Coloring::merged_strip(2, 3)).at("kind"));
    CHECK_THROWS_AS(parse_coloring(std::string_view("checkerboard"), 2), Error);
  }

  TEST_CASE("properties round trip") {
    const std::vector<Property> props {
        Property(3, CardinalityProperty {4}),
        Property(3, IsoscelesProperty {2}),
        Property(2, RegularProperty {2}),
        Property(3, RightProperty {3}),
        Property(2, VolumeProperty {2, AdmissibleSet::interval(0, Rational(1))}),
        Property(2, EdgeLengthsProperty {3, AdmissibleSet::finite({3, 4, 5})}),
    };
    for (const auto &p: props) {
      const Json j = property_json(p);
      CHECK(property_json(parse_property(j, p.n())) == j);
    }
    CHECK(parse_property(std::string_view("regular:2"), 2).kind() == "regular");
    CHECK(parse_property(std::string_view("edge-lengths:1:(1,2)"), 2).kind() == "edge_lengths");
    CHECK_THROWS_AS(parse_property(std::string_view("regular:x"), 2), Error);
    CHECK_THROWS_AS(parse_property(std::string_view("shiny:2"), 2), Error);
  }

  TEST_CASE("conditions and centers round trip") {
    QCondition q {std::vector<Color> {1, 2}, Property(2, IsoscelesProperty {2}),
                  BallUnionCenters {{Ball {Eigen::Vector2d(1, 2), 0.5}}},
                  AdmissibleSet::interval(0, Rational(1)), 0.25};
    const Json j = condition_json(q);
    CHECK(condition_json(parse_condition(j, 2)) == j);
    CHECK(std::holds_alternative<AllCenters>(parse_centers(std::string_view("all"))));
    CHECK(std::get<AllCenters>(parse_centers(std::string_view("all:2"))).half_width == 2);
  }

  TEST_CASE("search results round trip") {
    SearchResult r;
    const Sphere s(Eigen::Vector2d(0.1, 0.9), 0.3);
    r.verdicts.push_back({0, s, HoldsVacuously {}});
    r.verdicts.push_back({1, s, HoldsWithWitnesses {4}});
    const Violation v {s, {Eigen::Vector2d(0.4, 0.9), Eigen::Vector2d(0.1, 1.2)}, 1, 0};
    r.verdicts.push_back({2, s, v});
    r.certificate = v;
    r.sampled = 3;
    const Json j = search_json(r);
    CHECK(search_json(parse_search(j)) == j);
    CHECK(verdict_json(Inconclusive {0}) == verdict_json(parse_verdict(verdict_json(Inconclusive {0}))));
  }

  TEST_CASE("finite configs parse in both modes") {
    const Json j = Json::parse(R"([{"coords": ["1/2", 0], "color": 1}, {"coords": [3, 4]}])");
    const auto q = parse_finite_config<Rational>(j);
    CHECK(q.points[0][0] == Rational(1, 2));
    CHECK(q.colors[0] == Color {1});
    CHECK_FALSE(q.colors[1].has_value());
    const auto d = parse_finite_config<double>(j);
    CHECK(d.points[1][1] == 4.0);
    CHECK(parse_finite_config<Rational>(Json::parse(config_points_json(q).dump())).points == q.points);
    CHECK_THROWS_AS(parse_finite_config<double>(Json::parse(R"({"coords": [1]})")), Error);
  }

  TEST_CASE("run configs overlay and reject unknown keys") {
    RunConfig base;
    base.seed = 5;
    const RunConfig c = parse_run_config(Json::parse(R"({"n": 3, "mode": "exact", "coloring": "strip"})"), base);
    CHECK(c.n == 3);
    CHECK(c.mode == Mode::kExact);
    CHECK(c.seed == 5);
    CHECK(coloring_of(c).kind() == "strip");
    CHECK(parse_run_config(run_config_json(c)).seed == 5);
    CHECK_THROWS_AS(parse_run_config(Json::parse(R"({"sead": 1})")), Error);
  }
}
