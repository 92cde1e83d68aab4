//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include "generators.hpp"
#include "hsforce/error.hpp"
#include "hsforce/property.hpp"
#include "hsforce/sphere_ops.hpp"

using namespace hsforce;
using test::box_point;

namespace {

std::vector<Property> sample_properties(Index n) {
  std::vector<Property> out {
      Property(n, CardinalityProperty {n + 1}),
      Property(n, IsoscelesProperty {n}),
      Property(n, RegularProperty {n}),
      Property(n, RightProperty {n}),
      Property(n, VolumeProperty {n, AdmissibleSet::interval(0, Rational(1, 10))}),
      Property(n, EdgeLengthsProperty {1, AdmissibleSet::interval(0, Rational(1, 2))}),
      Property(n, EdgeLengthsProperty {n * (n + 1) / 2,
                                       AdmissibleSet::interval(0, Rational(1, 4))}),
  };
  if (n >= 3) {
    out.emplace_back(n, RegularProperty {n - 1});
    out.emplace_back(n, RightProperty {n - 1});
  }
  return out;
}

std::vector<Eigen::VectorXd> moved(const std::vector<Eigen::VectorXd> &pts,
                                   const Eigen::MatrixXd &q, const Eigen::VectorXd &t) {
  std::vector<Eigen::VectorXd> out;
  for (const auto &p: pts)
    out.emplace_back(q * p + t);
  return out;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(Property(2, RegularProperty {3}), Error);
    CHECK_THROWS_AS(Property(2, CardinalityProperty {0}), Error);
    CHECK_THROWS_AS(Property(2, EdgeLengthsProperty {4, AdmissibleSet::interval(0, Rational(1))}),
                    Error);
    CHECK(Property(3, RightProperty {2}).witness_size() == 3);
    CHECK(Property(3, CardinalityProperty {5}).witness_size() == 5);
    CHECK(Property(3, RegularProperty {3}).edge_count() == 6);
  }

  TEST_CASE("holds on small point sets") {
    const std::vector<Vector<Rational>> right {to_vector<Rational>({0, 0}),
                                               to_vector<Rational>({3, 0}),
                                               to_vector<Rational>({0, 4})};
    CHECK(holds<Rational>(Property(2, RightProperty {2}), right).has_value());
    CHECK_FALSE(holds<Rational>(Property(2, IsoscelesProperty {2}), right).has_value());
    const auto lengths = AdmissibleSet::finite({3, 4, 5});
    CHECK(holds<Rational>(Property(2, EdgeLengthsProperty {3, lengths}), right).has_value());
    CHECK(holds<Rational>(Property(2, VolumeProperty {2, AdmissibleSet::finite({6})}), right)
              .has_value());
    CHECK(holds<Rational>(Property(2, CardinalityProperty {3}), right).has_value());
    CHECK_FALSE(holds<Rational>(Property(2, CardinalityProperty {4}), right).has_value());

    const std::vector<Vector<Rational>> collinear {to_vector<Rational>({0, 0}),
                                                   to_vector<Rational>({1, 0}),
                                                   to_vector<Rational>({2, 0})};
    CHECK_FALSE(holds<Rational>(Property(2, IsoscelesProperty {2}), collinear).has_value());
  }

  TEST_CASE("holds rejects large sets for subset search") {
    std::vector<Eigen::VectorXd> pts;
    for (int i = 0; i < 13; ++i)
      pts.push_back(Eigen::Vector2d(i, i * i));
    CHECK_THROWS_AS(holds<double>(Property(2, RegularProperty {2}), pts), Error);
    CHECK(holds<double>(Property(2, CardinalityProperty {13}), pts).has_value());
  }

  TEST_CASE("holds is monotone under adding points") {
    Rng rng(41);
    for (Index n: {2, 3}) {
      for (const Property &p: sample_properties(n)) {
        for (int t = 0; t < 10; ++t) {
          const Sphere s(box_point(n, 2, rng), uniform(rng, 0.5, 2));
          auto w = witness_template(p, s, rng());
          if (!w)
            continue;
          REQUIRE(holds<double>(p, *w).has_value());
          w->push_back(box_point(n, 3, rng));
          CHECK(holds<double>(p, *w).has_value());
        }
      }
    }
  }

  TEST_CASE("templates lie on the sphere and satisfy the property") {
    Rng rng(42);
    for (Index n: {2, 3}) {
      for (const Property &p: sample_properties(n)) {
        int found = 0;
        for (int t = 0; t < 10; ++t) {
          const Sphere s(box_point(n, 2, rng), uniform(rng, 0.3, 2));
          const auto w = witness_template(p, s, rng());
          if (!w)
            continue;
          ++found;
          CHECK(static_cast<Index>(w->size()) == p.witness_size());
          for (const auto &x: *w)
            CHECK(s.residual(x) <= 1e-9 * (1 + s.radius()));
          CHECK(holds<double>(p, *w).has_value());
        }
        INFO(p.kind());
        CHECK(found > 0);
      }
    }
  }

  TEST_CASE("templates are deterministic per seed") {
    const Property p(3, IsoscelesProperty {3});
    const Sphere s(Eigen::Vector3d(1, 0, 0), 1);
    CHECK(*witness_template(p, s, 5) == *witness_template(p, s, 5));
  }

  TEST_CASE("properties are invariant under rigid motions") {
    Rng rng(43);
    for (Index n: {2, 3}) {
      for (const Property &p: sample_properties(n)) {
        const Sphere s(box_point(n, 1, rng), 1);
        const auto w = witness_template(p, s, rng());
        if (!w)
          continue;
        const auto m = moved(*w, random_rotation(n, rng), box_point(n, 5, rng));
        INFO(p.kind());
        CHECK(holds<double>(p, m).has_value());
      }
    }
  }

  TEST_CASE("cap witnesses stay inside uniform caps") {
    Rng rng(44);
    for (Index n: {2, 3, 4}) {
      for (const Property &p: sample_properties(n)) {
        const auto delta = uniform_cap_delta(p);
        if (!delta)
          continue;
        for (int t = 0; t < 5; ++t) {
          const Sphere s(box_point(n, 2, rng), uniform(rng, 0.3, 2));
          const Eigen::VectorXd pole = s.center() + s.radius() * random_unit_vector(n, rng);
          const Cap cap = Cap::with_delta(s, pole, *delta);
          const auto w = cap_witness(p, cap, rng());
          INFO(p.kind());
          REQUIRE(w.has_value());
          for (const auto &x: *w)
            CHECK(cap.contains(x));
          CHECK(holds<double>(p, *w).has_value());
        }
      }
    }
  }

  TEST_CASE("uniform cap deltas") {
    CHECK(uniform_cap_delta(Property(2, RegularProperty {2})) == std::nullopt);
    CHECK(uniform_cap_delta(Property(3, RegularProperty {2})).has_value());
    CHECK(uniform_cap_delta(Property(2, RightProperty {2})) == std::nullopt);
    CHECK(uniform_cap_delta(Property(3, RightProperty {3})).has_value());
    CHECK(uniform_cap_delta(Property(2, IsoscelesProperty {2})).has_value());
    CHECK(uniform_cap_delta(Property(2, EdgeLengthsProperty {1, AdmissibleSet::finite({1})}))
          == std::nullopt);
    CHECK(uniform_cap_delta(Property(2, EdgeLengthsProperty {2, AdmissibleSet::geometric(1, Rational(1, 2))}))
              .has_value());
    CHECK(uniform_cap_delta(Property(2, EdgeLengthsProperty {3, AdmissibleSet::geometric(1, Rational(1, 2))}))
          == std::nullopt);
    CHECK(uniform_cap_delta(Property(2, EdgeLengthsProperty {3, AdmissibleSet::interval(0, Rational(1))}))
              .has_value());
  }

  TEST_CASE("enumerate feasible length assignments") {
    const std::vector<Rational> s {3, 4, 5};
    const auto &all = enumerate_feasible(s, 2);
    bool thales = false;
    for (const auto &r: all) {
      CHECK(feasible(r.h));
      thales = thales || r.circumradius_squared == Rational(25, 4);
    }
    CHECK(thales);
    const std::vector<Rational> ones {1, 3};
    for (const auto &r: enumerate_feasible(ones, 2))
      CHECK(feasible(r.h));
    const std::vector<Rational> nine {1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK_THROWS_AS(enumerate_feasible(nine, 2), Error);
    CHECK_THROWS_AS(enumerate_feasible(s, 4), Error);
  }
}
