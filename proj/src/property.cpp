//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "hsforce/property.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "hsforce/constructions.hpp"
#include "hsforce/sphere_ops.hpp"

namespace hsforce {
namespace {
  constexpr std::size_t kMaxPrefix = 8;
  constexpr int kMaxLengthSearch = 200;
  constexpr double kRightCapDelta = 0.9;
  constexpr double kCapDelta = 0.5;

  void require_simplex_dimension(Index m, Index n) {
    if (m < 2 || m > n)
      throw Error(ErrorCode::kInvalidArgument,
                  "simplex properties need 2 <= m <= n, got m = "
                      + std::to_string(m) + ", n = " + std::to_string(n));
  }

  std::vector<Eigen::VectorXd> vertices_of(const SimplexD &s) {
    return s.points();
  }

  // Sub-sphere of points at distance t from the pole, restricted to a random
  // flat of dimension `dim` (at most n - 1).
  SubSphere ring_around_pole(const SubSphere &sphere,
                             const Eigen::VectorXd &pole, double t, Index dim,
                             Rng &rng) {
    Intersection cut = intersect(sphere, Sphere(pole, t));
    const auto *ring = std::get_if<SubSphere>(&cut);
    if (ring == nullptr)
      throw Error(ErrorCode::kOutOfRange, "ring radius out of range");
    if (dim == ring->flat_dimension())
      return *ring;
    return SubSphere(ring->center(), ring->radius(),
                     random_subflat(*ring, dim, rng));
  }

  Eigen::VectorXd random_point(const SubSphere &s, Rng &rng) {
    return s.center() + s.radius() * (s.basis() * random_unit_vector(
                                           s.flat_dimension(), rng));
  }

  // Smallest r in S below `bound` for which the regular (n-1)-simplex cut
  // out at distance r from a pole has its edge h_edge(R, r) in S as well.
  std::optional<double> solve_all_edges(const AdmissibleLengths &lengths,
                                        double big_r, Index n, double bound,
                                        Tolerance tol) {
    bound = std::min(bound, 2 * big_r * (1 - 1e-9));
    for (int i = 0; i < kMaxLengthSearch; ++i) {
      const auto r = lengths.member_below(bound, tol);
      if (!r)
        return std::nullopt;
      if (lengths.contains(h_edge(big_r, *r, n), tol))
        return r;
      bound = *r;
    }
    return std::nullopt;
  }

  std::vector<Eigen::VectorXd> all_edges_at_pole(const SubSphere &sphere,
                                                 const Eigen::VectorXd &pole,
                                                 double r,
                                                 std::uint64_t seed) {
    Intersection cut = intersect(sphere, Sphere(pole, r));
    const SimplexD ring = inscribed_regular(std::get<SubSphere>(cut), seed);
    std::vector<Eigen::VectorXd> out {pole};
    for (Index i = 0; i < ring.vertex_count(); ++i)
      out.push_back(ring.vertex(i));
    return out;
  }

  std::optional<std::vector<Eigen::VectorXd>> all_edges_by_enumeration(
      const std::vector<Rational> &members, const Sphere &sphere, Index n,
      Rng &rng, Tolerance tol) {
    const double r2 = sphere.radius() * sphere.radius();
    std::vector<const RealizedLengths *> matches;
    for (const auto &cand: enumerate_feasible(members, n))
      if (approx_equal(to_double(cand.circumradius_squared), r2, tol))
        matches.push_back(&cand);
    if (matches.empty())
      return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, matches.size() - 1);
    const SimplexD s = realize(matches[pick(rng)]->h, tol);
    const Eigen::VectorXd c = circumcenter(s, tol);
    const Eigen::MatrixXd q = random_rotation(n, rng);
    std::vector<Eigen::VectorXd> out;
    for (Index i = 0; i < s.vertex_count(); ++i)
      out.push_back(q * (s.vertex(i) - c) + sphere.center());
    return out;
  }

  bool small_finite(const AdmissibleLengths &lengths, Index n) {
    const auto members = lengths.finite_members();
    return members && members->size() <= kMaxPrefix && (n == 2 || n == 3);
  }
}  // namespace

Property::Property(Index n, Spec spec) : n_(n), spec_(std::move(spec)) {
  if (n_ < 2)
    throw Error(ErrorCode::kInvalidArgument, "properties need n >= 2");
  std::visit(overloaded {
                 [](const CardinalityProperty &c) {
                   if (c.y < 1)
                     throw Error(ErrorCode::kInvalidArgument,
                                 "cardinality needs Y >= 1");
                 },
                 [&](const IsoscelesProperty &p) { require_simplex_dimension(p.m, n_); },
                 [&](const RegularProperty &p) { require_simplex_dimension(p.m, n_); },
                 [&](const RightProperty &p) { require_simplex_dimension(p.m, n_); },
                 [&](const VolumeProperty &p) { require_simplex_dimension(p.m, n_); },
                 [&](const EdgeLengthsProperty &p) {
                   if (p.k < 1 || p.k > edge_count())
                     throw Error(ErrorCode::kInvalidArgument,
                                 "edge-length count needs 1 <= k <= N = "
                                     + std::to_string(edge_count()));
                 },
             },
             spec_);
}

std::string_view Property::kind() const {
  return std::visit(overloaded {
                        [](const CardinalityProperty &) { return "cardinality"; },
                        [](const IsoscelesProperty &) { return "isosceles"; },
                        [](const RegularProperty &) { return "regular"; },
                        [](const RightProperty &) { return "right"; },
                        [](const VolumeProperty &) { return "volume"; },
                        [](const EdgeLengthsProperty &) { return "edge_lengths"; },
                    },
                    spec_);
}

Index Property::witness_size() const {
  return std::visit(overloaded {
                        [](const CardinalityProperty &c) { return c.y; },
                        [](const IsoscelesProperty &p) { return p.m + 1; },
                        [](const RegularProperty &p) { return p.m + 1; },
                        [](const RightProperty &p) { return p.m + 1; },
                        [](const VolumeProperty &p) { return p.m + 1; },
                        [&](const EdgeLengthsProperty &) { return n_ + 1; },
                    },
                    spec_);
}

const std::vector<RealizedLengths> &enumerate_feasible(
    std::span<const Rational> lengths, Index n) {
  if (n != 2 && n != 3)
    throw Error(ErrorCode::kUnsupportedDimension,
                "edge-length enumeration supports n in {2, 3}");
  std::vector<Rational> values(lengths.begin(), lengths.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() > kMaxPrefix)
    throw Error(ErrorCode::kPrefixTooLarge,
                "at most " + std::to_string(kMaxPrefix)
                    + " lengths can be enumerated, got "
                    + std::to_string(values.size()));
  for (const auto &v: values)
    if (v <= 0)
      throw Error(ErrorCode::kInvalidArgument, "lengths must be positive");

  static std::mutex mutex;
  static std::map<std::string, std::vector<RealizedLengths>> memo;
  std::string key = std::to_string(n);
  for (const auto &v: values)
    key += ":" + format_rational(v);
  const std::lock_guard<std::mutex> lock(mutex);
  if (auto it = memo.find(key); it != memo.end())
    return it->second;

  const auto edges = static_cast<std::size_t>(n * (n + 1) / 2);
  std::vector<RealizedLengths> out;
  std::vector<std::size_t> digit(edges, 0);
  for (bool more = !values.empty(); more;) {
    std::vector<Rational> h(edges);
    for (std::size_t e = 0; e < edges; ++e)
      h[e] = values[digit[e]];
    EdgeLengthFunction<Rational> fn(n, std::move(h));
    if (feasible(fn)) {
      Rational r2 = circumradius_squared(fn);
      out.push_back({std::move(fn), std::move(r2)});
    }
    std::size_t e = edges;
    while (e > 0 && ++digit[e - 1] == values.size())
      digit[--e] = 0;
    more = e > 0;
  }
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

std::optional<std::vector<Eigen::VectorXd>> witness_template(
    const Property &prop, const Sphere &sphere, std::uint64_t seed,
    Tolerance tol) {
  if (sphere.ambient_dimension() != prop.n())
    throw Error(ErrorCode::kInvalidArgument, "sphere dimension mismatch");
  Rng rng(seed);
  const SubSphere full = SubSphere::from(sphere);
  const double big_r = sphere.radius();
  const Index n = prop.n();
  const auto random_pole = [&] { return random_point(full, rng); };
  const auto full_cap = [&](Eigen::VectorXd pole) {
    return Cap(full, std::move(pole),
               std::min(big_r * std::sqrt(2.0), 2 * big_r));
  };

  using Points = std::optional<std::vector<Eigen::VectorXd>>;
  return std::visit(
      overloaded {
          [&](const CardinalityProperty &c) -> Points {
            return sample_uniform(sphere, static_cast<std::size_t>(c.y),
                                  rng());
          },
          [&](const RegularProperty &p) -> Points {
            const SubSphere flat(sphere.center(), big_r,
                                 random_subflat(full, p.m, rng));
            return vertices_of(inscribed_regular(flat, rng()));
          },
          [&](const RightProperty &p) -> Points {
            const SubSphere flat(sphere.center(), big_r,
                                 random_subflat(full, p.m, rng));
            return vertices_of(right_simplex_inscribed(flat, rng));
          },
          [&](const IsoscelesProperty &p) -> Points {
            const Eigen::VectorXd pole = random_pole();
            const double t = 2 * big_r * uniform(rng, 0.05, 0.95);
            const SubSphere ring = ring_around_pole(full, pole, t, p.m - 1, rng);
            std::vector<Eigen::VectorXd> out {pole};
            for (auto &x: vertices_of(inscribed_regular(ring, rng())))
              out.push_back(std::move(x));
            return out;
          },
          [&](const VolumeProperty &p) -> Points {
            const Cap cap = full_cap(random_pole());
            const std::uint64_t orient = rng();
            const double limit = volume_witness_limit(cap, p.m, orient);
            const auto target = p.values.sample_below(limit, rng, tol);
            if (!target)
              return std::nullopt;
            return vertices_of(volume_witness(cap, p.m, *target, orient).simplex);
          },
          [&](const EdgeLengthsProperty &p) -> Points {
            const auto members = p.lengths.finite_members();
            const bool enumerable = small_finite(p.lengths, n);
            if (p.k < prop.edge_count()) {
              try {
                return vertices_of(
                    chain_construction(full_cap(random_pole()), p.lengths, rng(),
                                       tol));
              } catch (const Error &e) {
                if (e.code() != ErrorCode::kNoSmallLength || !enumerable)
                  return std::nullopt;
              }
              return all_edges_by_enumeration(*members, sphere, n, rng, tol);
            }
            if (enumerable)
              return all_edges_by_enumeration(*members, sphere, n, rng, tol);
            const auto r = solve_all_edges(p.lengths, big_r, n,
                                           big_r * std::sqrt(2.0), tol);
            if (!r)
              return std::nullopt;
            return all_edges_at_pole(full, random_pole(), *r, rng());
          },
      },
      prop.spec());
}

std::optional<std::vector<Eigen::VectorXd>> cap_witness(const Property &prop,
                                                        const Cap &cap,
                                                        std::uint64_t seed,
                                                        Tolerance tol) {
  const Index n = prop.n();
  if (cap.sphere().flat_dimension() != n)
    throw Error(ErrorCode::kInvalidArgument,
                "cap must lie on a full sphere of R^n");
  Rng rng(seed);
  const double room = std::min(cap.euclid_radius(),
                               2 * cap.sphere().radius() * (1 - 1e-9));
  const Eigen::VectorXd &pole = cap.pole();

  using Points = std::optional<std::vector<Eigen::VectorXd>>;
  return std::visit(
      overloaded {
          [&](const CardinalityProperty &c) -> Points {
            std::vector<Eigen::VectorXd> out;
            for (Index i = 0; i < c.y; ++i) {
              const double t = room * static_cast<double>(i + 1)
                               / static_cast<double>(c.y + 1);
              out.push_back(random_point(
                  ring_around_pole(cap.sphere(), pole, t, n - 1, rng), rng));
            }
            return out;
          },
          [&](const IsoscelesProperty &p) -> Points {
            const SubSphere ring =
                ring_around_pole(cap.sphere(), pole, room / 2, p.m - 1, rng);
            std::vector<Eigen::VectorXd> out {pole};
            for (auto &x: vertices_of(inscribed_regular(ring, rng())))
              out.push_back(std::move(x));
            return out;
          },
          [&](const RegularProperty &p) -> Points {
            if (p.m == n)
              return std::nullopt;
            return vertices_of(inscribed_regular(
                ring_around_pole(cap.sphere(), pole, room / 2, p.m, rng), rng()));
          },
          [&](const RightProperty &p) -> Points {
            if (p.m < n)
              return vertices_of(right_simplex_inscribed(
                  ring_around_pole(cap.sphere(), pole, room / 2, p.m, rng), rng));
            if (n < 3)
              return std::nullopt;
            SimplexD s = right_simplex_at_pole(cap.sphere(), pole);
            for (Index i = 0; i < s.vertex_count(); ++i)
              if (!cap.contains(s.vertex(i)))
                return std::nullopt;
            return vertices_of(s);
          },
          [&](const VolumeProperty &p) -> Points {
            const std::uint64_t orient = rng();
            const double limit = volume_witness_limit(cap, p.m, orient);
            const auto target = p.values.sample_below(limit, rng, tol);
            if (!target)
              return std::nullopt;
            return vertices_of(volume_witness(cap, p.m, *target, orient).simplex);
          },
          [&](const EdgeLengthsProperty &p) -> Points {
            if (p.k < prop.edge_count()) {
              try {
                return vertices_of(chain_construction(cap, p.lengths, rng(), tol));
              } catch (const Error &e) {
                if (e.code() == ErrorCode::kNoSmallLength)
                  return std::nullopt;
                throw;
              }
            }
            const auto r = solve_all_edges(p.lengths, cap.sphere().radius(), n,
                                           room, tol);
            if (!r)
              return std::nullopt;
            return all_edges_at_pole(cap.sphere(), pole, *r, rng());
          },
      },
      prop.spec());
}

std::optional<double> uniform_cap_delta(const Property &prop) {
  const Index n = prop.n();
  return std::visit(
      overloaded {
          [](const CardinalityProperty &) -> std::optional<double> { return kCapDelta; },
          [](const IsoscelesProperty &) -> std::optional<double> { return kCapDelta; },
          [&](const RegularProperty &p) -> std::optional<double> {
            if (p.m == n)
              return std::nullopt;
            return kCapDelta;
          },
          [&](const RightProperty &p) -> std::optional<double> {
            if (p.m < n)
              return kCapDelta;
            if (n < 3)
              return std::nullopt;
            return kRightCapDelta;
          },
          [](const VolumeProperty &p) -> std::optional<double> {
            if (p.values.has_arbitrarily_small())
              return kCapDelta;
            return std::nullopt;
          },
          [&](const EdgeLengthsProperty &p) -> std::optional<double> {
            const bool small = p.k < prop.edge_count()
                                   ? p.lengths.has_arbitrarily_small()
                                   : p.lengths.comeager_near_zero();
            if (small)
              return kCapDelta;
            return std::nullopt;
          },
      },
      prop.spec());
}

}  // namespace hsforce
