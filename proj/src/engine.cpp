//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "hsforce/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "hsforce/overloaded.hpp"
#include "hsforce/sphere_ops.hpp"

namespace hsforce {
namespace {
  constexpr int kMaxSphereAttempts = 1000;

  bool center_admissible(const CenterSet &centers, const Eigen::VectorXd &c,
                         Tolerance tol) {
    return std::visit(
        overloaded {
            [](const AllCenters &) { return true; },
            [&](const BallUnionCenters &u) {
              return std::any_of(u.balls.begin(), u.balls.end(),
                                 [&](const Ball &b) {
                                   return (c - b.center).norm() < b.radius;
                                 });
            },
            [&](const FiniteCenters &f) {
              return std::any_of(f.points.begin(), f.points.end(),
                                 [&](const Eigen::VectorXd &p) {
                                   return (c - p).norm()
                                          <= tol.rel * (1 + p.norm());
                                 });
            },
        },
        centers);
  }

  Eigen::VectorXd sample_center(const CenterSet &centers, Index n, Rng &rng) {
    return std::visit(
        overloaded {
            [&](const AllCenters &a) {
              Eigen::VectorXd c(n);
              for (Index i = 0; i < n; ++i)
                c[i] = uniform(rng, -a.half_width, a.half_width);
              return c;
            },
            [&](const BallUnionCenters &u) {
              std::uniform_int_distribution<std::size_t> pick(
                  0, u.balls.size() - 1);
              const Ball &b = u.balls[pick(rng)];
              const double scale =
                  b.radius
                  * std::pow(uniform01(rng), 1.0 / static_cast<double>(n));
              return Eigen::VectorXd(b.center
                                     + scale * random_unit_vector(n, rng));
            },
            [&](const FiniteCenters &f) {
              std::uniform_int_distribution<std::size_t> pick(
                  0, f.points.size() - 1);
              return f.points[pick(rng)];
            },
        },
        centers);
  }

  bool color_allowed(const QCondition &q, Color c) {
    return !q.colors
           || std::find(q.colors->begin(), q.colors->end(), c)
                  != q.colors->end();
  }

  std::optional<Color> common_color(const Coloring &f,
                                    const std::vector<Eigen::VectorXd> &pts,
                                    Mode mode) {
    const Color first = color_of(f, pts.front(), mode);
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (color_of(f, pts[i], mode) != first)
        return std::nullopt;
    return first;
  }
}  // namespace

void validate(const QCondition &q) {
  const Index n = q.property.n();
  if (std::holds_alternative<AdmissibleSet::IntervalMinus>(
          q.radii.representation())
      && !(q.epsilon && *q.epsilon > 0))
    throw Error(ErrorCode::kInvalidArgument,
                "radii given as an interval minus a list need epsilon > 0");
  if (q.epsilon && !(*q.epsilon > 0))
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  if (q.colors && q.colors->empty())
    throw Error(ErrorCode::kInvalidArgument, "empty color space");
  std::visit(overloaded {
                 [](const AllCenters &a) {
                   if (!(a.half_width > 0))
                     throw Error(ErrorCode::kInvalidArgument,
                                 "sampling box must have positive width");
                 },
                 [&](const BallUnionCenters &u) {
                   if (u.balls.empty())
                     throw Error(ErrorCode::kInvalidArgument, "no center balls");
                   for (const auto &b: u.balls)
                     if (b.center.size() != n || !(b.radius > 0))
                       throw Error(ErrorCode::kInvalidArgument,
                                   "center balls need dimension n and r > 0");
                 },
                 [&](const FiniteCenters &f) {
                   if (f.points.empty())
                     throw Error(ErrorCode::kInvalidArgument, "no centers");
                   for (const auto &p: f.points)
                     if (p.size() != n)
                       throw Error(ErrorCode::kInvalidArgument,
                                   "center dimension mismatch");
                 },
             },
             q.centers);
}

bool admissible(const QCondition &q, const Sphere &s, Tolerance tol) {
  if (s.ambient_dimension() != q.property.n())
    return false;
  if (q.epsilon && !(s.radius() < *q.epsilon))
    return false;
  return center_admissible(q.centers, s.center(), tol)
         && q.radii.contains(s.radius(), tol);
}

bool admissible(const QCondition &q, const Vector<Rational> &center,
                const Rational &radius, Tolerance tol) {
  if (center.size() != q.property.n())
    return false;
  if (q.epsilon && !(to_double(radius) < *q.epsilon))
    return false;
  return center_admissible(q.centers, to_float(center), tol)
         && q.radii.contains(radius);
}

std::string_view outcome_name(const Verdict &v) {
  return std::visit(overloaded {
                        [](const HoldsVacuously &) { return "holds_vacuously"; },
                        [](const HoldsWithWitnesses &) {
                          return "holds_with_witnesses";
                        },
                        [](const Violation &) { return "violated"; },
                        [](const Inconclusive &) { return "inconclusive"; },
                    },
                    v);
}

Color color_of(const Coloring &f, const Eigen::VectorXd &x, Mode mode) {
  if (mode == Mode::kExact)
    return f(to_exact(x));
  return f(x);
}

Verdict check_sphere(const Coloring &f, const QCondition &q, const Sphere &s,
                     std::size_t budget, std::uint64_t seed, Mode mode,
                     Tolerance tol) {
  if (!admissible(q, s, tol))
    throw Error(ErrorCode::kNotAdmissible,
                "sphere of radius " + format_double(s.radius())
                    + " is not admissible");
  if (budget == 0)
    return Inconclusive {0};

  const Color center_color = color_of(f, s.center(), mode);
  std::size_t monochromatic = 0;
  for (std::size_t i = 0; i < budget; ++i) {
    auto pts = witness_template(q.property, s, mix_seed(seed, i), tol);
    if (!pts)
      break;  // no template at this radius
    const auto color = common_color(f, *pts, mode);
    if (!color || !color_allowed(q, *color))
      continue;
    if (!holds<double>(q.property, *pts, tol))
      continue;
    ++monochromatic;
    if (*color != center_color)
      return Violation {s, std::move(*pts), *color, center_color};
  }
  if (monochromatic == 0)
    return HoldsVacuously {};
  return HoldsWithWitnesses {monochromatic};
}

std::string validate_certificate(const Coloring &f, const QCondition &q,
                                 const Violation &v, Mode mode,
                                 Tolerance tol) {
  if (!admissible(q, v.sphere, tol))
    return "sphere is not admissible";
  if (v.witness.empty())
    return "empty witness";
  const double bound = 1e-9 * (1 + v.sphere.radius());
  for (const auto &p: v.witness)
    if (v.sphere.residual(p) > bound)
      return "witness point off the sphere";
  if (!holds<double>(q.property, v.witness, tol))
    return "witness lacks the property";
  for (const auto &p: v.witness)
    if (color_of(f, p, mode) != v.witness_color)
      return "witness is not monochromatic";
  if (!color_allowed(q, v.witness_color))
    return "witness color outside the color space";
  if (color_of(f, v.sphere.center(), mode) != v.center_color)
    return "center color mismatch";
  if (v.center_color == v.witness_color)
    return "center has the witness color";
  return {};
}

std::optional<Sphere> sample_admissible_sphere(const QCondition &q,
                                               std::uint64_t seed,
                                               std::size_t index,
                                               Tolerance tol) {
  Rng rng(mix_seed(seed, 2 * index));
  const Index n = q.property.n();
  const double bound =
      q.epsilon.value_or(std::numeric_limits<double>::infinity());
  for (int attempt = 0; attempt < kMaxSphereAttempts; ++attempt) {
    const auto r = q.radii.sample_below(bound, rng, tol);
    if (!r)
      return std::nullopt;
    Sphere s(sample_center(q.centers, n, rng), *r);
    if (admissible(q, s, tol))
      return s;
  }
  return std::nullopt;
}

SearchResult search(const Coloring &f, const QCondition &q,
                    const SearchOptions &options) {
  validate(q);
  std::vector<Sphere> spheres;
  spheres.reserve(options.spheres);
  for (std::size_t i = 0; i < options.spheres; ++i) {
    auto s = sample_admissible_sphere(q, options.seed, i, options.tol);
    if (!s)
      break;
    spheres.push_back(std::move(*s));
  }

  const std::size_t count = spheres.size();
  std::vector<std::optional<Verdict>> verdicts(count);
  std::atomic<std::size_t> next {0};
  std::atomic<std::size_t> first_violation {count};
  std::mutex error_mutex;
  std::exception_ptr error;

  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > first_violation.load())
        return;
      try {
        Verdict v = check_sphere(f, q, spheres[i], options.witnesses,
                                 mix_seed(options.seed, 2 * i + 1),
                                 options.mode, options.tol);
        if (std::holds_alternative<Violation>(v)) {
          std::size_t seen = first_violation.load();
          while (i < seen && !first_violation.compare_exchange_weak(seen, i)) { }
        }
        verdicts[i] = std::move(v);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error)
          error = std::current_exception();
        first_violation.store(0);
        return;
      }
    }
  };

  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
    for (auto &t: pool)
      t.join();
  }
  if (error)
    std::rethrow_exception(error);

  SearchResult result;
  result.sampled = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (!verdicts[i])
      break;
    result.verdicts.push_back({i, spheres[i], *verdicts[i]});
    if (const auto *v = std::get_if<Violation>(&*verdicts[i])) {
      result.certificate = *v;
      break;
    }
  }
  return result;
}

std::vector<ExcludedRadius> excluded_radii(std::span<const Rational> lengths,
                                           Index n) {
  std::vector<Rational> squares;
  for (const auto &cand: enumerate_feasible(lengths, n))
    squares.push_back(cand.circumradius_squared);
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  std::vector<ExcludedRadius> out;
  out.reserve(squares.size());
  for (auto &sq: squares)
    out.push_back({std::sqrt(to_double(sq)), std::move(sq)});
  return out;
}

std::vector<ExcludedRadius> excluded_radii(std::span<const double> lengths,
                                           Index n) {
  std::vector<Rational> exact;
  for (double x: lengths)
    exact.push_back(from_double<Rational>(x));
  return excluded_radii(std::span<const Rational>(exact), n);
}

// ---------------------------------------------------------------------------
// Propagation

namespace {
  template <Scalar T>
  void validate_config(const FiniteConfig<T> &cfg, Color x_colors) {
    if (cfg.colors.size() != cfg.points.size())
      throw Error(ErrorCode::kInvalidArgument,
                  "colors and points differ in length");
    if (x_colors < 1)
      throw Error(ErrorCode::kInvalidArgument, "need X >= 1 colors");
    for (const auto &c: cfg.colors)
      if (c && (*c < 1 || *c > x_colors))
        throw Error(ErrorCode::kInvalidArgument,
                    "color " + std::to_string(*c) + " outside {1.."
                        + std::to_string(x_colors) + "}");
    for (std::size_t i = 0; i < cfg.points.size(); ++i) {
      if (i > 0 && cfg.points[i].size() != cfg.points[0].size())
        throw Error(ErrorCode::kInvalidArgument, "mixed point dimensions");
      for (std::size_t j = 0; j < i; ++j)
        if (cfg.points[i] == cfg.points[j])
          throw Error(ErrorCode::kInvalidArgument,
                      "points " + std::to_string(j) + " and "
                          + std::to_string(i) + " coincide");
    }
  }

  template <Scalar T>
  bool same_distance(const T &a, const T &b, Tolerance tol) {
    if constexpr (ExactScalar<T>)
      return a == b;
    else
      return approx_equal(a, b, tol);
  }

  // All forcings of point p under the current coloring, one per
  // (sphere, color), in order of increasing radius then color.
  template <Scalar T>
  std::vector<ForcingCertificate<T>> forcings_at(
      const FiniteConfig<T> &cfg, Index p, Index y,
      const AdmissibleLengths &radii, Tolerance tol) {
    struct Entry {
      T d2;
      Index idx;
    };
    std::vector<Entry> entries;
    for (std::size_t j = 0; j < cfg.points.size(); ++j) {
      if (static_cast<Index>(j) == p || !cfg.colors[j])
        continue;
      entries.push_back(
          {T((cfg.points[j] - cfg.points[static_cast<std::size_t>(p)])
                 .squaredNorm()),
           static_cast<Index>(j)});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) {
      return a.d2 < b.d2 || (a.d2 == b.d2 && a.idx < b.idx);
    });

    std::vector<ForcingCertificate<T>> out;
    for (std::size_t lo = 0; lo < entries.size();) {
      std::size_t hi = lo + 1;
      while (hi < entries.size()
             && same_distance(entries[hi].d2, entries[lo].d2, tol))
        ++hi;
      if (radii.contains_sqrt(entries[lo].d2, tol)) {
        std::map<Color, std::vector<Index>> by_color;
        for (std::size_t k = lo; k < hi; ++k)
          by_color[*cfg.colors[static_cast<std::size_t>(entries[k].idx)]]
              .push_back(entries[k].idx);
        for (auto &[color, members]: by_color) {
          if (static_cast<Index>(members.size()) < y)
            continue;
          std::sort(members.begin(), members.end());
          members.resize(static_cast<std::size_t>(y));
          out.push_back({p, color, entries[lo].d2, members});
        }
      }
      lo = hi;
    }
    return out;
  }
}  // namespace

template <Scalar T>
PropagationResult<T> propagate(const FiniteConfig<T> &cfg, Color x_colors,
                               Index y, const AdmissibleLengths &radii,
                               Tolerance tol) {
  validate_config(cfg, x_colors);
  if (y < 1)
    throw Error(ErrorCode::kInvalidArgument, "need Y >= 1");
  PropagationResult<T> result;
  result.config = cfg;
  if (cfg.points.empty())
    return result;

  const auto count = static_cast<Index>(cfg.points.size());
  for (;;) {
    ++result.passes;
    FiniteConfig<T> &cur = result.config;
    std::vector<std::pair<Index, ForcingCertificate<T>>> updates;
    for (Index p = 0; p < count; ++p) {
      const auto forced = forcings_at(cur, p, y, radii, tol);
      if (forced.empty())
        continue;
      const auto &assigned = cur.colors[static_cast<std::size_t>(p)];
      for (const auto &cert: forced) {
        if (cert.color != forced.front().color) {
          result.contradiction =
              Contradiction<T> {p, forced.front(), cert, assigned};
          return result;
        }
      }
      if (assigned && *assigned != forced.front().color) {
        result.contradiction =
            Contradiction<T> {p, forced.front(), std::nullopt, assigned};
        return result;
      }
      if (!assigned)
        updates.emplace_back(p, forced.front());
    }
    if (updates.empty())
      return result;
    result.round_sizes.push_back(updates.size());
    for (auto &[p, cert]: updates) {
      cur.colors[static_cast<std::size_t>(p)] = cert.color;
      result.forced.push_back(std::move(cert));
    }
    ++result.rounds;
  }
}

template <Scalar T>
bool validate_forcing(const FiniteConfig<T> &cfg, Index y,
                      const AdmissibleLengths &radii,
                      const ForcingCertificate<T> &cert, Tolerance tol) {
  const auto n = static_cast<Index>(cfg.points.size());
  if (cert.center < 0 || cert.center >= n)
    return false;
  if (static_cast<Index>(cert.witnesses.size()) < y)
    return false;
  if (!radii.contains_sqrt(cert.radius_squared, tol))
    return false;
  std::vector<Index> seen;
  for (Index w: cert.witnesses) {
    if (w < 0 || w >= n || w == cert.center
        || std::find(seen.begin(), seen.end(), w) != seen.end())
      return false;
    seen.push_back(w);
    const auto &c = cfg.colors[static_cast<std::size_t>(w)];
    if (!c || *c != cert.color)
      return false;
    const T d2 = (cfg.points[static_cast<std::size_t>(w)]
                  - cfg.points[static_cast<std::size_t>(cert.center)])
                     .squaredNorm();
    if (!same_distance(d2, cert.radius_squared, tol))
      return false;
  }
  return true;
}

template <Scalar T>
bool validate_contradiction(const FiniteConfig<T> &cfg, Index y,
                            const AdmissibleLengths &radii,
                            const Contradiction<T> &c, Tolerance tol) {
  if (c.first.center != c.point
      || !validate_forcing(cfg, y, radii, c.first, tol))
    return false;
  if (c.second) {
    return c.second->center == c.point
           && validate_forcing(cfg, y, radii, *c.second, tol)
           && c.second->color != c.first.color;
  }
  return c.assigned && *c.assigned != c.first.color
         && cfg.colors[static_cast<std::size_t>(c.point)] == c.assigned;
}

#define HSFORCE_INSTANTIATE(T)                                                \
  template PropagationResult<T> propagate<T>(const FiniteConfig<T> &, Color,  \
                                             Index, const AdmissibleLengths &, \
                                             Tolerance);                      \
  template bool validate_forcing<T>(const FiniteConfig<T> &, Index,           \
                                    const AdmissibleLengths &,                \
                                    const ForcingCertificate<T> &, Tolerance); \
  template bool validate_contradiction<T>(const FiniteConfig<T> &, Index,     \
                                          const AdmissibleLengths &,          \
                                          const Contradiction<T> &, Tolerance);

HSFORCE_INSTANTIATE(double)
HSFORCE_INSTANTIATE(Rational)
#undef HSFORCE_INSTANTIATE

}  // namespace hsforce
