//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_ENGINE_HPP_
#define HSFORCE_ENGINE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "hsforce/admissible.hpp"
#include "hsforce/coloring.hpp"
#include "hsforce/property.hpp"
#include "hsforce/sphere.hpp"

namespace hsforce {

/// Every point of R^n; spheres are sampled with centers in [-w, w]^n.
struct AllCenters {
  double half_width = 4;
};
struct Ball {
  Eigen::VectorXd center;
  double radius;  // open ball
};
struct BallUnionCenters {
  std::vector<Ball> balls;
};
struct FiniteCenters {
  std::vector<Eigen::VectorXd> points;
};
using CenterSet = std::variant<AllCenters, BallUnionCenters, FiniteCenters>;

/// If a sphere S_r(p) is admissible (p in centers, r in radii, r < epsilon
/// when set) and has a monochromatic subset of color c in `colors` with the
/// property, then f(p) = c.
struct QCondition {
  std::optional<std::vector<Color>> colors;  // nullopt: every color
  Property property;
  CenterSet centers = AllCenters {};
  AdmissibleLengths radii = AdmissibleLengths::interval(0, Rational(1));
  std::optional<double> epsilon;
};

/// Throws kInvalidArgument when the condition's invariants fail.
void validate(const QCondition &q);

bool admissible(const QCondition &q, const Sphere &s, Tolerance tol = {});
/// Exact radius membership; centers are compared in double.
bool admissible(const QCondition &q, const Vector<Rational> &center,
                const Rational &radius, Tolerance tol = {});

struct HoldsVacuously { };
struct HoldsWithWitnesses {
  std::size_t count;
};
struct Violation {
  Sphere sphere;
  std::vector<Eigen::VectorXd> witness;
  Color witness_color;
  Color center_color;
};
struct Inconclusive {
  std::size_t budget;
};
using Verdict =
    std::variant<HoldsVacuously, HoldsWithWitnesses, Violation, Inconclusive>;

std::string_view outcome_name(const Verdict &v);

/// Colors are evaluated on exact conversions of the points in kExact mode.
Color color_of(const Coloring &f, const Eigen::VectorXd &x, Mode mode);

/// Draws up to `budget` witness templates on s and compares monochromatic
/// ones against the center's color. Throws kNotAdmissible.
Verdict check_sphere(const Coloring &f, const QCondition &q, const Sphere &s,
                     std::size_t budget, std::uint64_t seed,
                     Mode mode = Mode::kFloat, Tolerance tol = {});

/// Re-checks a violation from raw data: admissibility, on-sphere residuals
/// within 1e-9 (1 + r), the property, monochromaticity and the color
/// mismatch. Returns an empty string when valid, else the first failure.
std::string validate_certificate(const Coloring &f, const QCondition &q,
                                 const Violation &v, Mode mode = Mode::kFloat,
                                 Tolerance tol = {});

struct SearchOptions {
  std::size_t spheres = 1000;
  std::size_t witnesses = 100;
  std::uint64_t seed = 0;
  Mode mode = Mode::kFloat;
  unsigned threads = 0;  // 0: hardware concurrency
  Tolerance tol;
};

struct SphereVerdict {
  std::size_t index;
  Sphere sphere;
  Verdict verdict;
};

struct SearchResult {
  /// Verdicts in sphere order, up to and including the first violation.
  std::vector<SphereVerdict> verdicts;
  std::optional<Violation> certificate;
  /// Number of spheres sampled; smaller than the budget only when the
  /// admissible set could not be sampled.
  std::size_t sampled = 0;
};

/// Admissible sphere number `index` of the search with this seed.
std::optional<Sphere> sample_admissible_sphere(const QCondition &q,
                                               std::uint64_t seed,
                                               std::size_t index,
                                               Tolerance tol = {});

/// Samples admissible spheres and checks each; the first violation by
/// sphere index wins, independent of thread scheduling.
SearchResult search(const Coloring &f, const QCondition &q,
                    const SearchOptions &options);

inline std::optional<Violation> falsify(const Coloring &f, const QCondition &q,
                                        const SearchOptions &options) {
  return search(f, q, options).certificate;
}

struct ExcludedRadius {
  double radius;
  Rational radius_squared;
};

/// Circumradii of all realizations of feasible E_n -> S, sorted and
/// deduplicated. n in {2, 3}, |S| <= 8 (kPrefixTooLarge).
std::vector<ExcludedRadius> excluded_radii(std::span<const Rational> lengths,
                                           Index n);
std::vector<ExcludedRadius> excluded_radii(std::span<const double> lengths,
                                           Index n);

template <Scalar T>
struct FiniteConfig {
  std::vector<Vector<T>> points;
  std::vector<std::optional<Color>> colors;
};

/// Y same-colored points on a sphere about `center`.
template <Scalar T>
struct ForcingCertificate {
  Index center;
  Color color;
  T radius_squared;
  std::vector<Index> witnesses;
};

template <Scalar T>
struct Contradiction {
  Index point;
  ForcingCertificate<T> first;
  /// A second forcing of another color, or nullopt when `first` conflicts
  /// with the color already assigned to `point`.
  std::optional<ForcingCertificate<T>> second;
  std::optional<Color> assigned;
};

template <Scalar T>
struct PropagationResult {
  FiniteConfig<T> config;
  std::size_t rounds = 0;  // rounds that colored at least one point
  std::size_t passes = 0;  // all rounds, including the final fixpoint check
  std::vector<ForcingCertificate<T>> forced;
  std::vector<std::size_t> round_sizes;  // forcings applied per round
  std::optional<Contradiction<T>> contradiction;
};

/// Synchronous forcing rounds: a point with at least Y points of one color
/// on an admissible sphere about it is forced to that color. Colors live in
/// {1..X}.
template <Scalar T>
PropagationResult<T> propagate(const FiniteConfig<T> &cfg, Color x_colors,
                               Index y, const AdmissibleLengths &radii,
                               Tolerance tol = {});

/// Re-checks one forcing certificate against a configuration.
template <Scalar T>
bool validate_forcing(const FiniteConfig<T> &cfg, Index y,
                      const AdmissibleLengths &radii,
                      const ForcingCertificate<T> &cert, Tolerance tol = {});

template <Scalar T>
bool validate_contradiction(const FiniteConfig<T> &cfg, Index y,
                            const AdmissibleLengths &radii,
                            const Contradiction<T> &c, Tolerance tol = {});

}  // namespace hsforce

#endif  // HSFORCE_ENGINE_HPP_
