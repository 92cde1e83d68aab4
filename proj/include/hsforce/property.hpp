//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_PROPERTY_HPP_
#define HSFORCE_PROPERTY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hsforce/admissible.hpp"
#include "hsforce/edge_length_function.hpp"
#include "hsforce/overloaded.hpp"
#include "hsforce/simplex.hpp"
#include "hsforce/sphere.hpp"

namespace hsforce {

struct CardinalityProperty {
  Index y = 1;
};
struct IsoscelesProperty {
  Index m = 2;
};
struct RegularProperty {
  Index m = 2;
};
struct RightProperty {
  Index m = 2;
};
struct VolumeProperty {
  Index m = 2;
  AdmissibleValues values;
};
/// At least k of the N = binom(n+1, 2) edges of an n-simplex lie in S.
struct EdgeLengthsProperty {
  Index k = 1;
  AdmissibleLengths lengths;
};

class Property {
public:
  using Spec =
      std::variant<CardinalityProperty, IsoscelesProperty, RegularProperty,
                   RightProperty, VolumeProperty, EdgeLengthsProperty>;

  Property(Index n, Spec spec);

  Index n() const { return n_; }
  const Spec &spec() const { return spec_; }
  std::string_view kind() const;
  /// Number of points in a minimal witness.
  Index witness_size() const;
  /// N = binom(n+1, 2).
  Index edge_count() const { return n_ * (n_ + 1) / 2; }

private:
  Index n_;
  Spec spec_;
};

inline constexpr std::size_t kMaxExhaustivePoints = 12;

namespace internal {
  template <Scalar T>
  bool subset_has(const Property &prop, const Matrix<T> &v, Tolerance tol);

  // Calls visit(indices) for each size-k subset in lexicographic order until
  // it returns true.
  template <class Visit>
  bool for_each_subset(std::size_t count, std::size_t k, Visit &&visit) {
    if (k > count)
      return false;
    std::vector<Index> idx(k);
    for (std::size_t i = 0; i < k; ++i)
      idx[i] = static_cast<Index>(i);
    for (;;) {
      if (visit(idx))
        return true;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == static_cast<Index>(count - k + i - 1))
        --i;
      if (i == 0)
        return false;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j)
        idx[j] = idx[j - 1] + 1;
    }
  }
}  // namespace internal

/// Witness subset (indices into pts, ascending) when the finite set has
/// the property. Exhaustive over subsets; throws kTooManyPoints for more
/// than 12 points on simplex kinds.
template <Scalar T>
std::optional<std::vector<Index>> holds(const Property &prop,
                                        std::span<const Vector<T>> pts,
                                        Tolerance tol = {}) {
  for (const auto &p: pts)
    if (p.size() != prop.n())
      throw Error(ErrorCode::kInvalidArgument, "point dimension mismatch");

  if (const auto *c = std::get_if<CardinalityProperty>(&prop.spec())) {
    // Count distinct points.
    std::vector<Index> distinct;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      bool fresh = true;
      for (Index j: distinct)
        fresh = fresh && pts[i] != pts[static_cast<std::size_t>(j)];
      if (fresh)
        distinct.push_back(static_cast<Index>(i));
      if (static_cast<Index>(distinct.size()) >= c->y)
        return distinct;
    }
    return std::nullopt;
  }

  if (pts.size() > kMaxExhaustivePoints)
    throw Error(ErrorCode::kTooManyPoints,
                "exhaustive search is capped at "
                    + std::to_string(kMaxExhaustivePoints) + " points, got "
                    + std::to_string(pts.size()));
  const auto k = static_cast<std::size_t>(prop.witness_size());
  std::vector<Index> found;
  const bool ok =
      internal::for_each_subset(pts.size(), k, [&](const std::vector<Index> &idx) {
        Matrix<T> v(prop.n(), static_cast<Index>(k));
        for (std::size_t i = 0; i < k; ++i)
          v.col(static_cast<Index>(i)) = pts[static_cast<std::size_t>(idx[i])];
        if (!affinely_independent<T>(v, tol))
          return false;
        if (!internal::subset_has<T>(prop, v, tol))
          return false;
        found = idx;
        return true;
      });
  if (!ok)
    return std::nullopt;
  return found;
}

template <Scalar T>
bool internal::subset_has(const Property &prop, const Matrix<T> &v,
                          Tolerance tol) {
  const Simplex<T> s(v, tol);
  return std::visit(
      overloaded {
          [](const CardinalityProperty &) { return true; },
          [&](const IsoscelesProperty &) { return is_isosceles(s, tol).has_value(); },
          [&](const RegularProperty &) { return is_regular(s, tol); },
          [&](const RightProperty &) { return is_right(s, tol).has_value(); },
          [&](const VolumeProperty &p) {
            return p.values.contains_sqrt(cm_volume_squared(s), tol);
          },
          [&](const EdgeLengthsProperty &p) {
            Index hits = 0;
            for (Index i = 0; i < s.vertex_count(); ++i)
              for (Index j = i + 1; j < s.vertex_count(); ++j)
                hits += p.lengths.contains_sqrt(s.squared_distance(i, j), tol);
            return hits >= p.k;
          },
      },
      prop.spec());
}

/// A feasible edge-length function over a finite length set together with
/// the exact squared circumradius of its realization.
struct RealizedLengths {
  EdgeLengthFunction<Rational> h;
  Rational circumradius_squared;
};

/// All feasible functions E_n -> S in lexicographic order. n in {2, 3} and
/// |S| <= 8, else kPrefixTooLarge / kUnsupportedDimension. Memoized.
const std::vector<RealizedLengths> &enumerate_feasible(
    std::span<const Rational> lengths, Index n);

/// Points on the sphere with the property, or nullopt when no template is
/// available at this radius. Deterministic per seed.
std::optional<std::vector<Eigen::VectorXd>> witness_template(
    const Property &prop, const Sphere &sphere, std::uint64_t seed,
    Tolerance tol = {});

/// A witness inside the cap, when the catalog has a cap construction.
std::optional<std::vector<Eigen::VectorXd>> cap_witness(const Property &prop,
                                                        const Cap &cap,
                                                        std::uint64_t seed,
                                                        Tolerance tol = {});

/// delta for which every cap of Euclidean radius delta r sqrt(2) on every
/// sphere of radius r contains a witness, or nullopt when the property is
/// not uniform-cap in this catalog.
std::optional<double> uniform_cap_delta(const Property &prop);

}  // namespace hsforce

#endif  // HSFORCE_PROPERTY_HPP_
