//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_ADMISSIBLE_HPP_
#define HSFORCE_ADMISSIBLE_HPP_

#include <optional>
#include <variant>
#include <vector>

#include "hsforce/random.hpp"
#include "hsforce/scalar.hpp"

namespace hsforce {

/// A subset of (0, inf) given by a finite description: admissible radii,
/// edge lengths or volumes. Membership is exact for rational queries and
/// tolerance-based for doubles.
class AdmissibleSet {
public:
  struct Interval {
    Rational lo;
    std::optional<Rational> hi;  // nullopt = +inf
    bool lo_closed = false;
    bool hi_closed = false;
  };
  struct Finite {
    std::vector<Rational> values;  // sorted, unique
  };
  /// Interval minus an explicit countable (here: finite) list; the
  /// operational stand-in for "comeager near 0".
  struct IntervalMinus {
    Interval range;
    std::vector<Rational> excluded;  // sorted, unique
  };
  struct Union {
    std::vector<Interval> parts;
  };
  /// {first * ratio^k : k >= 0}, 0 < ratio < 1: countable with inf 0.
  struct Geometric {
    Rational first;
    Rational ratio;
  };

  using Representation =
      std::variant<Interval, Finite, IntervalMinus, Union, Geometric>;

  explicit AdmissibleSet(Representation rep);

  static AdmissibleSet interval(Rational lo, std::optional<Rational> hi,
                                bool lo_closed = false,
                                bool hi_closed = false);
  static AdmissibleSet finite(std::vector<Rational> values);
  static AdmissibleSet interval_minus(Interval range,
                                      std::vector<Rational> excluded);
  static AdmissibleSet union_of(std::vector<Interval> parts);
  static AdmissibleSet geometric(Rational first, Rational ratio);

  const Representation &representation() const { return rep_; }

  bool contains(double x, Tolerance tol = {}) const;
  bool contains(const Rational &x) const;

  /// Membership of sqrt(sq); exact over the rationals by comparing squares.
  bool contains_squared(double sq, Tolerance tol = {}) const;
  bool contains_squared(const Rational &sq) const;

  template <Scalar T>
  bool contains_sqrt(const T &sq, Tolerance tol) const {
    if constexpr (ExactScalar<T>)
      return contains_squared(sq);
    else
      return contains_squared(sq, tol);
  }

  double inf() const;
  bool has_arbitrarily_small() const { return inf() == 0; }
  /// True for the encodable comeager-near-0 shapes: an interval (or union
  /// part) starting at 0, possibly minus a finite list.
  bool comeager_near_zero() const;
  bool discrete() const;

  /// A member strictly below `bound`: the largest one for discrete sets,
  /// the midpoint of the admissible part below `bound` otherwise.
  std::optional<double> member_below(double bound, Tolerance tol = {}) const;

  /// Random member in (0, bound).
  std::optional<double> sample_below(double bound, Rng &rng,
                                     Tolerance tol = {}) const;
  std::optional<double> sample(Rng &rng, Tolerance tol = {}) const;

  /// Members below `bound`, largest first, at most `limit` of them; empty
  /// for continuous representations.
  std::vector<double> enumerate_below(double bound, std::size_t limit) const;

  /// Exact member list for Finite sets.
  std::optional<std::vector<Rational>> finite_members() const;

private:
  Representation rep_;
};

using AdmissibleLengths = AdmissibleSet;
using AdmissibleValues = AdmissibleSet;

}  // namespace hsforce

#endif  // HSFORCE_ADMISSIBLE_HPP_
