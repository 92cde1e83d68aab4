//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "hsforce/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hsforce/error.hpp"
#include "hsforce/overloaded.hpp"

namespace hsforce {
namespace {
  constexpr int kGeometricScan = 4096;
  constexpr int kMaxResample = 1000;

  using Interval = AdmissibleSet::Interval;

  void validate(const Interval &iv) {
    if (iv.lo < 0)
      throw Error(ErrorCode::kInvalidArgument,
                  "admissible values live in (0, inf)");
    if (iv.hi) {
      const bool empty = *iv.hi < iv.lo
                         || (*iv.hi == iv.lo && !(iv.lo_closed && iv.hi_closed));
      if (empty)
        throw Error(ErrorCode::kInvalidArgument, "empty interval");
    }
    if (iv.lo == 0 && iv.lo_closed)
      throw Error(ErrorCode::kInvalidArgument,
                  "0 is never admissible; use an open lower bound");
  }

  void normalize(std::vector<Rational> &values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
  }

  double hi_or_inf(const Interval &iv) {
    return iv.hi ? to_double(*iv.hi) : std::numeric_limits<double>::infinity();
  }

  bool in_interval(const Interval &iv, double x) {
    const double lo = to_double(iv.lo);
    const double hi = hi_or_inf(iv);
    const bool above = iv.lo_closed ? x >= lo : x > lo;
    const bool below = iv.hi_closed ? x <= hi : x < hi;
    return above && below;
  }

  // Membership of sqrt(sq) for sq > 0, all bounds being nonnegative.
  bool in_interval_squared(const Interval &iv, const Rational &sq) {
    const Rational lo2 = iv.lo * iv.lo;
    const bool above = iv.lo_closed ? sq >= lo2 : sq > lo2;
    if (!above)
      return false;
    if (!iv.hi)
      return true;
    const Rational hi2 = *iv.hi * *iv.hi;
    return iv.hi_closed ? sq <= hi2 : sq < hi2;
  }

  bool near_any(const std::vector<Rational> &values, double x,
                Tolerance tol) {
    return std::any_of(values.begin(), values.end(), [&](const Rational &v) {
      return approx_equal(to_double(v), x, tol);
    });
  }

  // Open range (lo, hi) of doubles covered by the interval below `bound`.
  std::optional<std::pair<double, double>> range_below(const Interval &iv,
                                                       double bound) {
    const double lo = std::max(0.0, to_double(iv.lo));
    const double hi = std::min(hi_or_inf(iv), bound);
    if (!(hi > lo))
      return std::nullopt;
    return std::make_pair(lo, hi);
  }

  double sample_range(double lo, double hi, Rng &rng) {
    if (std::isinf(hi))
      return lo + std::exponential_distribution<double>(1.0)(rng);
    double x = uniform(rng, lo, hi);
    // Keep open endpoints excluded.
    for (int i = 0; i < kMaxResample && (x <= lo || x >= hi); ++i)
      x = uniform(rng, lo, hi);
    return x;
  }

  std::optional<double> sample_interval_below(const Interval &iv,
                                              double bound, Rng &rng) {
    auto range = range_below(iv, bound);
    if (!range)
      return std::nullopt;
    return sample_range(range->first, range->second, rng);
  }

  std::optional<double> midpoint_below(const Interval &iv, double bound) {
    auto range = range_below(iv, bound);
    if (!range)
      return std::nullopt;
    if (std::isinf(range->second))
      return range->first + 1.0;
    return 0.5 * (range->first + range->second);
  }

  // Smallest k with first * ratio^k < bound.
  std::optional<Rational> geometric_first_below(
      const AdmissibleSet::Geometric &g, double bound) {
    if (!(bound > 0))
      return std::nullopt;
    Rational v = g.first;
    for (int k = 0; k < kGeometricScan; ++k) {
      if (to_double(v) < bound)
        return v;
      v *= g.ratio;
    }
    return std::nullopt;
  }
}  // namespace

AdmissibleSet::AdmissibleSet(Representation rep): rep_(std::move(rep)) {
  std::visit(
      overloaded {
          [](Interval &iv) { validate(iv); },
          [](Finite &f) {
            if (f.values.empty())
              throw Error(ErrorCode::kInvalidArgument, "empty finite set");
            normalize(f.values);
            if (f.values.front() <= 0)
              throw Error(ErrorCode::kInvalidArgument,
                          "admissible values must be positive");
          },
          [](IntervalMinus &im) {
            validate(im.range);
            normalize(im.excluded);
          },
          [](Union &u) {
            if (u.parts.empty())
              throw Error(ErrorCode::kInvalidArgument, "empty union");
            for (const auto &p: u.parts)
              validate(p);
          },
          [](Geometric &g) {
            if (g.first <= 0 || g.ratio <= 0 || g.ratio >= 1)
              throw Error(ErrorCode::kInvalidArgument,
                          "geometric set needs first > 0 and 0 < ratio < 1");
          },
      },
      rep_);
}

AdmissibleSet AdmissibleSet::interval(Rational lo, std::optional<Rational> hi,
                                      bool lo_closed, bool hi_closed) {
  return AdmissibleSet(
      Interval {std::move(lo), std::move(hi), lo_closed, hi_closed});
}

AdmissibleSet AdmissibleSet::finite(std::vector<Rational> values) {
  return AdmissibleSet(Finite {std::move(values)});
}

AdmissibleSet AdmissibleSet::interval_minus(Interval range,
                                            std::vector<Rational> excluded) {
  return AdmissibleSet(IntervalMinus {std::move(range), std::move(excluded)});
}

AdmissibleSet AdmissibleSet::union_of(std::vector<Interval> parts) {
  return AdmissibleSet(Union {std::move(parts)});
}

AdmissibleSet AdmissibleSet::geometric(Rational first, Rational ratio) {
  return AdmissibleSet(Geometric {std::move(first), std::move(ratio)});
}

bool AdmissibleSet::contains(double x, Tolerance tol) const {
  if (!(x > 0))
    return false;
  return std::visit(
      overloaded {
          [&](const Interval &iv) { return in_interval(iv, x); },
          [&](const Finite &f) { return near_any(f.values, x, tol); },
          [&](const IntervalMinus &im) {
            return in_interval(im.range, x) && !near_any(im.excluded, x, tol);
          },
          [&](const Union &u) {
            return std::any_of(u.parts.begin(), u.parts.end(),
                               [&](const Interval &p) {
                                 return in_interval(p, x);
                               });
          },
          [&](const Geometric &g) {
            const double first = to_double(g.first);
            const double ratio = to_double(g.ratio);
            const double k = std::round(std::log(x / first) / std::log(ratio));
            for (double kk = k - 1; kk <= k + 1; kk += 1) {
              if (kk >= 0
                  && approx_equal(first * std::pow(ratio, kk), x, tol))
                return true;
            }
            return false;
          },
      },
      rep_);
}

bool AdmissibleSet::contains(const Rational &x) const {
  if (x <= 0)
    return false;
  return contains_squared(Rational(x * x));
}

bool AdmissibleSet::contains_squared(double sq, Tolerance tol) const {
  return sq > 0 && contains(std::sqrt(sq), tol);
}

bool AdmissibleSet::contains_squared(const Rational &sq) const {
  if (sq <= 0)
    return false;
  auto equal_sq = [&](const Rational &v) { return v * v == sq; };
  return std::visit(
      overloaded {
          [&](const Interval &iv) { return in_interval_squared(iv, sq); },
          [&](const Finite &f) {
            return std::any_of(f.values.begin(), f.values.end(), equal_sq);
          },
          [&](const IntervalMinus &im) {
            return in_interval_squared(im.range, sq)
                   && std::none_of(im.excluded.begin(), im.excluded.end(),
                                   equal_sq);
          },
          [&](const Union &u) {
            return std::any_of(u.parts.begin(), u.parts.end(),
                               [&](const Interval &p) {
                                 return in_interval_squared(p, sq);
                               });
          },
          [&](const Geometric &g) {
            Rational v = g.first;
            for (int k = 0; k < kGeometricScan; ++k) {
              const Rational v2 = v * v;
              if (v2 == sq)
                return true;
              if (v2 < sq)
                return false;
              v *= g.ratio;
            }
            return false;
          },
      },
      rep_);
}

double AdmissibleSet::inf() const {
  return std::visit(
      overloaded {
          [](const Interval &iv) { return to_double(iv.lo); },
          [](const Finite &f) { return to_double(f.values.front()); },
          [](const IntervalMinus &im) { return to_double(im.range.lo); },
          [](const Union &u) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto &p: u.parts)
              best = std::min(best, to_double(p.lo));
            return best;
          },
          [](const Geometric &) { return 0.0; },
      },
      rep_);
}

bool AdmissibleSet::comeager_near_zero() const {
  return std::visit(
      overloaded {
          [](const Interval &iv) { return iv.lo == 0; },
          [](const Finite &) { return false; },
          [](const IntervalMinus &im) { return im.range.lo == 0; },
          [](const Union &u) {
            return std::any_of(u.parts.begin(), u.parts.end(),
                               [](const Interval &p) { return p.lo == 0; });
          },
          [](const Geometric &) { return false; },
      },
      rep_);
}

bool AdmissibleSet::discrete() const {
  return std::holds_alternative<Finite>(rep_)
         || std::holds_alternative<Geometric>(rep_);
}

std::optional<double> AdmissibleSet::member_below(double bound,
                                                  Tolerance tol) const {
  return std::visit(
      overloaded {
          [&](const Interval &iv) { return midpoint_below(iv, bound); },
          [&](const Finite &f) -> std::optional<double> {
            for (auto it = f.values.rbegin(); it != f.values.rend(); ++it)
              if (to_double(*it) < bound)
                return to_double(*it);
            return std::nullopt;
          },
          [&](const IntervalMinus &im) -> std::optional<double> {
            auto mid = midpoint_below(im.range, bound);
            if (!mid)
              return std::nullopt;
            // Walk towards the lower end until clear of the excluded list.
            auto range = range_below(im.range, bound);
            double x = *mid;
            for (int i = 0; i < 64 && near_any(im.excluded, x, tol); ++i)
              x = 0.5 * (range->first + x);
            if (near_any(im.excluded, x, tol))
              return std::nullopt;
            return x;
          },
          [&](const Union &u) -> std::optional<double> {
            std::optional<double> best;
            for (const auto &p: u.parts) {
              auto m = midpoint_below(p, bound);
              if (m && (!best || *m > *best))
                best = m;
            }
            return best;
          },
          [&](const Geometric &g) -> std::optional<double> {
            auto v = geometric_first_below(g, bound);
            if (!v)
              return std::nullopt;
            return to_double(*v);
          },
      },
      rep_);
}

std::optional<double> AdmissibleSet::sample_below(double bound, Rng &rng,
                                                  Tolerance tol) const {
  return std::visit(
      overloaded {
          [&](const Interval &iv) {
            return sample_interval_below(iv, bound, rng);
          },
          [&](const Finite &f) -> std::optional<double> {
            std::vector<double> members;
            for (const auto &v: f.values)
              if (to_double(v) < bound)
                members.push_back(to_double(v));
            if (members.empty())
              return std::nullopt;
            std::uniform_int_distribution<std::size_t> pick(
                0, members.size() - 1);
            return members[pick(rng)];
          },
          [&](const IntervalMinus &im) -> std::optional<double> {
            for (int i = 0; i < kMaxResample; ++i) {
              auto x = sample_interval_below(im.range, bound, rng);
              if (!x)
                return std::nullopt;
              if (!near_any(im.excluded, *x, tol))
                return x;
            }
            return std::nullopt;
          },
          [&](const Union &u) -> std::optional<double> {
            std::vector<const Interval *> live;
            for (const auto &p: u.parts)
              if (range_below(p, bound))
                live.push_back(&p);
            if (live.empty())
              return std::nullopt;
            std::uniform_int_distribution<std::size_t> pick(0,
                                                            live.size() - 1);
            return sample_interval_below(*live[pick(rng)], bound, rng);
          },
          [&](const Geometric &g) -> std::optional<double> {
            auto v = geometric_first_below(g, bound);
            if (!v)
              return std::nullopt;
            const int k = std::uniform_int_distribution<int>(0, 52)(rng);
            Rational x = *v;
            for (int i = 0; i < k; ++i)
              x *= g.ratio;
            return to_double(x);
          },
      },
      rep_);
}

std::optional<double> AdmissibleSet::sample(Rng &rng, Tolerance tol) const {
  return sample_below(std::numeric_limits<double>::infinity(), rng, tol);
}

std::vector<double> AdmissibleSet::enumerate_below(double bound,
                                                   std::size_t limit) const {
  std::vector<double> out;
  if (const auto *f = std::get_if<Finite>(&rep_)) {
    for (auto it = f->values.rbegin();
         it != f->values.rend() && out.size() < limit; ++it)
      if (to_double(*it) < bound)
        out.push_back(to_double(*it));
  } else if (const auto *g = std::get_if<Geometric>(&rep_)) {
    auto v = geometric_first_below(*g, bound);
    if (v) {
      Rational x = *v;
      while (out.size() < limit && to_double(x) > 0) {
        out.push_back(to_double(x));
        x *= g->ratio;
      }
    }
  }
  return out;
}

std::optional<std::vector<Rational>> AdmissibleSet::finite_members() const {
  if (const auto *f = std::get_if<Finite>(&rep_))
    return f->values;
  return std::nullopt;
}

}  // namespace hsforce
