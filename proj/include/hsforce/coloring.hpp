//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_COLORING_HPP_
#define HSFORCE_COLORING_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>

#include "hsforce/error.hpp"
#include "hsforce/overloaded.hpp"
#include "hsforce/scalar.hpp"

namespace hsforce {

using Color = std::int64_t;

/// Bijection Z -> N: 0, -1, 1, -2, 2, ... -> 0, 1, 2, 3, 4, ...
std::int64_t fold_sign(std::int64_t z);
/// Cantor pairing N x N -> N; throws kOverflow past int64.
std::int64_t cantor_pair(std::int64_t a, std::int64_t b);
/// Default bijection Z^n -> N: fold signs, then a left fold of Cantor pairs.
std::int64_t kappa(std::span<const std::int64_t> cell);

/// a + b sqrt(2) with rational a, b.
struct QuadExt {
  Rational a;
  Rational b;

  bool rational() const { return b == 0; }
  friend bool operator==(const QuadExt &, const QuadExt &) = default;
  friend QuadExt operator+(const QuadExt &x, const QuadExt &y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend QuadExt operator-(const QuadExt &x, const QuadExt &y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend QuadExt operator*(const QuadExt &x, const QuadExt &y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
};

using QuadPoint = std::array<QuadExt, 2>;

inline QuadPoint quad_point(Rational x, Rational y) {
  return {QuadExt {std::move(x), 0}, QuadExt {std::move(y), 0}};
}

/// Exact circumcenter of three rational, non-collinear points.
Vector<Rational> rational_circle_center(const QuadPoint &p, const QuadPoint &q,
                                        const QuadPoint &r);

struct ConstantColoring {
  Color color = 0;
};
/// floor(x_n).
struct StripColoring {
  Index n = 2;
};
/// Strip classes with c < 0 merged into 0, c >= k-2 merged into k-1, the
/// rest shifted to c+1.
struct MergedStripColoring {
  Index n = 2;
  int k = 2;
};
/// kappa(floor(x_1/delta), ..., floor(x_n/delta)).
struct GridColoring {
  Index n = 2;
  Rational delta = 1;
};
/// 1 on B_2((-2,0)), 2 on B_2((2,0)), 1 elsewhere.
struct TwoBallColoring { };
/// 1 on Q^2, 0 elsewhere; evaluated on quadratic-extension points.
struct Rational2DColoring { };

class Coloring {
public:
  using Spec = std::variant<ConstantColoring, StripColoring,
                            MergedStripColoring, GridColoring, TwoBallColoring,
                            Rational2DColoring>;

  Coloring(Spec spec);  // NOLINT(google-explicit-constructor)

  static Coloring constant(Color c = 0) { return Coloring(ConstantColoring {c}); }
  static Coloring strip(Index n) { return Coloring(StripColoring {n}); }
  static Coloring merged_strip(Index n, int k) {
    return Coloring(MergedStripColoring {n, k});
  }
  static Coloring grid(Index n, Rational delta) {
    return Coloring(GridColoring {n, std::move(delta)});
  }
  static Coloring two_ball() { return Coloring(TwoBallColoring {}); }
  static Coloring rational2d() { return Coloring(Rational2DColoring {}); }

  const Spec &spec() const { return spec_; }
  std::string_view kind() const;
  /// Required ambient dimension, or 0 when any n >= 2 is accepted.
  Index dimension() const;

  template <Scalar T>
  Color operator()(const Vector<T> &x) const;

  Color operator()(const QuadPoint &x) const;

private:
  void check_dimension(Index n) const;

  Spec spec_;
};

namespace internal {
  template <Scalar T>
  std::int64_t floor_div(const T &x, const Rational &delta) {
    if constexpr (ExactScalar<T>)
      return floor_to_int(Rational(x / delta));
    else
      return floor_to_int(x / to_double(delta));
  }
}  // namespace internal

template <Scalar T>
Color Coloring::operator()(const Vector<T> &x) const {
  check_dimension(x.size());
  const auto strip_of = [&]() { return floor_to_int(x[x.size() - 1]); };
  return std::visit(
      overloaded {
          [](const ConstantColoring &c) { return c.color; },
          [&](const StripColoring &) -> Color { return strip_of(); },
          [&](const MergedStripColoring &m) -> Color {
            const std::int64_t c = strip_of();
            if (c < 0)
              return 0;
            if (c >= m.k - 2)
              return m.k - 1;
            return c + 1;
          },
          [&](const GridColoring &g) -> Color {
            std::vector<std::int64_t> cell(static_cast<std::size_t>(x.size()));
            for (Index i = 0; i < x.size(); ++i)
              cell[static_cast<std::size_t>(i)] =
                  internal::floor_div<T>(x[i], g.delta);
            return kappa(cell);
          },
          [&](const TwoBallColoring &) -> Color {
            const T right = (x[0] - T(2)) * (x[0] - T(2)) + x[1] * x[1];
            return right < T(4) ? 2 : 1;
          },
          [&](const Rational2DColoring &) -> Color {
            if constexpr (ExactScalar<T>)
              return 1;
            else
              throw Error(ErrorCode::kUnsupported,
                          "rational2d needs exact or quadratic-extension "
                          "points");
          },
      },
      spec_);
}

}  // namespace hsforce

#endif  // HSFORCE_COLORING_HPP_
