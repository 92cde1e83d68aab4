//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "hsforce/coloring.hpp"

#include <limits>
#include <string>

namespace hsforce {

std::int64_t fold_sign(std::int64_t z) {
  if (z == std::numeric_limits<std::int64_t>::min()
      || z > std::numeric_limits<std::int64_t>::max() / 2
      || z < -(std::numeric_limits<std::int64_t>::max() / 2))
    throw Error(ErrorCode::kOverflow, "cell index too large");
  return z >= 0 ? 2 * z : -2 * z - 1;
}

std::int64_t cantor_pair(std::int64_t a, std::int64_t b) {
  using Wide = unsigned __int128;
  const Wide s = static_cast<Wide>(a) + static_cast<Wide>(b);
  const Wide v = s * (s + 1) / 2 + static_cast<Wide>(b);
  if (v > static_cast<Wide>(std::numeric_limits<std::int64_t>::max()))
    throw Error(ErrorCode::kOverflow, "grid color exceeds int64");
  return static_cast<std::int64_t>(v);
}

std::int64_t kappa(std::span<const std::int64_t> cell) {
  if (cell.empty())
    throw Error(ErrorCode::kInvalidArgument, "empty cell index");
  std::int64_t acc = fold_sign(cell.front());
  for (std::size_t i = 1; i < cell.size(); ++i)
    acc = cantor_pair(acc, fold_sign(cell[i]));
  return acc;
}

Vector<Rational> rational_circle_center(const QuadPoint &p, const QuadPoint &q,
                                        const QuadPoint &r) {
  for (const QuadPoint *x: {&p, &q, &r})
    if (!(*x)[0].rational() || !(*x)[1].rational())
      throw Error(ErrorCode::kInvalidArgument,
                  "rational_circle_center needs rational points");
  const Rational px = p[0].a, py = p[1].a;
  const Rational a11 = 2 * (q[0].a - px), a12 = 2 * (q[1].a - py);
  const Rational a21 = 2 * (r[0].a - px), a22 = 2 * (r[1].a - py);
  const Rational pp = px * px + py * py;
  const Rational b1 = q[0].a * q[0].a + q[1].a * q[1].a - pp;
  const Rational b2 = r[0].a * r[0].a + r[1].a * r[1].a - pp;
  const Rational det = a11 * a22 - a12 * a21;
  if (det == 0)
    throw Error(ErrorCode::kCollinearPoints, "points are collinear");
  Vector<Rational> c(2);
  c[0] = (b1 * a22 - a12 * b2) / det;
  c[1] = (a11 * b2 - b1 * a21) / det;
  return c;
}

Coloring::Coloring(Spec spec) : spec_(std::move(spec)) {
  std::visit(overloaded {
                 [](const ConstantColoring &) { },
                 [](const StripColoring &s) {
                   if (s.n < 1)
                     throw Error(ErrorCode::kInvalidArgument, "strip needs n >= 1");
                 },
                 [](const MergedStripColoring &m) {
                   if (m.n < 1 || m.k < 2)
                     throw Error(ErrorCode::kInvalidArgument,
                                 "merged strip needs n >= 1 and k >= 2");
                 },
                 [](const GridColoring &g) {
                   if (g.n < 1 || g.delta <= 0)
                     throw Error(ErrorCode::kInvalidArgument,
                                 "grid needs n >= 1 and delta > 0");
                 },
                 [](const TwoBallColoring &) { },
                 [](const Rational2DColoring &) { },
             },
             spec_);
}

std::string_view Coloring::kind() const {
  return std::visit(overloaded {
                        [](const ConstantColoring &) { return "constant"; },
                        [](const StripColoring &) { return "strip"; },
                        [](const MergedStripColoring &) { return "merged_strip"; },
                        [](const GridColoring &) { return "grid"; },
                        [](const TwoBallColoring &) { return "two_ball"; },
                        [](const Rational2DColoring &) { return "rational2d"; },
                    },
                    spec_);
}

Index Coloring::dimension() const {
  return std::visit(overloaded {
                        [](const ConstantColoring &) -> Index { return 0; },
                        [](const StripColoring &s) { return s.n; },
                        [](const MergedStripColoring &m) { return m.n; },
                        [](const GridColoring &g) { return g.n; },
                        [](const TwoBallColoring &) -> Index { return 2; },
                        [](const Rational2DColoring &) -> Index { return 2; },
                    },
                    spec_);
}

void Coloring::check_dimension(Index n) const {
  const Index want = dimension();
  if (want != 0 && want != n)
    throw Error(ErrorCode::kInvalidArgument,
                std::string(kind()) + " coloring is defined on R^"
                    + std::to_string(want) + ", got a point in R^"
                    + std::to_string(n));
}

Color Coloring::operator()(const QuadPoint &x) const {
  if (const auto *c = std::get_if<ConstantColoring>(&spec_))
    return c->color;
  if (std::holds_alternative<Rational2DColoring>(spec_))
    return x[0].rational() && x[1].rational() ? 1 : 0;
  if (x[0].rational() && x[1].rational()) {
    Vector<Rational> v(2);
    v << x[0].a, x[1].a;
    return (*this)(v);
  }
  throw Error(ErrorCode::kUnsupported,
              std::string(kind())
                  + " coloring cannot evaluate irrational quadratic points");
}

}  // namespace hsforce
