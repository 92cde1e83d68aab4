//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "hsforce/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hsforce/overloaded.hpp"

namespace hsforce {
namespace {
  constexpr std::array<const char *, 12> kPalette {
      "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
      "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#1b9e77", "#d95f02"};
  constexpr int kMaxCells = 1 << 16;

  std::string num(double x) {
    // Round to 1e-4 px so tiny float noise cannot change the bytes.
    const double r = std::round(x * 1e4) / 1e4;
    return format_double(r == 0 ? 0.0 : r);
  }

  void check_view(const ViewBox &v) {
    if (!(v.x1 > v.x0) || !(v.y1 > v.y0))
      throw Error(ErrorCode::kInvalidArgument, "empty view box");
  }

  void check_cells(double count) {
    if (count > kMaxCells)
      throw Error(ErrorCode::kOutOfRange,
                  "view box covers too many color cells to draw");
  }
}  // namespace

std::string palette_fill(Color c) {
  const auto h = mix_seed(static_cast<std::uint64_t>(c), 0);
  return kPalette[h % kPalette.size()];
}

SvgWriter::SvgWriter(ViewBox view, double width_px) : view_(view) {
  check_view(view_);
  scale_ = width_px / (view_.x1 - view_.x0);
  width_ = width_px;
  height_ = (view_.y1 - view_.y0) * scale_;
}

double SvgWriter::px(double x) const { return (x - view_.x0) * scale_; }
double SvgWriter::py(double y) const { return (view_.y1 - y) * scale_; }

void SvgWriter::rect(double x0, double y0, double x1, double y1,
                     const std::string &fill, const std::string &cls) {
  body_ += "<rect class=\"" + cls + "\" x=\"" + num(px(x0)) + "\" y=\""
           + num(py(y1)) + "\" width=\"" + num((x1 - x0) * scale_)
           + "\" height=\"" + num((y1 - y0) * scale_) + "\" fill=\"" + fill
           + "\"/>\n";
}

void SvgWriter::circle(double cx, double cy, double r, const std::string &stroke,
                       const std::string &cls) {
  body_ += "<circle class=\"" + cls + "\" cx=\"" + num(px(cx)) + "\" cy=\""
           + num(py(cy)) + "\" r=\"" + num(r * scale_)
           + "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"1.5\"/>\n";
}

void SvgWriter::dot(double cx, double cy, const std::string &fill,
                    const std::string &cls) {
  body_ += "<circle class=\"" + cls + "\" cx=\"" + num(px(cx)) + "\" cy=\""
           + num(py(cy)) + "\" r=\"3\" fill=\"" + fill
           + "\" stroke=\"#000000\" stroke-width=\"0.75\"/>\n";
}

void SvgWriter::segment(double ax, double ay, double bx, double by,
                        const std::string &stroke, const std::string &cls) {
  body_ += "<line class=\"" + cls + "\" x1=\"" + num(px(ax)) + "\" y1=\""
           + num(py(ay)) + "\" x2=\"" + num(px(bx)) + "\" y2=\"" + num(py(by))
           + "\" stroke=\"" + stroke + "\"/>\n";
}

std::string SvgWriter::str() const {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width_)
         + "\" height=\"" + num(height_) + "\" viewBox=\"0 0 " + num(width_)
         + " " + num(height_) + "\">\n" + body_ + "</svg>\n";
}

std::string render_coloring(const Coloring &f, const ViewBox &view,
                            const PlotOverlay &overlay) {
  const Index dim = f.dimension();
  if (dim != 0 && dim != 2)
    throw Error(ErrorCode::kUnsupportedDimension,
                "plotting needs a planar coloring, got n = "
                    + std::to_string(dim));
  SvgWriter svg(view);
  const auto color_at = [&](double x, double y) {
    Eigen::VectorXd p(2);
    p << x, y;
    return f(p);
  };
  const auto bands = [&] {
    const double lo = std::floor(view.y0), hi = std::ceil(view.y1);
    check_cells(hi - lo);
    for (double c = lo; c < hi; c += 1) {
      const double b0 = std::max(c, view.y0), b1 = std::min(c + 1, view.y1);
      if (b1 > b0)
        svg.rect(view.x0, b0, view.x1, b1, palette_fill(color_at(view.x0, c)),
                 "band");
    }
  };

  std::visit(
      overloaded {
          [&](const ConstantColoring &c) {
            svg.rect(view.x0, view.y0, view.x1, view.y1, palette_fill(c.color),
                     "region");
          },
          [&](const StripColoring &) { bands(); },
          [&](const MergedStripColoring &) { bands(); },
          [&](const GridColoring &g) {
            const double d = to_double(g.delta);
            const double i0 = std::floor(view.x0 / d), i1 = std::ceil(view.x1 / d);
            const double j0 = std::floor(view.y0 / d), j1 = std::ceil(view.y1 / d);
            check_cells((i1 - i0) * (j1 - j0));
            for (double j = j0; j < j1; j += 1) {
              for (double i = i0; i < i1; i += 1) {
                const double x0 = std::max(i * d, view.x0);
                const double x1 = std::min((i + 1) * d, view.x1);
                const double y0 = std::max(j * d, view.y0);
                const double y1 = std::min((j + 1) * d, view.y1);
                if (x1 > x0 && y1 > y0)
                  svg.rect(x0, y0, x1, y1,
                           palette_fill(color_at((i + 0.5) * d, (j + 0.5) * d)),
                           "cell");
              }
            }
          },
          [&](const TwoBallColoring &) {
            svg.rect(view.x0, view.y0, view.x1, view.y1, palette_fill(1),
                     "region");
            svg.circle(-2, 0, 2, palette_fill(1), "region-ball");
            svg.circle(2, 0, 2, palette_fill(2), "region-ball");
          },
          [&](const Rational2DColoring &) {
            // Rational points are dense and null; shade the generic color.
            svg.rect(view.x0, view.y0, view.x1, view.y1, palette_fill(0),
                     "region");
          },
      },
      f.spec());

  for (const auto &s: overlay.spheres) {
    if (s.ambient_dimension() != 2)
      throw Error(ErrorCode::kUnsupportedDimension, "overlay sphere not planar");
    svg.circle(s.center()[0], s.center()[1], s.radius(), "#000000", "sphere");
  }
  for (const auto &p: overlay.witness)
    svg.dot(p[0], p[1], "#ffffff", "witness");
  if (overlay.center)
    svg.dot((*overlay.center)[0], (*overlay.center)[1], "#000000", "center");
  return svg.str();
}

std::string render_points(const FiniteConfig<double> &cfg, const ViewBox &view) {
  SvgWriter svg(view);
  svg.rect(view.x0, view.y0, view.x1, view.y1, "#ffffff", "background");
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    const auto &p = cfg.points[i];
    if (p.size() != 2)
      throw Error(ErrorCode::kUnsupportedDimension, "frames need planar points");
    svg.dot(p[0], p[1], cfg.colors[i] ? palette_fill(*cfg.colors[i]) : "#dddddd",
            cfg.colors[i] ? "point" : "point-uncolored");
  }
  return svg.str();
}

PlotOverlay overlay_of(const Violation &v) {
  return PlotOverlay {{v.sphere}, v.witness, v.sphere.center()};
}

}  // namespace hsforce
