//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_SVG_HPP_
#define HSFORCE_SVG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hsforce/coloring.hpp"
#include "hsforce/engine.hpp"

namespace hsforce {

/// Axis-aligned window [x0, x1] x [y0, y1] of the plane.
struct ViewBox {
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
};

/// Fill for a color id from a fixed palette.
std::string palette_fill(Color c);

/// Minimal SVG writer in world coordinates (y up). Output is a pure
/// function of the calls made, so equal inputs give equal bytes.
class SvgWriter {
public:
  explicit SvgWriter(ViewBox view, double width_px = 512);

  void rect(double x0, double y0, double x1, double y1, const std::string &fill,
            const std::string &cls);
  void circle(double cx, double cy, double r, const std::string &stroke,
              const std::string &cls);
  void dot(double cx, double cy, const std::string &fill, const std::string &cls);
  void segment(double ax, double ay, double bx, double by,
               const std::string &stroke, const std::string &cls);

  std::string str() const;

private:
  double px(double x) const;
  double py(double y) const;

  ViewBox view_;
  double scale_;
  double width_, height_;
  std::string body_;
};

struct PlotOverlay {
  std::vector<Sphere> spheres;
  std::vector<Eigen::VectorXd> witness;
  std::optional<Eigen::VectorXd> center;
};

/// Shaded color regions of a planar coloring over the view, plus overlays.
/// Throws kUnsupportedDimension unless the coloring lives in the plane.
std::string render_coloring(const Coloring &f, const ViewBox &view,
                            const PlotOverlay &overlay = {});

/// Points of a finite configuration colored by their (possibly missing)
/// color; for propagation frames.
std::string render_points(const FiniteConfig<double> &cfg, const ViewBox &view);

/// Overlay drawn from a check report's certificate (empty when none).
PlotOverlay overlay_of(const Violation &v);

}  // namespace hsforce

#endif  // HSFORCE_SVG_HPP_
