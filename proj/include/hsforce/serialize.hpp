//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef HSFORCE_SERIALIZE_HPP_
#define HSFORCE_SERIALIZE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hsforce/admissible.hpp"
#include "hsforce/coloring.hpp"
#include "hsforce/engine.hpp"
#include "hsforce/property.hpp"

// JSON forms and the compact string syntax used on the command line.
// Exact rationals are "p/q" strings; doubles use shortest round-trip form.

namespace hsforce {

using Json = nlohmann::json;

Json rational_json(const Rational &x);
/// Accepts "p/q" or decimal strings, and JSON numbers.
Rational parse_rational_json(const Json &j);

Json vector_json(const Eigen::VectorXd &v);
Json vector_json(const Vector<Rational> &v);
Eigen::VectorXd parse_vector(const Json &j);
Vector<Rational> parse_exact_vector(const Json &j);

// Admissible sets -----------------------------------------------------------

Json admissible_json(const AdmissibleSet &s);
AdmissibleSet parse_admissible(const Json &j);

/// "(lo,hi)", "[lo,hi]", "(lo,inf)", "{a,b,c}", "(lo,hi)\{a,b}",
/// "(a,b)|(c,d)", "geom:first:ratio", or a bare list "a,b,c".
AdmissibleSet parse_admissible(std::string_view text);
std::string admissible_string(const AdmissibleSet &s);

// Colorings and properties --------------------------------------------------

Json coloring_json(const Coloring &c);
/// `n` fills in a missing "n".
Coloring parse_coloring(const Json &j, Index n);
/// "strip", "merged_strip:k", "grid:delta", "constant:c", "two_ball",
/// "rational2d", or a JSON object.
Coloring parse_coloring(std::string_view text, Index n);

Json property_json(const Property &p);
Property parse_property(const Json &j, Index n);
/// "regular:m", "isosceles:m", "right:m", "cardinality:Y",
/// "volume:m:<set>", "edge-lengths:k:<set>", or a JSON object.
Property parse_property(std::string_view text, Index n);

Json centers_json(const CenterSet &c);
CenterSet parse_centers(const Json &j);
/// "all", "all:w", or a JSON object.
CenterSet parse_centers(std::string_view text);

Json condition_json(const QCondition &q);
QCondition parse_condition(const Json &j, Index n);

// Verdicts and reports ------------------------------------------------------

Json sphere_json(const Sphere &s);
Sphere parse_sphere(const Json &j);

Json verdict_json(const Verdict &v);
Verdict parse_verdict(const Json &j);

Json search_json(const SearchResult &r);
SearchResult parse_search(const Json &j);

template <Scalar T>
Json config_points_json(const FiniteConfig<T> &cfg);
/// JSON list of {"coords": [...], "color"?: int}.
template <Scalar T>
FiniteConfig<T> parse_finite_config(const Json &j);

template <Scalar T>
Json propagation_json(const PropagationResult<T> &r);

/// Everything a run needs; flags override file values and the whole
/// config is echoed into every report.
struct RunConfig {
  std::string command;
  Index n = 2;
  Mode mode = Mode::kFloat;
  std::uint64_t seed = 0;
  std::size_t budget_spheres = 1000;
  std::size_t budget_witnesses = 100;
  unsigned threads = 0;
  Json coloring;   // object or string form
  Json property;   // object or string form
  Json radii;      // object or string form
  Json centers;    // object or string form
  std::optional<double> epsilon;
  std::optional<std::vector<Color>> colors;
  std::string out;
  Json extra = Json::object();  // command-specific options
};

Json run_config_json(const RunConfig &c);
/// Overlays the keys present in `j` onto `base`.
RunConfig parse_run_config(const Json &j, RunConfig base = {});

Coloring coloring_of(const RunConfig &c);
QCondition condition_of(const RunConfig &c);

}  // namespace hsforce

#endif  // HSFORCE_SERIALIZE_HPP_
