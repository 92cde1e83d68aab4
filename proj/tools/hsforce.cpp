//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

// Command-line front end: check | excluded-radii | propagate | plot | construct.
// Exit codes: 0 ok, 1 usage or input error, 2 violation or contradiction.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hsforce/constructions.hpp"
#include "hsforce/engine.hpp"
#include "hsforce/serialize.hpp"
#include "hsforce/sphere_ops.hpp"
#include "hsforce/svg.hpp"

namespace {

using namespace hsforce;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFound = 2;

struct Flags {
  std::string config_path;
  Index n = 2;
  std::string mode;
  std::uint64_t seed = 0;
  std::size_t budget_spheres = 1000;
  std::size_t budget_witnesses = 100;
  unsigned threads = 0;
  std::string out;
  std::string coloring, property, radii, centers, colors;
  double epsilon = 0;
  // command-specific
  std::string lengths, input, view, report, what, frames;
  Color x_colors = 0;
  Index y = 3;
  Index m = 2;
  double v = 0, radius = 1, cap_radius = 0, delta = 0;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::kParse, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string &path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::kParse, "cannot write " + path);
  out << text;
}

void emit(const RunConfig &cfg, const Json &report) {
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!cfg.out.empty())
    write_file(cfg.out, text);
}

std::vector<Color> parse_colors(const std::string &text) {
  std::vector<Color> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::stoll(item));
  return out;
}

ViewBox parse_view(const std::string &text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    v.push_back(to_double(parse_rational(item)));
  if (v.size() != 4)
    throw Error(ErrorCode::kParse, "view needs x0,x1,y0,y1");
  return {v[0], v[1], v[2], v[3]};
}

/// Exact square root of a nonnegative rational when it is rational.
std::optional<Rational> exact_sqrt(const Rational &x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  const Integer rn = boost::multiprecision::sqrt(num);
  const Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den)
    return std::nullopt;
  return Rational(rn) / Rational(rd);
}

Json simplex_report(const SimplexD &s) {
  Json vertices = Json::array();
  for (Index i = 0; i < s.vertex_count(); ++i)
    vertices.push_back(vector_json(Eigen::VectorXd(s.vertex(i))));
  return Json {{"vertices", vertices},
               {"edge_lengths", edge_lengths(s)},
               {"volume", cm_volume(s)}};
}

Json points_report(const std::vector<Eigen::VectorXd> &pts) {
  Json out = Json::array();
  for (const auto &p: pts)
    out.push_back(vector_json(p));
  return out;
}

// ---------------------------------------------------------------------------

int run_check(const RunConfig &cfg) {
  const Coloring f = coloring_of(cfg);
  const QCondition q = condition_of(cfg);
  SearchOptions options;
  options.spheres = cfg.budget_spheres;
  options.witnesses = cfg.budget_witnesses;
  options.seed = cfg.seed;
  options.mode = cfg.mode;
  options.threads = cfg.threads;
  const SearchResult result = search(f, q, options);

  Json report = search_json(result);
  report["command"] = "check";
  report["config"] = run_config_json(cfg);
  report["condition"] = condition_json(q);
  report["coloring"] = coloring_json(f);
  report["seed"] = cfg.seed;
  report["mode"] = std::string(to_string(cfg.mode));
  report["budgets"] = {{"spheres", cfg.budget_spheres},
                       {"witnesses", cfg.budget_witnesses}};
  if (result.certificate)
    report["certificate_check"] =
        validate_certificate(f, q, *result.certificate, cfg.mode).empty()
            ? "valid"
            : "invalid";
  emit(cfg, report);
  return result.certificate ? kExitFound : kExitOk;
}

int run_excluded_radii(const RunConfig &cfg) {
  const Json &s = cfg.extra.value("S", Json(nullptr));
  if (s.is_null())
    throw Error(ErrorCode::kParse, "excluded-radii needs --S");
  const AdmissibleSet set = parse_admissible(s);
  const auto members = set.finite_members();
  if (!members)
    throw Error(ErrorCode::kParse, "--S must be a finite list of lengths");

  const auto radii = excluded_radii(std::span<const Rational>(*members), cfg.n);
  Json list = Json::array();
  for (const auto &r: radii) {
    Json item {{"radius", r.radius}};
    if (cfg.mode == Mode::kExact) {
      item["radius_squared"] = rational_json(r.radius_squared);
      const auto root = exact_sqrt(r.radius_squared);
      item["exact"] = root ? format_rational(*root)
                           : "sqrt(" + format_rational(r.radius_squared) + ")";
    }
    list.push_back(std::move(item));
  }
  Json lengths = Json::array();
  for (const auto &x: *members)
    lengths.push_back(rational_json(x));
  emit(cfg, Json {{"command", "excluded-radii"},
                  {"config", run_config_json(cfg)},
                  {"n", cfg.n},
                  {"S", lengths},
                  {"mode", std::string(to_string(cfg.mode))},
                  {"radii", list}});
  return kExitOk;
}

template <Scalar T>
int run_propagate_as(const RunConfig &cfg) {
  const std::string input = cfg.extra.value("input", std::string());
  if (input.empty())
    throw Error(ErrorCode::kParse, "propagate needs --input");
  const FiniteConfig<T> start = parse_finite_config<T>(read_json(input));
  Color x_colors = cfg.extra.value("X", Color {0});
  if (x_colors == 0) {
    x_colors = 1;
    for (const auto &c: start.colors)
      if (c)
        x_colors = std::max(x_colors, *c);
  }
  const Index y = cfg.extra.value("Y", Index {3});
  const AdmissibleSet radii = cfg.radii.is_null()
                                  ? AdmissibleSet::interval(0, std::nullopt)
                                  : parse_admissible(cfg.radii);
  const auto result = propagate<T>(start, x_colors, y, radii);

  Json report = propagation_json(result);
  report["command"] = "propagate";
  report["config"] = run_config_json(cfg);
  report["mode"] = std::string(to_string(cfg.mode));
  report["X"] = x_colors;
  report["Y"] = y;
  report["radii"] = admissible_json(radii);
  if (result.contradiction)
    report["contradiction_check"] =
        validate_contradiction(result.config, y, radii, *result.contradiction)
            ? "valid"
            : "invalid";

  const std::string frames = cfg.extra.value("frames", std::string());
  if (!frames.empty()) {
    std::filesystem::create_directories(frames);
    const ViewBox view = parse_view(cfg.extra.value("view", std::string("-4,4,-4,4")));
    FiniteConfig<double> frame;
    for (const auto &p: start.points) {
      if constexpr (ExactScalar<T>)
        frame.points.push_back(to_float(p));
      else
        frame.points.push_back(p);
    }
    frame.colors = start.colors;
    std::size_t applied = 0;
    Json files = Json::array();
    for (std::size_t round = 0;; ++round) {
      const std::string path =
          (std::filesystem::path(frames) / ("round_" + std::to_string(round) + ".svg"))
              .string();
      write_file(path, render_points(frame, view));
      files.push_back(path);
      if (round >= result.round_sizes.size())
        break;
      for (std::size_t k = 0; k < result.round_sizes[round]; ++k, ++applied) {
        const auto &cert = result.forced[applied];
        frame.colors[static_cast<std::size_t>(cert.center)] = cert.color;
      }
    }
    report["frames"] = files;
  }
  emit(cfg, report);
  return result.contradiction ? kExitFound : kExitOk;
}

int run_propagate(const RunConfig &cfg) {
  return cfg.mode == Mode::kExact ? run_propagate_as<Rational>(cfg)
                                  : run_propagate_as<double>(cfg);
}

int run_plot(const RunConfig &cfg) {
  if (cfg.n != 2)
    throw Error(ErrorCode::kUnsupportedDimension,
                "plot needs n = 2, got n = " + std::to_string(cfg.n));
  const Coloring f = coloring_of(cfg);
  const ViewBox view =
      parse_view(cfg.extra.value("view", std::string("-4,4,-4,4")));
  PlotOverlay overlay;
  const std::string report = cfg.extra.value("report", std::string());
  if (!report.empty()) {
    const Json j = read_json(report);
    if (j.contains("certificate") && !j.at("certificate").is_null())
      overlay = overlay_of(std::get<Violation>(parse_verdict(j.at("certificate"))));
  }
  const std::string svg = render_coloring(f, view, overlay);
  if (cfg.out.empty())
    std::cout << svg;
  else
    write_file(cfg.out, svg);
  return kExitOk;
}

int run_construct(const RunConfig &cfg) {
  const std::string what = cfg.extra.value("what", std::string());
  const double big_r = cfg.extra.value("radius", 1.0);
  const Index n = cfg.n;
  Eigen::VectorXd pole = Eigen::VectorXd::Zero(n);
  pole[n - 1] = big_r;
  const Sphere sphere(Eigen::VectorXd::Zero(n), big_r);
  const double cap_default = std::min(big_r * std::sqrt(2.0), 2 * big_r);
  double cap_r = cfg.extra.value("cap_radius", 0.0);
  if (!(cap_r > 0))
    cap_r = cap_default;

  Json result {{"command", "construct"},
               {"config", run_config_json(cfg)},
               {"what", what},
               {"sphere", sphere_json(sphere)}};
  if (what == "chain") {
    const AdmissibleSet lengths =
        parse_admissible(cfg.extra.value("S", Json("geom:1/2:1/2")));
    const Cap cap(sphere, pole, cap_r);
    result["simplex"] = simplex_report(chain_construction(cap, lengths, cfg.seed));
    result["S"] = admissible_json(lengths);
    result["cap_radius"] = cap_r;
  } else if (what == "volume") {
    const Cap cap(sphere, pole, cap_r);
    const Index m = cfg.extra.value("m", Index {2});
    const double v = cfg.extra.value("v", 0.0);
    const auto w = volume_witness(cap, m, v, cfg.seed);
    result["simplex"] = simplex_report(w.simplex);
    result["r"] = w.r;
    result["iterations"] = w.iterations;
    result["target"] = v;
    result["cap_radius"] = cap_r;
  } else if (what == "template") {
    const Property prop = condition_of(cfg).property;
    const auto pts = witness_template(prop, sphere, cfg.seed);
    result["property"] = property_json(prop);
    result["witness"] = pts ? points_report(*pts) : Json(nullptr);
  } else if (what == "right-cap") {
    const double delta = cfg.extra.value("delta", 0.9);
    const auto s = cap_contains_right_simplex(big_r, delta, n);
    result["delta"] = delta;
    result["contained"] = s.has_value();
    result["simplex"] = s ? simplex_report(*s) : Json(nullptr);
  } else {
    throw Error(ErrorCode::kParse,
                "construct needs --what chain|volume|template|right-cap");
  }
  emit(cfg, result);
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app {"hsforce: hypersphere forcing conditions at desk scale"};
  app.require_subcommand(1);
  Flags flags;

  struct Sub {
    CLI::App *app;
    std::string default_mode;
  };
  std::vector<Sub> subs;
  const auto add_common = [&](CLI::App *sub, const std::string &default_mode) {
    sub->add_option("--config", flags.config_path, "JSON run config; flags override it");
    sub->add_option("--n", flags.n, "ambient dimension");
    sub->add_option("--mode", flags.mode, "exact | float")
        ->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--seed", flags.seed, "master seed");
    sub->add_option("--budget-spheres", flags.budget_spheres, "spheres to sample");
    sub->add_option("--budget-witnesses", flags.budget_witnesses,
                    "witness templates per sphere");
    sub->add_option("--threads", flags.threads, "worker threads (0: all cores)");
    sub->add_option("--out", flags.out, "output file");
    subs.push_back({sub, default_mode});
  };

  auto *check = app.add_subcommand("check", "search for a violation of Q");
  add_common(check, "float");
  check->add_option("--coloring", flags.coloring, "coloring spec");
  check->add_option("--property", flags.property, "property spec");
  check->add_option("--radii", flags.radii, "admissible radii");
  check->add_option("--centers", flags.centers, "admissible centers");
  check->add_option("--epsilon", flags.epsilon, "radius window (0, epsilon)");
  check->add_option("--colors", flags.colors, "color space, comma separated");

  auto *excluded = app.add_subcommand("excluded-radii",
                                      "circumradii of simplices with edges in S");
  add_common(excluded, "exact");
  excluded->add_option("--S", flags.lengths, "finite length list, e.g. 3,4,5");

  auto *prop = app.add_subcommand("propagate", "forcing propagation on a finite set");
  add_common(prop, "exact");
  prop->add_option("--input", flags.input, "finite configuration JSON");
  prop->add_option("--X", flags.x_colors, "number of colors");
  prop->add_option("--Y", flags.y, "points needed on a sphere");
  prop->add_option("--radii", flags.radii, "admissible radii");
  prop->add_option("--frames", flags.frames, "directory for per-round SVG frames");
  prop->add_option("--view", flags.view, "x0,x1,y0,y1 for frames");

  auto *plot = app.add_subcommand("plot", "render a planar coloring to SVG");
  add_common(plot, "float");
  plot->add_option("--coloring", flags.coloring, "coloring spec");
  plot->add_option("--view", flags.view, "x0,x1,y0,y1");
  plot->add_option("--report", flags.report, "check report with a certificate");

  auto *construct = app.add_subcommand("construct", "run a witness construction");
  add_common(construct, "float");
  construct->add_option("--what", flags.what, "chain | volume | template | right-cap");
  construct->add_option("--property", flags.property, "property spec (template)");
  construct->add_option("--S", flags.lengths, "admissible lengths (chain)");
  construct->add_option("--m", flags.m, "simplex dimension (volume)");
  construct->add_option("--v", flags.v, "target volume (volume)");
  construct->add_option("--radius", flags.radius, "sphere radius");
  construct->add_option("--cap-radius", flags.cap_radius, "Euclidean cap radius");
  construct->add_option("--delta", flags.delta, "cap parameter (right-cap)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Sub *active = nullptr;
    for (const auto &s: subs)
      if (s.app->parsed())
        active = &s;
    CLI::App &sub = *active->app;
    const auto given = [&](const char *name) {
      return sub.get_option_no_throw(name) != nullptr && sub.count(name) > 0;
    };

    RunConfig cfg;
    cfg.command = sub.get_name();
    if (!flags.config_path.empty())
      cfg = parse_run_config(read_json(flags.config_path), cfg);
    cfg.command = sub.get_name();
    const bool mode_in_file =
        !flags.config_path.empty() && read_json(flags.config_path).contains("mode");
    if (given("--n")) cfg.n = flags.n;
    if (given("--mode")) cfg.mode = parse_mode(flags.mode);
    else if (!mode_in_file) cfg.mode = parse_mode(active->default_mode);
    if (given("--seed")) cfg.seed = flags.seed;
    if (given("--budget-spheres")) cfg.budget_spheres = flags.budget_spheres;
    if (given("--budget-witnesses")) cfg.budget_witnesses = flags.budget_witnesses;
    if (given("--threads")) cfg.threads = flags.threads;
    if (given("--out")) cfg.out = flags.out;
    if (given("--coloring")) cfg.coloring = flags.coloring;
    if (given("--property")) cfg.property = flags.property;
    if (given("--radii")) cfg.radii = flags.radii;
    if (given("--centers")) cfg.centers = flags.centers;
    if (given("--epsilon")) cfg.epsilon = flags.epsilon;
    if (given("--colors")) cfg.colors = parse_colors(flags.colors);
    if (given("--S")) cfg.extra["S"] = flags.lengths;
    if (given("--input")) cfg.extra["input"] = flags.input;
    if (given("--X")) cfg.extra["X"] = flags.x_colors;
    if (given("--Y")) cfg.extra["Y"] = flags.y;
    if (given("--frames")) cfg.extra["frames"] = flags.frames;
    if (given("--view")) cfg.extra["view"] = flags.view;
    if (given("--report")) cfg.extra["report"] = flags.report;
    if (given("--what")) cfg.extra["what"] = flags.what;
    if (given("--m")) cfg.extra["m"] = flags.m;
    if (given("--v")) cfg.extra["v"] = flags.v;
    if (given("--radius")) cfg.extra["radius"] = flags.radius;
    if (given("--cap-radius")) cfg.extra["cap_radius"] = flags.cap_radius;
    if (given("--delta")) cfg.extra["delta"] = flags.delta;
    if (cfg.n < 2)
      throw Error(ErrorCode::kInvalidArgument, "--n must be at least 2");

    if (cfg.command == "check")
      return run_check(cfg);
    if (cfg.command == "excluded-radii")
      return run_excluded_radii(cfg);
    if (cfg.command == "propagate")
      return run_propagate(cfg);
    if (cfg.command == "plot")
      return run_plot(cfg);
    return run_construct(cfg);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
