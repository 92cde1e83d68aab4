//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "hsforce/serialize.hpp"

#include <algorithm>
#include <cctype>

#include "hsforce/overloaded.hpp"

namespace hsforce {
namespace {
  [[noreturn]] void parse_error(const std::string &what) {
    throw Error(ErrorCode::kParse, what);
  }

  std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
      ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
      --b;
    return std::string(s.substr(a, b - a));
  }

  std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
      if (i == s.size() || s[i] == sep) {
        out.push_back(trim(s.substr(start, i - start)));
        start = i + 1;
      }
    }
    return out;
  }

  Rational parse_number(std::string_view text) {
    try {
      return parse_rational(trim(text));
    } catch (const Error &e) {
      parse_error(std::string("bad number '") + std::string(text) + "': "
                  + e.what());
    }
  }

  std::vector<Rational> parse_list(std::string_view body) {
    std::vector<Rational> out;
    if (trim(body).empty())
      return out;
    for (const auto &item: split(body, ','))
      out.push_back(parse_number(item));
    return out;
  }

  Json rational_list_json(const std::vector<Rational> &values) {
    Json out = Json::array();
    for (const auto &v: values)
      out.push_back(rational_json(v));
    return out;
  }

  std::vector<Rational> parse_rational_list(const Json &j) {
    if (!j.is_array())
      parse_error("expected a list of numbers");
    std::vector<Rational> out;
    for (const auto &x: j)
      out.push_back(parse_rational_json(x));
    return out;
  }

  AdmissibleSet::Interval parse_interval_text(std::string_view text) {
    const std::string s = trim(text);
    if (s.size() < 5 || (s.front() != '(' && s.front() != '[')
        || (s.back() != ')' && s.back() != ']'))
      parse_error("bad interval '" + s + "'");
    const auto parts = split(std::string_view(s).substr(1, s.size() - 2), ',');
    if (parts.size() != 2)
      parse_error("interval needs two endpoints: '" + s + "'");
    AdmissibleSet::Interval iv;
    iv.lo = parse_number(parts[0]);
    iv.lo_closed = s.front() == '[';
    if (parts[1] != "inf" && parts[1] != "+inf")
      iv.hi = parse_number(parts[1]);
    iv.hi_closed = s.back() == ']' && iv.hi.has_value();
    return iv;
  }

  std::string interval_string(const AdmissibleSet::Interval &iv) {
    return std::string(iv.lo_closed ? "[" : "(") + format_rational(iv.lo) + ","
           + (iv.hi ? format_rational(*iv.hi) : std::string("inf"))
           + (iv.hi_closed ? "]" : ")");
  }

  std::string list_string(const std::vector<Rational> &values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i)
      out += (i ? "," : "") + format_rational(values[i]);
    return out + "}";
  }

  Json interval_json(const AdmissibleSet::Interval &iv) {
    return Json {{"lo", rational_json(iv.lo)},
                 {"hi", iv.hi ? rational_json(*iv.hi) : Json(nullptr)},
                 {"lo_closed", iv.lo_closed},
                 {"hi_closed", iv.hi_closed}};
  }

  AdmissibleSet::Interval parse_interval_json(const Json &j) {
    AdmissibleSet::Interval iv;
    iv.lo = parse_rational_json(j.at("lo"));
    if (j.contains("hi") && !j.at("hi").is_null())
      iv.hi = parse_rational_json(j.at("hi"));
    iv.lo_closed = j.value("lo_closed", false);
    iv.hi_closed = j.value("hi_closed", false);
    return iv;
  }

  template <class F>
  auto json_guard(const std::string &what, F &&f) {
    try {
      return f();
    } catch (const Json::exception &e) {
      parse_error(what + ": " + e.what());
    }
  }

  Json exact_scalar_json(double x) { return x; }
  Json exact_scalar_json(const Rational &x) { return rational_json(x); }
}  // namespace

Json rational_json(const Rational &x) { return format_rational(x); }

Rational parse_rational_json(const Json &j) {
  if (j.is_string())
    return parse_number(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<std::int64_t>());
  if (j.is_number())
    return from_double<Rational>(j.get<double>());
  parse_error("expected a number or a \"p/q\" string, got " + j.dump());
}

Json vector_json(const Eigen::VectorXd &v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i)
    out.push_back(v[i]);
  return out;
}

Json vector_json(const Vector<Rational> &v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i)
    out.push_back(rational_json(v[i]));
  return out;
}

Eigen::VectorXd parse_vector(const Json &j) {
  if (!j.is_array())
    parse_error("expected a coordinate list");
  Eigen::VectorXd v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Index>(i)] = j[i].is_number() ? j[i].get<double>()
                                                : to_double(parse_rational_json(j[i]));
  return v;
}

Vector<Rational> parse_exact_vector(const Json &j) {
  if (!j.is_array())
    parse_error("expected a coordinate list");
  Vector<Rational> v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Index>(i)] = parse_rational_json(j[i]);
  return v;
}

// Admissible sets -----------------------------------------------------------

Json admissible_json(const AdmissibleSet &s) {
  using S = AdmissibleSet;
  return std::visit(
      overloaded {
          [](const S::Interval &iv) { return Json {{"interval", interval_json(iv)}}; },
          [](const S::Finite &f) { return Json {{"finite", rational_list_json(f.values)}}; },
          [](const S::IntervalMinus &im) {
            return Json {{"interval_minus",
                          {{"range", interval_json(im.range)},
                           {"excluded", rational_list_json(im.excluded)}}}};
          },
          [](const S::Union &u) {
            Json parts = Json::array();
            for (const auto &p: u.parts)
              parts.push_back(interval_json(p));
            return Json {{"union", parts}};
          },
          [](const S::Geometric &g) {
            return Json {{"geometric",
                          {{"first", rational_json(g.first)},
                           {"ratio", rational_json(g.ratio)}}}};
          },
      },
      s.representation());
}

AdmissibleSet parse_admissible(const Json &j) {
  if (j.is_string())
    return parse_admissible(std::string_view(j.get_ref<const std::string &>()));
  return json_guard("admissible set", [&] {
    if (!j.is_object() || j.size() != 1)
      parse_error("admissible set needs exactly one of interval, finite, "
                  "interval_minus, union, geometric");
    if (j.contains("interval"))
      return AdmissibleSet(parse_interval_json(j.at("interval")));
    if (j.contains("finite"))
      return AdmissibleSet::finite(parse_rational_list(j.at("finite")));
    if (j.contains("interval_minus")) {
      const Json &b = j.at("interval_minus");
      return AdmissibleSet::interval_minus(parse_interval_json(b.at("range")),
                                           parse_rational_list(b.at("excluded")));
    }
    if (j.contains("union")) {
      std::vector<AdmissibleSet::Interval> parts;
      for (const auto &p: j.at("union"))
        parts.push_back(parse_interval_json(p));
      return AdmissibleSet::union_of(std::move(parts));
    }
    if (j.contains("geometric")) {
      const Json &g = j.at("geometric");
      return AdmissibleSet::geometric(parse_rational_json(g.at("first")),
                                      parse_rational_json(g.at("ratio")));
    }
    parse_error("unknown admissible set " + j.dump());
  });
}

AdmissibleSet parse_admissible(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty())
    parse_error("empty admissible set");
  if (s.rfind("geom:", 0) == 0) {
    const auto parts = split(std::string_view(s).substr(5), ':');
    if (parts.size() != 2)
      parse_error("geometric set needs geom:first:ratio");
    return AdmissibleSet::geometric(parse_number(parts[0]),
                                    parse_number(parts[1]));
  }
  if (s.find('|') != std::string::npos) {
    std::vector<AdmissibleSet::Interval> parts;
    for (const auto &p: split(s, '|'))
      parts.push_back(parse_interval_text(p));
    return AdmissibleSet::union_of(std::move(parts));
  }
  if (const auto cut = s.find("\\{"); cut != std::string::npos) {
    const std::string rest = trim(std::string_view(s).substr(cut + 1));
    if (rest.size() < 2 || rest.back() != '}')
      parse_error("excluded list must be {a,b,...}");
    return AdmissibleSet::interval_minus(
        parse_interval_text(std::string_view(s).substr(0, cut)),
        parse_list(std::string_view(rest).substr(1, rest.size() - 2)));
  }
  if (s.front() == '{') {
    if (s.back() != '}')
      parse_error("unterminated list '" + s + "'");
    return AdmissibleSet::finite(
        parse_list(std::string_view(s).substr(1, s.size() - 2)));
  }
  if (s.front() == '(' || s.front() == '[')
    return AdmissibleSet(parse_interval_text(s));
  return AdmissibleSet::finite(parse_list(s));
}

std::string admissible_string(const AdmissibleSet &s) {
  using S = AdmissibleSet;
  return std::visit(
      overloaded {
          [](const S::Interval &iv) { return interval_string(iv); },
          [](const S::Finite &f) { return list_string(f.values); },
          [](const S::IntervalMinus &im) {
            return interval_string(im.range) + "\\" + list_string(im.excluded);
          },
          [](const S::Union &u) {
            std::string out;
            for (std::size_t i = 0; i < u.parts.size(); ++i)
              out += (i ? "|" : "") + interval_string(u.parts[i]);
            return out;
          },
          [](const S::Geometric &g) {
            return "geom:" + format_rational(g.first) + ":"
                   + format_rational(g.ratio);
          },
      },
      s.representation());
}

// Colorings and properties --------------------------------------------------

Json coloring_json(const Coloring &c) {
  Json out = std::visit(
      overloaded {
          [](const ConstantColoring &k) { return Json {{"color", k.color}}; },
          [](const StripColoring &k) { return Json {{"n", k.n}}; },
          [](const MergedStripColoring &k) { return Json {{"n", k.n}, {"k", k.k}}; },
          [](const GridColoring &k) {
            return Json {{"n", k.n}, {"delta", rational_json(k.delta)}};
          },
          [](const TwoBallColoring &) { return Json::object(); },
          [](const Rational2DColoring &) { return Json::object(); },
      },
      c.spec());
  out["kind"] = std::string(c.kind());
  return out;
}

Coloring parse_coloring(const Json &j, Index n) {
  if (j.is_string())
    return parse_coloring(std::string_view(j.get_ref<const std::string &>()), n);
  return json_guard("coloring", [&]() -> Coloring {
    const std::string kind = j.at("kind").get<std::string>();
    const Index dim = j.value("n", n);
    if (kind == "constant")
      return Coloring::constant(j.value("color", Color {0}));
    if (kind == "strip")
      return Coloring::strip(dim);
    if (kind == "merged_strip")
      return Coloring::merged_strip(dim, j.at("k").get<int>());
    if (kind == "grid")
      return Coloring::grid(dim, parse_rational_json(j.at("delta")));
    if (kind == "two_ball")
      return Coloring::two_ball();
    if (kind == "rational2d")
      return Coloring::rational2d();
    parse_error("unknown coloring kind '" + kind + "'");
  });
}

Coloring parse_coloring(std::string_view text, Index n) {
  const std::string s = trim(text);
  if (!s.empty() && s.front() == '{')
    return json_guard("coloring", [&] { return parse_coloring(Json::parse(s), n); });
  const auto parts = split(s, ':');
  const std::string &kind = parts[0];
  const auto arg = [&](const char *what) {
    if (parts.size() != 2)
      parse_error("coloring '" + kind + "' needs " + what + " as " + kind + ":"
                  + what);
    return parts[1];
  };
  if (kind == "strip" && parts.size() == 1)
    return Coloring::strip(n);
  if (kind == "merged_strip" || kind == "merged-strip")
    return Coloring::merged_strip(n, static_cast<int>(floor_to_int(parse_number(arg("k")))));
  if (kind == "grid")
    return Coloring::grid(n, parse_number(arg("delta")));
  if (kind == "constant")
    return Coloring::constant(parts.size() == 1 ? 0 : floor_to_int(parse_number(arg("c"))));
  if ((kind == "two_ball" || kind == "two-ball") && parts.size() == 1)
    return Coloring::two_ball();
  if (kind == "rational2d" && parts.size() == 1)
    return Coloring::rational2d();
  parse_error("unknown coloring '" + s + "'");
}

Json property_json(const Property &p) {
  Json out = std::visit(
      overloaded {
          [](const CardinalityProperty &k) { return Json {{"Y", k.y}}; },
          [](const IsoscelesProperty &k) { return Json {{"m", k.m}}; },
          [](const RegularProperty &k) { return Json {{"m", k.m}}; },
          [](const RightProperty &k) { return Json {{"m", k.m}}; },
          [](const VolumeProperty &k) {
            return Json {{"m", k.m}, {"V", admissible_json(k.values)}};
          },
          [](const EdgeLengthsProperty &k) {
            return Json {{"k", k.k}, {"S", admissible_json(k.lengths)}};
          },
      },
      p.spec());
  out["kind"] = std::string(p.kind());
  out["n"] = p.n();
  return out;
}

Property parse_property(const Json &j, Index n) {
  if (j.is_string())
    return parse_property(std::string_view(j.get_ref<const std::string &>()), n);
  return json_guard("property", [&]() -> Property {
    const std::string kind = j.at("kind").get<std::string>();
    const Index dim = j.value("n", n);
    if (kind == "cardinality")
      return Property(dim, CardinalityProperty {j.at("Y").get<Index>()});
    if (kind == "isosceles")
      return Property(dim, IsoscelesProperty {j.at("m").get<Index>()});
    if (kind == "regular")
      return Property(dim, RegularProperty {j.at("m").get<Index>()});
    if (kind == "right")
      return Property(dim, RightProperty {j.at("m").get<Index>()});
    if (kind == "volume")
      return Property(dim, VolumeProperty {j.at("m").get<Index>(),
                                           parse_admissible(j.at("V"))});
    if (kind == "edge_lengths" || kind == "edge-lengths")
      return Property(dim, EdgeLengthsProperty {j.at("k").get<Index>(),
                                                parse_admissible(j.at("S"))});
    parse_error("unknown property kind '" + kind + "'");
  });
}

Property parse_property(std::string_view text, Index n) {
  const std::string s = trim(text);
  if (!s.empty() && s.front() == '{')
    return json_guard("property", [&] { return parse_property(Json::parse(s), n); });
  const auto c1 = s.find(':');
  if (c1 == std::string::npos)
    parse_error("property needs kind:parameter, got '" + s + "'");
  const std::string kind = s.substr(0, c1);
  const std::string rest = s.substr(c1 + 1);
  const auto integer = [&](const std::string &t) {
    const Rational v = parse_number(t);
    if (denominator(v) != 1)
      parse_error("expected an integer, got '" + t + "'");
    return static_cast<Index>(floor_to_int(v));
  };
  if (kind == "volume" || kind == "edge-lengths" || kind == "edge_lengths") {
    const auto c2 = rest.find(':');
    if (c2 == std::string::npos)
      parse_error(kind + " needs " + kind + ":<count>:<set>");
    const Index count = integer(rest.substr(0, c2));
    AdmissibleSet set = parse_admissible(std::string_view(rest).substr(c2 + 1));
    if (kind == "volume")
      return Property(n, VolumeProperty {count, std::move(set)});
    return Property(n, EdgeLengthsProperty {count, std::move(set)});
  }
  const Index value = integer(rest);
  if (kind == "cardinality")
    return Property(n, CardinalityProperty {value});
  if (kind == "isosceles")
    return Property(n, IsoscelesProperty {value});
  if (kind == "regular")
    return Property(n, RegularProperty {value});
  if (kind == "right")
    return Property(n, RightProperty {value});
  parse_error("unknown property '" + s + "'");
}

Json centers_json(const CenterSet &c) {
  return std::visit(
      overloaded {
          [](const AllCenters &a) { return Json {{"all", {{"half_width", a.half_width}}}}; },
          [](const BallUnionCenters &u) {
            Json balls = Json::array();
            for (const auto &b: u.balls)
              balls.push_back({{"center", vector_json(b.center)}, {"radius", b.radius}});
            return Json {{"balls", balls}};
          },
          [](const FiniteCenters &f) {
            Json pts = Json::array();
            for (const auto &p: f.points)
              pts.push_back(vector_json(p));
            return Json {{"finite", pts}};
          },
      },
      c);
}

CenterSet parse_centers(const Json &j) {
  if (j.is_string())
    return parse_centers(std::string_view(j.get_ref<const std::string &>()));
  return json_guard("centers", [&]() -> CenterSet {
    if (j.contains("all"))
      return AllCenters {j.at("all").value("half_width", 4.0)};
    if (j.contains("balls")) {
      BallUnionCenters u;
      for (const auto &b: j.at("balls"))
        u.balls.push_back({parse_vector(b.at("center")), b.at("radius").get<double>()});
      return u;
    }
    if (j.contains("finite")) {
      FiniteCenters f;
      for (const auto &p: j.at("finite"))
        f.points.push_back(parse_vector(p));
      return f;
    }
    parse_error("centers need one of all, balls, finite");
  });
}

CenterSet parse_centers(std::string_view text) {
  const std::string s = trim(text);
  if (s == "all")
    return AllCenters {};
  if (s.rfind("all:", 0) == 0)
    return AllCenters {to_double(parse_number(s.substr(4)))};
  if (!s.empty() && s.front() == '{')
    return json_guard("centers", [&] { return parse_centers(Json::parse(s)); });
  parse_error("unknown center set '" + s + "'");
}

Json condition_json(const QCondition &q) {
  return Json {{"colors", q.colors ? Json(*q.colors) : Json(nullptr)},
               {"property", property_json(q.property)},
               {"centers", centers_json(q.centers)},
               {"radii", admissible_json(q.radii)},
               {"epsilon", q.epsilon ? Json(*q.epsilon) : Json(nullptr)}};
}

QCondition parse_condition(const Json &j, Index n) {
  return json_guard("condition", [&] {
    QCondition q {std::nullopt, parse_property(j.at("property"), n), AllCenters {},
                 AdmissibleLengths::interval(0, Rational(1)), std::nullopt};
    if (j.contains("colors") && !j.at("colors").is_null())
      q.colors = j.at("colors").get<std::vector<Color>>();
    if (j.contains("centers"))
      q.centers = parse_centers(j.at("centers"));
    if (j.contains("radii"))
      q.radii = parse_admissible(j.at("radii"));
    if (j.contains("epsilon") && !j.at("epsilon").is_null())
      q.epsilon = j.at("epsilon").get<double>();
    return q;
  });
}

// Verdicts and reports ------------------------------------------------------

Json sphere_json(const Sphere &s) {
  return Json {{"center", vector_json(s.center())}, {"radius", s.radius()}};
}

Sphere parse_sphere(const Json &j) {
  return json_guard("sphere", [&] {
    return Sphere(parse_vector(j.at("center")), j.at("radius").get<double>());
  });
}

Json verdict_json(const Verdict &v) {
  Json out = std::visit(
      overloaded {
          [](const HoldsVacuously &) { return Json::object(); },
          [](const HoldsWithWitnesses &h) { return Json {{"count", h.count}}; },
          [](const Violation &x) {
            Json pts = Json::array();
            for (const auto &p: x.witness)
              pts.push_back(vector_json(p));
            return Json {{"sphere", sphere_json(x.sphere)},
                         {"witness", pts},
                         {"witness_color", x.witness_color},
                         {"center_color", x.center_color}};
          },
          [](const Inconclusive &i) { return Json {{"budget", i.budget}}; },
      },
      v);
  out["outcome"] = std::string(outcome_name(v));
  return out;
}

Verdict parse_verdict(const Json &j) {
  return json_guard("verdict", [&]() -> Verdict {
    const std::string outcome = j.at("outcome").get<std::string>();
    if (outcome == "holds_vacuously")
      return HoldsVacuously {};
    if (outcome == "holds_with_witnesses")
      return HoldsWithWitnesses {j.at("count").get<std::size_t>()};
    if (outcome == "inconclusive")
      return Inconclusive {j.at("budget").get<std::size_t>()};
    if (outcome == "violated") {
      std::vector<Eigen::VectorXd> pts;
      for (const auto &p: j.at("witness"))
        pts.push_back(parse_vector(p));
      return Violation {parse_sphere(j.at("sphere")), std::move(pts),
                        j.at("witness_color").get<Color>(),
                        j.at("center_color").get<Color>()};
    }
    parse_error("unknown outcome '" + outcome + "'");
  });
}

Json search_json(const SearchResult &r) {
  Json verdicts = Json::array();
  for (const auto &v: r.verdicts)
    verdicts.push_back({{"index", v.index},
                        {"sphere", sphere_json(v.sphere)},
                        {"verdict", verdict_json(v.verdict)}});
  return Json {{"verdicts", verdicts},
               {"certificate",
                r.certificate ? verdict_json(*r.certificate) : Json(nullptr)},
               {"sampled", r.sampled}};
}

SearchResult parse_search(const Json &j) {
  return json_guard("search result", [&] {
    SearchResult r;
    for (const auto &v: j.at("verdicts"))
      r.verdicts.push_back({v.at("index").get<std::size_t>(),
                            parse_sphere(v.at("sphere")),
                            parse_verdict(v.at("verdict"))});
    if (!j.at("certificate").is_null())
      r.certificate = std::get<Violation>(parse_verdict(j.at("certificate")));
    r.sampled = j.at("sampled").get<std::size_t>();
    return r;
  });
}

template <Scalar T>
Json config_points_json(const FiniteConfig<T> &cfg) {
  Json out = Json::array();
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    Json p {{"coords", vector_json(cfg.points[i])}};
    if (cfg.colors[i])
      p["color"] = *cfg.colors[i];
    out.push_back(std::move(p));
  }
  return out;
}

template <Scalar T>
FiniteConfig<T> parse_finite_config(const Json &j) {
  return json_guard("finite config", [&] {
    if (!j.is_array())
      parse_error("finite config must be a JSON list");
    FiniteConfig<T> cfg;
    for (const auto &p: j) {
      if constexpr (ExactScalar<T>)
        cfg.points.push_back(parse_exact_vector(p.at("coords")));
      else
        cfg.points.push_back(parse_vector(p.at("coords")));
      if (p.contains("color") && !p.at("color").is_null())
        cfg.colors.emplace_back(p.at("color").get<Color>());
      else
        cfg.colors.emplace_back(std::nullopt);
    }
    return cfg;
  });
}

namespace {
  template <Scalar T>
  Json certificate_json(const ForcingCertificate<T> &c) {
    return Json {{"center", c.center},
                 {"color", c.color},
                 {"radius_squared", exact_scalar_json(c.radius_squared)},
                 {"witnesses", c.witnesses}};
  }
}  // namespace

template <Scalar T>
Json propagation_json(const PropagationResult<T> &r) {
  Json forced = Json::array();
  for (const auto &c: r.forced)
    forced.push_back(certificate_json(c));
  Json contradiction = nullptr;
  if (r.contradiction) {
    const auto &c = *r.contradiction;
    contradiction = {{"point", c.point},
                     {"first", certificate_json(c.first)},
                     {"second", c.second ? certificate_json(*c.second) : Json(nullptr)},
                     {"assigned", c.assigned ? Json(*c.assigned) : Json(nullptr)}};
  }
  return Json {{"rounds", r.rounds},
               {"passes", r.passes},
               {"final", config_points_json(r.config)},
               {"forced", forced},
               {"round_sizes", r.round_sizes},
               {"contradiction", contradiction}};
}

template Json config_points_json<double>(const FiniteConfig<double> &);
template Json config_points_json<Rational>(const FiniteConfig<Rational> &);
template FiniteConfig<double> parse_finite_config<double>(const Json &);
template FiniteConfig<Rational> parse_finite_config<Rational>(const Json &);
template Json propagation_json<double>(const PropagationResult<double> &);
template Json propagation_json<Rational>(const PropagationResult<Rational> &);

// Run configuration ---------------------------------------------------------

Json run_config_json(const RunConfig &c) {
  return Json {{"command", c.command},
               {"n", c.n},
               {"mode", std::string(to_string(c.mode))},
               {"seed", c.seed},
               {"budget_spheres", c.budget_spheres},
               {"budget_witnesses", c.budget_witnesses},
               {"threads", c.threads},
               {"coloring", c.coloring},
               {"property", c.property},
               {"radii", c.radii},
               {"centers", c.centers},
               {"epsilon", c.epsilon ? Json(*c.epsilon) : Json(nullptr)},
               {"colors", c.colors ? Json(*c.colors) : Json(nullptr)},
               {"out", c.out},
               {"extra", c.extra}};
}

RunConfig parse_run_config(const Json &j, RunConfig base) {
  return json_guard("config", [&] {
    if (!j.is_object())
      parse_error("config must be a JSON object");
    for (const auto &[key, value]: j.items()) {
      if (key == "command")
        base.command = value.get<std::string>();
      else if (key == "n")
        base.n = value.get<Index>();
      else if (key == "mode")
        base.mode = parse_mode(value.get<std::string>());
      else if (key == "seed")
        base.seed = value.get<std::uint64_t>();
      else if (key == "budget_spheres")
        base.budget_spheres = value.get<std::size_t>();
      else if (key == "budget_witnesses")
        base.budget_witnesses = value.get<std::size_t>();
      else if (key == "threads")
        base.threads = value.get<unsigned>();
      else if (key == "coloring")
        base.coloring = value;
      else if (key == "property")
        base.property = value;
      else if (key == "radii")
        base.radii = value;
      else if (key == "centers")
        base.centers = value;
      else if (key == "epsilon")
        base.epsilon = value.is_null() ? std::nullopt
                                       : std::optional<double>(value.get<double>());
      else if (key == "colors")
        base.colors = value.is_null()
                          ? std::nullopt
                          : std::optional<std::vector<Color>>(
                                value.get<std::vector<Color>>());
      else if (key == "out")
        base.out = value.get<std::string>();
      else if (key == "extra")
        base.extra.update(value);
      else
        parse_error("unknown config key '" + key + "'");
    }
    return base;
  });
}

Coloring coloring_of(const RunConfig &c) {
  if (c.coloring.is_null())
    parse_error("no coloring given");
  return parse_coloring(c.coloring, c.n);
}

QCondition condition_of(const RunConfig &c) {
  if (c.property.is_null())
    parse_error("no property given");
  QCondition q {c.colors, parse_property(c.property, c.n), AllCenters {},
               AdmissibleLengths::interval(0, Rational(1)), std::nullopt};
  if (!c.centers.is_null())
    q.centers = parse_centers(c.centers);
  if (!c.radii.is_null())
    q.radii = parse_admissible(c.radii);
  q.epsilon = c.epsilon;
  validate(q);
  return q;
}

}  // namespace hsforce
