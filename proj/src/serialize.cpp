// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#include "serialize.hpp"

#include <cmath>
#include <initializer_list>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace tetraprop {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  require(j.is_object(), std::string(what) + " must be a JSON object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!ok.count(key)) throw InvalidInput(std::string("unknown key '") + key + "' in " + what);
  }
}

double number(const Json& j, const char* key) {
  const Json& v = j.at(key);
  require(v.is_number(), std::string("'") + key + "' must be a number");
  return v.get<double>();
}

double number_or(const Json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j, key) : fallback;
}

int integer_or(const Json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  require(v.is_number_integer(), std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<double> split_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  in.imbue(std::locale::classic());
  std::string item;
  while (std::getline(in, item, ',')) {
    std::istringstream cell(item);
    cell.imbue(std::locale::classic());
    double v = 0.0;
    cell >> v;
    require(!cell.fail() && (cell >> std::ws).eof(), "cannot parse number '" + item + "'");
    out.push_back(v);
  }
  require(!out.empty(), "empty coordinate list");
  return out;
}

Json base_to_json(const ConeBase& base) {
  return std::visit(Overloaded{
                        [](const RoundSphere& s) { return Json{{"kind", "round_sphere"}, {"rho", s.rho}}; },
                        [](const ProjectivePlane& s) { return Json{{"kind", "projective_plane"}, {"rho", s.rho}}; },
                    },
                    base);
}

ConeBase base_from_json(const Json& j) {
  const SpaceSpec s = space_from_json(j);
  if (const auto* r = std::get_if<RoundSphere>(&s)) return *r;
  if (const auto* p = std::get_if<ProjectivePlane>(&s)) return *p;
  throw InvalidInput("cone base must be round_sphere or projective_plane");
}

SpaceSpec space_from_shorthand(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ':')) parts.push_back(item);
  require(!parts.empty(), "empty space name");
  const std::string& name = parts[0];
  auto param = [&](std::size_t i, double fallback) {
    return parts.size() > i ? split_numbers(parts[i]).at(0) : fallback;
  };
  require(parts.size() <= 3, "too many ':' fields in space '" + text + "'");
  SpaceSpec out;
  if (name.rfind("euclidean", 0) == 0 && name.size() > 9) {
    out = Euclidean{static_cast<int>(split_numbers(name.substr(9)).at(0))};
  } else if (name == "euclidean") {
    out = Euclidean{static_cast<int>(param(1, 2))};
  } else if (name == "round_sphere") {
    out = RoundSphere{param(1, 1.0)};
  } else if (name == "projective_plane") {
    out = ProjectivePlane{param(1, 1.0)};
  } else if (name == "cone") {
    out = Cone{RoundSphere{param(1, 1.0)}};
  } else if (name == "cone_rp2") {
    out = Cone{ProjectivePlane{param(1, 1.0)}};
  } else if (name == "cone_projective_plane") {
    out = ConeOfProjectivePlane{};
  } else if (name == "glued_planes") {
    out = GluedPlanes{};
  } else if (name == "plane_with_ray") {
    out = PlaneWithRay{};
  } else if (name == "cone_slice") {
    out = ConeSlice{RoundSphere{param(1, 1.0)}, param(2, 1.0)};
  } else {
    throw InvalidInput("unknown space '" + text + "'");
  }
  validate_space(out);
  return out;
}

Sheet default_sheet(const SpaceSpec& space) {
  if (std::holds_alternative<GluedPlanes>(space)) return Sheet::kXY;
  if (std::holds_alternative<PlaneWithRay>(space)) return Sheet::kPlane;
  return Sheet::kNone;
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

std::vector<std::string> strings_from(const Json& j) { return j.get<std::vector<std::string>>(); }

Json claim_value(const ClaimValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

ClaimValue claim_value_from(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  require(j.is_number(), "claim values are numbers or strings");
  return j.get<double>();
}

}  // namespace

std::string to_string(Sheet sheet) {
  switch (sheet) {
    case Sheet::kNone:
      return "none";
    case Sheet::kXY:
      return "xy";
    case Sheet::kYZ:
      return "yz";
    case Sheet::kPlane:
      return "plane";
    case Sheet::kRay:
      return "ray";
  }
  return "none";
}

Sheet sheet_from_string(const std::string& s) {
  for (Sheet k : {Sheet::kNone, Sheet::kXY, Sheet::kYZ, Sheet::kPlane, Sheet::kRay}) {
    if (to_string(k) == s) return k;
  }
  throw InvalidInput("unknown sheet '" + s + "'");
}

Json to_json(const SpaceSpec& space) {
  return std::visit(Overloaded{
                        [](const Euclidean& e) { return Json{{"kind", "euclidean"}, {"n", e.dim}}; },
                        [](const RoundSphere& s) { return Json{{"kind", "round_sphere"}, {"rho", s.rho}}; },
                        [](const ProjectivePlane& s) { return Json{{"kind", "projective_plane"}, {"rho", s.rho}}; },
                        [](const Cone& c) { return Json{{"kind", "cone"}, {"base", base_to_json(c.base)}}; },
                        [](const ConeOfProjectivePlane&) { return Json{{"kind", "cone_projective_plane"}}; },
                        [](const GluedPlanes&) { return Json{{"kind", "glued_planes"}}; },
                        [](const PlaneWithRay&) { return Json{{"kind", "plane_with_ray"}}; },
                        [](const ConeSlice& c) {
                          return Json{{"kind", "cone_slice"}, {"base", base_to_json(c.base)}, {"s", c.s}};
                        },
                    },
                    space);
}

SpaceSpec space_from_json(const Json& j) {
  if (j.is_string()) return space_from_shorthand(j.get<std::string>());
  require(j.is_object() && j.contains("kind"), "space must be a name or an object with 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  SpaceSpec out;
  if (kind == "euclidean") {
    check_keys(j, {"kind", "n"}, "euclidean space");
    out = Euclidean{integer_or(j, "n", 2)};
  } else if (kind == "round_sphere") {
    check_keys(j, {"kind", "rho"}, "round_sphere space");
    out = RoundSphere{number_or(j, "rho", 1.0)};
  } else if (kind == "projective_plane") {
    check_keys(j, {"kind", "rho"}, "projective_plane space");
    out = ProjectivePlane{number_or(j, "rho", 1.0)};
  } else if (kind == "cone") {
    check_keys(j, {"kind", "base"}, "cone space");
    out = Cone{base_from_json(j.at("base"))};
  } else if (kind == "cone_projective_plane") {
    check_keys(j, {"kind"}, "cone_projective_plane space");
    out = ConeOfProjectivePlane{};
  } else if (kind == "glued_planes") {
    check_keys(j, {"kind"}, "glued_planes space");
    out = GluedPlanes{};
  } else if (kind == "plane_with_ray") {
    check_keys(j, {"kind"}, "plane_with_ray space");
    out = PlaneWithRay{};
  } else if (kind == "cone_slice") {
    check_keys(j, {"kind", "base", "s"}, "cone_slice space");
    out = ConeSlice{base_from_json(j.at("base")), number_or(j, "s", 1.0)};
  } else {
    throw InvalidInput("unknown space kind '" + kind + "'");
  }
  validate_space(out);
  return out;
}

Json to_json(const Point& p, const SpaceSpec& space) {
  return Json{{"sheet", to_string(p.sheet)}, {"coords", point_coords(space, p)}};
}

Point point_from_json(const Json& j) {
  check_keys(j, {"sheet", "coords"}, "point");
  Point p;
  p.sheet = sheet_from_string(j.value("sheet", std::string("none")));
  const std::vector<double> c = j.at("coords").get<std::vector<double>>();
  require(c.size() <= p.x.size(), "too many point coordinates");
  for (std::size_t i = 0; i < c.size(); ++i) p.x[i] = c[i];
  return p;
}

Point make_point(const SpaceSpec& space, Sheet sheet, const std::vector<double>& coords) {
  if (sheet == Sheet::kNone) sheet = default_sheet(space);
  auto need = [&](std::size_t n) {
    if (coords.size() != n) {
      throw InvalidInput("point needs " + std::to_string(n) + " coordinates in " + space_name(space) + ", got " +
                         std::to_string(coords.size()));
    }
  };
  auto direction = [&]() -> Vec3 {
    const double norm = std::hypot(coords[0], coords[1], coords[2]);
    require(norm > 0.0, "direction must be nonzero");
    return {coords[0] / norm, coords[1] / norm, coords[2] / norm};
  };
  const Point p = std::visit(
      Overloaded{
          [&](const Euclidean& e) {
            need(e.dim);
            return euclidean_point(coords);
          },
          [&](const Cone&) {
            need(4);
            require(coords[3] >= 0.0, "cone radial coordinate must be >= 0");
            return coords[3] == 0.0 ? cone_vertex() : cone_point(direction(), coords[3]);
          },
          [&](const ConeOfProjectivePlane&) {
            need(3);
            return Point{Sheet::kNone, {coords[0], coords[1], coords[2], 0.0}};
          },
          [&](const GluedPlanes&) {
            need(2);
            require(sheet == Sheet::kXY || sheet == Sheet::kYZ, "glued_planes points live on sheet xy or yz");
            return sheet == Sheet::kXY ? xy_point(coords[0], coords[1]) : yz_point(coords[0], coords[1]);
          },
          [&](const PlaneWithRay&) {
            require(sheet == Sheet::kPlane || sheet == Sheet::kRay, "plane_with_ray points live on plane or ray");
            if (sheet == Sheet::kRay) {
              need(1);
              return ray_point(coords[0]);
            }
            need(2);
            return plane_point(coords[0], coords[1]);
          },
          [&](const auto&) {
            need(3);
            return sphere_point(direction());
          },
      },
      space);
  return canonical(space, p);
}

namespace {

Point point_spec(const SpaceSpec& space, const Json& j) {
  if (j.is_object()) return canonical(space, point_from_json(j));
  if (j.is_array()) return make_point(space, Sheet::kNone, j.get<std::vector<double>>());
  require(j.is_string(), "point must be an object, an array or a string");
  std::string text = j.get<std::string>();
  if (text == "vertex" || text == "origin") {
    if (std::holds_alternative<Cone>(space)) return cone_vertex();
    if (std::holds_alternative<ConeOfProjectivePlane>(space)) return Point{};
    if (std::holds_alternative<GluedPlanes>(space)) return xy_point(0.0, 0.0);
    if (std::holds_alternative<PlaneWithRay>(space)) return plane_point(0.0, 0.0);
    if (const auto* e = std::get_if<Euclidean>(&space)) return euclidean_point(std::vector<double>(e->dim, 0.0));
    throw InvalidInput("'" + text + "' has no meaning in " + space_name(space));
  }
  Sheet sheet = Sheet::kNone;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    sheet = sheet_from_string(text.substr(0, colon));
    text = text.substr(colon + 1);
  }
  return make_point(space, sheet, split_numbers(text));
}

}  // namespace

Json to_json(const Tolerances& t) {
  return Json{{"tau_sphere", t.tau_sphere}, {"delta_cluster", t.delta_cluster},
              {"kappa_continuum", t.kappa_continuum}, {"grid_m", t.grid_m},
              {"refine_iters", t.refine_iters}, {"samples", t.samples},
              {"descents", t.descents}, {"seed", t.seed}};
}

Tolerances tolerances_from_json(const Json& j, double r) {
  Tolerances t = Tolerances::for_radius(r);
  if (j.is_null()) return t;
  check_keys(j, {"tau_sphere", "delta_cluster", "kappa_continuum", "grid_m", "refine_iters", "samples", "descents",
                 "seed"},
             "tolerances");
  t.tau_sphere = number_or(j, "tau_sphere", t.tau_sphere);
  t.delta_cluster = number_or(j, "delta_cluster", t.delta_cluster);
  t.kappa_continuum = number_or(j, "kappa_continuum", t.kappa_continuum);
  t.grid_m = integer_or(j, "grid_m", t.grid_m);
  t.refine_iters = integer_or(j, "refine_iters", t.refine_iters);
  t.samples = integer_or(j, "samples", t.samples);
  t.descents = integer_or(j, "descents", t.descents);
  if (j.contains("seed")) t.seed = j.at("seed").get<std::uint64_t>();
  t.validate();
  return t;
}

Json to_json(const TetraQuery& q) {
  Json j{{"space", to_json(q.space)}, {"p", to_json(q.p, q.space)}, {"r", q.r},     {"n", q.n},
         {"alpha", q.alpha},          {"beta", q.beta}};
  if (q.C) j["C"] = *q.C;
  Json apexes = Json::array();
  for (const Point& a : q.apexes) apexes.push_back(to_json(a, q.space));
  j["apexes"] = apexes;
  j["tolerances"] = to_json(q.tol);
  j["max_n"] = q.max_n;
  j["refine_starts"] = q.refine_starts;
  j["refine_iters"] = q.refine_iters;
  return j;
}

TetraQuery query_from_json(const Json& j) {
  check_keys(j, {"space", "p", "r", "n", "alpha", "beta", "C", "legacy_beta", "apexes", "tolerances", "seed",
                 "workers", "max_n", "refine_starts", "refine_iters"},
             "query");
  TetraQuery q;
  require(j.contains("space"), "query needs 'space'");
  require(j.contains("p"), "query needs 'p'");
  require(j.contains("r"), "query needs 'r'");
  q.space = space_from_json(j.at("space"));
  q.p = point_spec(q.space, j.at("p"));
  q.r = number(j, "r");
  require(q.r > 0.0 && std::isfinite(q.r), "r must be positive");
  q.n = integer_or(j, "n", natural_dimension(q.space));
  if (j.contains("legacy_beta")) {
    require(!j.contains("alpha") && !j.contains("beta"), "give either legacy_beta or alpha/beta, not both");
    const double b = number(j, "legacy_beta");
    require(b > 0.0 && b < 1.0, "legacy_beta must lie in (0, 1)");
    q.alpha = 1.0 - b;
    q.beta = 1.0 + b;
  } else {
    q.alpha = number_or(j, "alpha", q.alpha);
    q.beta = number_or(j, "beta", q.beta);
  }
  if (j.contains("C") && !j.at("C").is_null()) q.C = number(j, "C");
  if (j.contains("apexes")) {
    for (const Json& a : j.at("apexes")) q.apexes.push_back(point_spec(q.space, a));
  }
  q.tol = tolerances_from_json(j.contains("tolerances") ? j.at("tolerances") : Json(), q.r);
  if (j.contains("seed")) q.tol.seed = j.at("seed").get<std::uint64_t>();
  q.workers = integer_or(j, "workers", q.workers);
  q.max_n = integer_or(j, "max_n", q.max_n);
  q.refine_starts = integer_or(j, "refine_starts", q.refine_starts);
  q.refine_iters = integer_or(j, "refine_iters", q.refine_iters);
  require(q.workers >= 1, "workers must be >= 1");
  require(q.refine_starts >= 0 && q.refine_iters >= 0, "refinement settings must be >= 0");
  return q;
}

Json to_json(const TetraReport& r, const SpaceSpec& space) {
  Json apexes = Json::array();
  for (const Point& a : r.apexes_used) apexes.push_back(to_json(a, space));
  return Json{{"verdict", to_string(r.verdict)}, {"C_best", r.c_best},         {"t_witness", r.t_witness},
              {"apexes_used", apexes},           {"grid_min", r.grid_min},     {"refined_min", r.refined_min},
              {"notes", strings(r.notes)}};
}

TetraReport report_from_json(const Json& j) {
  check_keys(j, {"verdict", "C_best", "t_witness", "apexes_used", "grid_min", "refined_min", "notes"},
             "tetrahedral report");
  TetraReport r;
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.c_best = number(j, "C_best");
  r.t_witness = j.at("t_witness").get<std::vector<double>>();
  for (const Json& a : j.at("apexes_used")) r.apexes_used.push_back(point_from_json(a));
  r.grid_min = number(j, "grid_min");
  r.refined_min = number(j, "refined_min");
  r.notes = strings_from(j.at("notes"));
  return r;
}

Json to_json(const QuadratureSpec& q) { return Json{{"m", q.m}, {"rule", to_string(q.rule)}}; }

QuadratureSpec quadrature_from_json(const Json& j) {
  QuadratureSpec q;
  if (j.is_null()) return q;
  check_keys(j, {"m", "rule"}, "quadrature");
  q.m = integer_or(j, "m", q.m);
  if (j.contains("rule")) q.rule = quad_rule_from_string(j.at("rule").get<std::string>());
  q.validate();
  return q;
}

Json to_json(const IntegralReport& r) {
  return Json{{"integral_value", r.integral_value}, {"bound", r.bound},
              {"error_estimate", r.error_estimate}, {"satisfied", r.satisfied},
              {"notes", strings(r.notes)}};
}

IntegralReport integral_report_from_json(const Json& j) {
  check_keys(j, {"integral_value", "bound", "error_estimate", "satisfied", "notes"}, "integral report");
  IntegralReport r;
  r.integral_value = number(j, "integral_value");
  r.bound = number(j, "bound");
  r.error_estimate = number(j, "error_estimate");
  r.satisfied = j.at("satisfied").get<bool>();
  r.notes = strings_from(j.at("notes"));
  return r;
}

Json to_json(const SlicedFillingReport& r) {
  return Json{{"certified_mass_lower_bound", r.value}, {"error_estimate", r.error_estimate},
              {"lo", r.lo}, {"hi", r.hi}, {"notes", strings(r.notes)}};
}

SlicedFillingReport sliced_filling_from_json(const Json& j) {
  check_keys(j, {"certified_mass_lower_bound", "error_estimate", "lo", "hi", "notes"}, "sliced filling report");
  SlicedFillingReport r;
  r.value = number(j, "certified_mass_lower_bound");
  r.error_estimate = number(j, "error_estimate");
  r.lo = j.at("lo").get<std::vector<double>>();
  r.hi = j.at("hi").get<std::vector<double>>();
  r.notes = strings_from(j.at("notes"));
  return r;
}

Json to_json(const VolumeResult& v) {
  return Json{{"value", v.value}, {"stderr", v.std_error}, {"method", to_string(v.method)}, {"dimension", v.dimension}};
}

VolumeResult volume_result_from_json(const Json& j) {
  check_keys(j, {"value", "stderr", "method", "dimension"}, "volume result");
  VolumeResult v;
  v.value = number(j, "value");
  v.std_error = number(j, "stderr");
  v.method = volume_method_from_string(j.at("method").get<std::string>());
  v.dimension = j.at("dimension").get<int>();
  return v;
}

Json to_json(const VolumeBoundReport& r) {
  return Json{{"verdict", to_string(r.verdict)}, {"volume", to_json(r.volume)}, {"bound", r.bound},
              {"slack", r.slack},                {"notes", strings(r.notes)}};
}

VolumeBoundReport volume_bound_from_json(const Json& j) {
  check_keys(j, {"verdict", "volume", "bound", "slack", "notes"}, "volume bound report");
  VolumeBoundReport r;
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.volume = volume_result_from_json(j.at("volume"));
  r.bound = number(j, "bound");
  r.slack = number(j, "slack");
  r.notes = strings_from(j.at("notes"));
  return r;
}

Region region_from_json(const Json& j, const SpaceSpec& space) {
  require(j.is_object() && j.contains("kind"), "region must be an object with 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "ball") {
    check_keys(j, {"kind", "center", "radius"}, "ball region");
    return BallRegion{point_spec(space, j.at("center")), number(j, "radius")};
  }
  if (kind == "box") {
    check_keys(j, {"kind", "lo", "hi"}, "box region");
    return BoxRegion{j.at("lo").get<std::vector<double>>(), j.at("hi").get<std::vector<double>>()};
  }
  if (kind == "sheet") {
    check_keys(j, {"kind", "sheet", "half_width"}, "sheet region");
    return SheetRegion{sheet_from_string(j.value("sheet", std::string("none"))), number(j, "half_width")};
  }
  if (kind == "whole") {
    check_keys(j, {"kind"}, "whole region");
    return WholeSpace{};
  }
  throw InvalidInput("unknown region kind '" + kind + "'");
}

Json to_json(const Claim& c) {
  return Json{{"description", c.description}, {"expected", claim_value(c.expected)},
              {"computed", claim_value(c.computed)}, {"tolerance", c.tolerance}, {"pass", c.pass}};
}

Claim claim_from_json(const Json& j) {
  check_keys(j, {"description", "expected", "computed", "tolerance", "pass"}, "claim");
  Claim c;
  c.description = j.at("description").get<std::string>();
  c.expected = claim_value_from(j.at("expected"));
  c.computed = claim_value_from(j.at("computed"));
  c.tolerance = number(j, "tolerance");
  c.pass = j.at("pass").get<bool>();
  return c;
}

Json to_json(const ExampleReport& r) {
  Json claims = Json::array();
  for (const Claim& c : r.claims) claims.push_back(to_json(c));
  return Json{{"example_id", r.example_id}, {"overall", r.overall}, {"claims", claims}, {"notes", strings(r.notes)}};
}

ExampleReport example_report_from_json(const Json& j) {
  check_keys(j, {"example_id", "overall", "claims", "notes"}, "example report");
  ExampleReport r;
  r.example_id = j.at("example_id").get<std::string>();
  r.overall = j.at("overall").get<bool>();
  for (const Json& c : j.at("claims")) r.claims.push_back(claim_from_json(c));
  r.notes = strings_from(j.at("notes"));
  return r;
}

Json to_json(const SliceConstants& k) {
  return Json{{"C_r", k.C_r}, {"beta_r", k.beta_r}, {"beta_r_min", k.beta_r_min}, {"r_prime", k.r_prime},
              {"alpha_image", k.alpha_image}, {"beta_image", k.beta_image}};
}

Json to_json(const ConeVertexParams& w) {
  return Json{{"alpha_min", w.alpha_min}, {"beta_max", w.beta_max}, {"window_nonempty", w.window_nonempty}};
}

}  // namespace tetraprop
