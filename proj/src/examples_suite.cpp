// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#include "examples_suite.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "bounds.hpp"
#include "checker.hpp"
#include "errors.hpp"
#include "integrals.hpp"
#include "rng.hpp"
#include "slicer.hpp"
#include "volume.hpp"

namespace tetraprop {

SliceConstants slice_constants(double r, double s, double C, double beta_in) {
  require(r > 0.0 && r <= std::numbers::pi / 2, "slice constants need 0 < r <= pi/2");
  require(s > 0.0, "slice level s must be positive");
  require(C > 0.0 && C * r <= std::numbers::pi, "slice constants need 0 < C r <= pi");
  require(beta_in > 0.0 && beta_in < 1.0, "beta must lie in (0, 1)");
  const double denom = 1.0 - std::cos(r);
  SliceConstants out;
  out.C_r = std::sqrt((1.0 - std::cos(C * r)) / denom);
  out.r_prime = std::sqrt(2.0 * s * s * denom);
  out.alpha_image = std::sqrt((1.0 - std::cos((1.0 - beta_in) * r)) / denom);
  out.beta_image = std::sqrt((1.0 - std::cos((1.0 + beta_in) * r)) / denom);
  const double lower = 1.0 - out.alpha_image;
  const double upper = out.beta_image - 1.0;
  out.beta_r = std::max(lower, upper);
  out.beta_r_min = std::min(lower, upper);
  return out;
}

ConeVertexParams cone_vertex_params(double rho, double d12) {
  require(rho > 0.0 && rho <= 1.0, "rho must lie in (0, 1]");
  require(d12 > 0.0 && d12 < std::numbers::pi * rho, "d12 must lie in (0, pi rho)");
  ConeVertexParams out;
  out.alpha_min = 2.0 * std::sin(0.25 * d12);
  out.beta_max = 2.0 * std::min(std::sin(0.75 * d12), std::sin(0.5 * (std::numbers::pi * rho - 0.5 * d12)));
  out.window_nonempty = out.alpha_min < out.beta_max;
  return out;
}

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids = {"planes",      "plane_ray",   "cone_small_diam", "cone_vertex",
                                               "slice_lemma", "rp2_cone",    "modified_planes", "modified_plane_ray"};
  return ids;
}

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 4);
  return std::string(buf, res.ptr);
}

class Builder {
 public:
  explicit Builder(std::string id) { report_.example_id = std::move(id); }

  void verdict(const std::string& what, Verdict expected, const TetraReport& got) {
    add({what, to_string(expected), to_string(got.verdict), 0.0, got.verdict == expected});
  }
  void close(const std::string& what, double expected, double computed, double tol) {
    add({what, expected, computed, tol, std::abs(expected - computed) <= tol});
  }
  void at_least(const std::string& what, double threshold, double computed) {
    add({what, ">= " + num(threshold), computed, 0.0, computed >= threshold});
  }
  void at_most(const std::string& what, double threshold, double computed) {
    add({what, "<= " + num(threshold), computed, 0.0, computed <= threshold});
  }
  void positive(const std::string& what, double computed) {
    add({what, std::string("> 0"), computed, 0.0, computed > 0.0});
  }
  void label(const std::string& what, const std::string& expected, const std::string& computed) {
    add({what, expected, computed, 0.0, expected == computed});
  }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  ExampleReport finish() {
    report_.overall = std::all_of(report_.claims.begin(), report_.claims.end(), [](const Claim& c) { return c.pass; });
    return std::move(report_);
  }

 private:
  void add(Claim c) { report_.claims.push_back(std::move(c)); }
  ExampleReport report_;
};

struct Env {
  std::uint64_t seed;
  int workers;

  TetraQuery query(SpaceSpec space, Point p, double r, int n, std::vector<Point> apexes, double alpha,
                   double beta, std::optional<double> C = std::nullopt) const {
    TetraQuery q;
    q.space = std::move(space);
    q.p = p;
    q.r = r;
    q.n = n;
    q.apexes = std::move(apexes);
    q.alpha = alpha;
    q.beta = beta;
    q.C = C;
    q.tol = Tolerances::for_radius(r);
    q.tol.seed = seed;
    q.workers = workers;
    return q;
  }
};

constexpr int kSearchBudget = 64;

// Legacy (C, beta) check; alpha and beta of q are overwritten.
TetraReport legacy(TetraQuery q, double b) { return check_legacy(std::move(q), b); }

TetraReport legacy_search(TetraQuery q, double b) {
  q.alpha = 1.0 - b;
  q.beta = 1.0 + b;
  TetraReport rep = search_apexes(q, kSearchBudget).report;
  return rep;
}

// ---------------------------------------------------------------------------

ExampleReport ex_planes(const Env& env) {
  Builder out("planes");
  const SpaceSpec X = GluedPlanes{};
  const double C = 0.05;
  const double floor_beta = std::sqrt(2.0) - 1.0;
  out.note("p = (x, 0) on the xy sheet, r = 1, apex p1 = (x + r sign x, 0); verdicts use C = 0.05");

  for (double x : {0.1, 0.5}) {
    const double thr = std::sqrt(2.0 + 2.0 * x) - 1.0;
    auto q = env.query(X, xy_point(x, 0.0), 1.0, 2, {xy_point(x + 1.0, 0.0)}, 0.5, 1.5, C);
    out.verdict("x = " + num(x) + ": HOLDS with beta = sqrt(2+2x) - 1 - 0.05 = " + num(thr - 0.05), Verdict::kHolds,
                legacy(q, thr - 0.05));
    out.verdict("x = " + num(x) + ": FAILS with beta = sqrt(2+2x) - 1 + 0.05 = " + num(thr + 0.05), Verdict::kFails,
                legacy(q, thr + 0.05));
  }
  {
    auto q = env.query(X, xy_point(0.5, 0.0), 1.0, 2, {xy_point(1.5, 0.0)}, 0.5, 1.5, C);
    out.verdict("x = 0.5: HOLDS with the uniform beta = sqrt(2) - 1 - 0.05", Verdict::kHolds,
                legacy(q, floor_beta - 0.05));
  }
  {
    auto q = env.query(X, xy_point(2.0, 0.0), 1.0, 2, {xy_point(3.0, 0.0)}, 0.5, 1.5, C);
    out.verdict("r <= |x| (x = 2, r = 1): HOLDS with beta = 0.9", Verdict::kHolds, legacy(q, 0.9));
  }

  // Volume bound at a seam point.
  auto q = env.query(X, xy_point(0.0, 0.0), 1.0, 2, {xy_point(1.0, 0.0)}, 0.5, 1.5);
  const TetraReport cert = legacy(q, floor_beta - 0.05);
  out.verdict("seam point p = 0: certified with beta = sqrt(2) - 1 - 0.05", Verdict::kHolds, cert);
  const VolumeResult mc = ball_volume(X, q.p, 1.0, VolumeMethod::kMonteCarlo, 100000, env.seed, env.workers);
  out.close("seam ball area (Monte Carlo, 1e5 samples) against 1.5 pi within 3 stderr", 1.5 * kPi, mc.value,
            3.0 * mc.std_error);
  if (cert.c_best > 0.0) {
    const VolumeBoundReport vb = verify_volume_bound(X, q.p, 1.0, cert.c_best, 1.0 - (floor_beta - 0.05),
                                                     1.0 + (floor_beta - 0.05), VolumeMethod::kMonteCarlo, 100000,
                                                     env.seed, env.workers);
    out.at_least("seam ball area over C (beta - alpha) r^2 (slack)", 1.0, vb.slack);
  }
  return out.finish();
}

ExampleReport ex_plane_ray(const Env& env) {
  Builder out("plane_ray");
  const SpaceSpec X = PlaneWithRay{};
  const double C = 0.05;
  out.note("plane points use p1 = p + r p/|p|; ray points p = (0, 0, 1) use p1 in the plane with |p1| = r - |p|");

  {
    auto q = env.query(X, plane_point(1.0, 0.0), 0.5, 2, {plane_point(1.5, 0.0)}, 0.5, 1.5, C);
    out.verdict("plane point |p| = 1, r = 0.5: HOLDS with beta = 0.5", Verdict::kHolds, legacy(q, 0.5));
  }
  {
    auto q = env.query(X, plane_point(1.0, 0.0), 2.0, 2, {plane_point(3.0, 0.0)}, 0.5, 1.5, C);
    out.verdict("plane point |p| = 1, r = 2: HOLDS with beta = 0.5", Verdict::kHolds, legacy(q, 0.5));
  }
  {
    auto q = env.query(X, plane_point(0.0, 0.0), 1.0, 2, {plane_point(1.0, 0.0)}, 0.5, 1.5, C);
    out.verdict("plane origin, r = 1: HOLDS with beta = 0.5", Verdict::kHolds, legacy(q, 0.5));
  }
  {
    const double r = 2.5;
    const double thr = 1.0 - 2.0 / r;
    auto q = env.query(X, ray_point(1.0), r, 2, {plane_point(r - 1.0, 0.0)}, 0.5, 1.5, C);
    out.verdict("ray point, r = 2.5: HOLDS with beta = 1 - 2|p|/r - 0.05 = " + num(thr - 0.05), Verdict::kHolds,
                legacy(q, thr - 0.05));
    out.verdict("ray point, r = 2.5: FAILS with beta = 1 - 2|p|/r + 0.05 (apex search)", Verdict::kFails,
                legacy_search(q, thr + 0.05));
  }
  {
    auto q = env.query(X, ray_point(1.0), 1.5, 2, {}, 0.5, 1.5, C);
    out.verdict("ray point, r = 1.5 <= 2|p|: FAILS with beta = 0.1 (apex search)", Verdict::kFails,
                legacy_search(q, 0.1));
  }
  {
    auto q = env.query(X, ray_point(1.0), 0.9, 2, {}, 0.5, 1.5, C);
    out.close("ray point, r = 0.9 <= |p|: C_best over the apex search", 0.0, legacy_search(q, 0.5).c_best, 0.0);
  }
  return out.finish();
}

ExampleReport ex_cone_small_diam(const Env& env) {
  Builder out("cone_small_diam");
  const double r = 1.0;
  out.note("base S^2(rho) has diameter pi rho < pi/3; probes are random pairs on S(o; r)");
  for (double rho : {0.1, 0.2, 0.25, 0.3}) {
    const SpaceSpec X = Cone{RoundSphere{rho}};
    Rng rng(mix_seed(env.seed, static_cast<std::uint64_t>(rho * 1000)));
    double worst_ratio = 0.0;
    double worst_h = 0.0;
    const Tolerances tol = [&] {
      Tolerances t = Tolerances::for_radius(r);
      t.seed = env.seed;
      return t;
    }();
    for (int i = 0; i < 100; ++i) {
      const Vec3 u = rng.unit3();
      const Vec3 v = rng.unit3();
      const double d = base_distance(RoundSphere{rho}, u, v);
      worst_ratio = std::max(worst_ratio, 2.0 * r * r * (1.0 - std::cos(d)) / (r * r));
      const Point apex = cone_point(u, r);
      const double t[1] = {r};
      worst_h = std::max(worst_h, h_value(X, cone_vertex(), std::span<const Point>(&apex, 1), r, t, tol));
    }
    out.at_most("rho = " + num(rho) + ": max over 100 pairs of 2r^2(1 - cos d)/r^2 stays below 1", 1.0,
                worst_ratio);
    out.close("rho = " + num(rho) + ": max over 100 probes of h(o, (x, r); r, r)", 0.0, worst_h, 0.0);

    auto q = env.query(X, cone_vertex(), r, 2, {cone_point({0.0, 0.0, 1.0}, r)}, 0.5, 1.5, 0.01);
    if (rho == 0.25) {
      out.verdict("rho = 0.25: legacy check at the vertex with beta = 0.5", Verdict::kFails, legacy(q, 0.5));
      q.alpha = 0.5;
      q.beta = 1.5;
      const IntegralReport integ = integral_tetra(q, QuadratureSpec{});
      out.close("rho = 0.25: integral of h over [0.5 r, 1.5 r]", 0.0, integ.integral_value, 0.0);
      out.label("rho = 0.25: integral property with C = 0.01", "false", integ.satisfied ? "true" : "false");
      const Point apex = q.apexes[0];
      const SlicedFillingReport sf =
          sliced_filling_lower_bound(X, q.p, r, std::span<const Point>(&apex, 1), q.tol, QuadratureSpec{}, env.workers);
      out.close("rho = 0.25: sliced filling lower bound", 0.0, sf.value, 0.0);
    }
  }
  return out.finish();
}

// Closed-form spherical geometry: the two points at base distances a, b
// from p1, p2 (unit sphere, |p1 p2| = D) and the angle between them.
double pair_angle(double D, double a, double b) {
  const double u = std::cos(a);
  const double v = (std::cos(b) - u * std::cos(D)) / std::sin(D);
  const double w2 = 1.0 - u * u - v * v;
  if (w2 <= 0.0) return 0.0;
  return std::acos(std::clamp(1.0 - 2.0 * w2, -1.0, 1.0));
}

ExampleReport ex_cone_vertex(const Env& env) {
  Builder out("cone_vertex");
  const double D = kPi / 2;
  const ConeVertexParams w = cone_vertex_params(1.0, D);
  out.close("rho = 1, d12 = pi/2: alpha_min = 2 sin(pi/8)", 0.7653668647301796, w.alpha_min, 1e-12);
  out.close("rho = 1, d12 = pi/2: beta_max = 2 sin(3 pi/8)", 1.8477590650225735, w.beta_max, 1e-12);

  const double alpha = w.alpha_min + 0.05;
  const double beta = w.beta_max - 0.05;
  const double a1 = 2.0 * std::asin(alpha / 2.0);
  const double b1 = 2.0 * std::asin(beta / 2.0);
  double dm = std::numeric_limits<double>::infinity();
  for (double a : {a1, b1}) {
    for (double b : {a1, b1}) dm = std::min(dm, pair_angle(D, a, b));
  }
  const double c_ref = 2.0 * std::sin(0.5 * dm);
  out.note("reference C = 2 sin(d(x_m, y_m)/2) from the t-square corners, closed-form spherical intersection: " +
           num(c_ref));

  const SpaceSpec X = Cone{RoundSphere{1.0}};
  auto q = env.query(X, cone_vertex(), 1.0, 3, {cone_point({1, 0, 0}, 1.0), cone_point({0, 1, 0}, 1.0)}, alpha,
                     beta);
  const TetraReport rep = check_tetrahedral(q);
  out.at_least("rho = 1: C_best at the vertex with alpha = alpha_min + 0.05, beta = beta_max - 0.05 (95% of reference)",
               0.95 * c_ref, rep.c_best);

  // Small base: the legacy property fails, the generalized one holds.
  const double rho = 0.25;
  const double d = kPi * rho / 2;
  const ConeVertexParams ws = cone_vertex_params(rho, d);
  out.label("rho = 0.25, d12 = pi rho/2: window nonempty", "true", ws.window_nonempty ? "true" : "false");
  const SpaceSpec Y = Cone{RoundSphere{rho}};
  const Vec3 u1 = {1, 0, 0};
  const Vec3 u2 = {std::cos(d / rho), std::sin(d / rho), 0};
  auto qs = env.query(Y, cone_vertex(), 1.0, 3, {cone_point(u1, 1.0), cone_point(u2, 1.0)}, ws.alpha_min + 0.05,
                      ws.beta_max - 0.05);
  const TetraReport small = check_tetrahedral(qs);
  out.positive("rho = 0.25: C_best inside the window", small.c_best);
  out.verdict("rho = 0.25: legacy check with beta = 0.5 at the same apexes", Verdict::kFails, legacy(qs, 0.5));

  const ConeVertexParams wide = cone_vertex_params(rho, 0.9 * kPi * rho);
  const bool formula = 2.0 * std::sin(0.25 * 0.9 * kPi * rho) <
                       2.0 * std::min(std::sin(0.75 * 0.9 * kPi * rho), std::sin(0.5 * (kPi * rho - 0.45 * kPi * rho)));
  out.label("rho = 0.25, d12 = 0.9 pi rho: window emptiness", formula ? "nonempty" : "empty",
            wide.window_nonempty ? "nonempty" : "empty");
  return out.finish();
}

ExampleReport ex_slice_lemma(const Env& env) {
  Builder out("slice_lemma");
  const double r = kPi / 2;
  const double s = 1.0;
  const SliceConstants k = slice_constants(r, s, 0.5, 0.5);
  const double denom = 1.0 - std::cos(r);
  out.close("C_r for C = 0.5", std::sqrt((1.0 - std::cos(0.5 * r)) / denom), k.C_r, 1e-12);
  out.close("r' for s = 1", std::sqrt(2.0), k.r_prime, 1e-12);
  out.close("beta_r = max of the two candidates", 1.0 - std::sqrt(1.0 - std::cos(kPi / 4)), k.beta_r, 1e-12);
  out.close("C_r for C = 1", 1.0, slice_constants(r, s, 1.0, 0.5).C_r, 1e-12);

  // Base S^2(1): (C, beta) at r = pi/2 with beta = 0.5.
  const Vec3 north = {0, 0, 1};
  const Vec3 east = {1, 0, 0};
  auto base = env.query(RoundSphere{1.0}, sphere_point(north), r, 2, {sphere_point(east)}, 0.5, 1.5, 0.5);
  const TetraReport base_rep = legacy(base, 0.5);
  out.verdict("base S^2(1): (0.5, 0.5) property at r = pi/2", Verdict::kHolds, base_rep);

  // Slice S^2 x {1} at r', on the image interval of [(1-b) r, (1+b) r].
  const SpaceSpec slice = ConeSlice{RoundSphere{1.0}, s};
  auto q = env.query(slice, sphere_point(north), k.r_prime, 2, {sphere_point(east)}, k.alpha_image, k.beta_image);
  const TetraReport rep = check_tetrahedral(q);
  out.at_least("slice: C_best on the image interval against 0.95 C_r", 0.95 * k.C_r, rep.c_best);
  const SliceConstants k1 = slice_constants(r, s, base_rep.c_best, 0.5);
  out.close("slice: C_best against C_r evaluated at the base C_best (5%)", k1.C_r, rep.c_best, 0.05 * k1.C_r);

  auto qmin = q;
  const TetraReport with_min = legacy(qmin, k.beta_r_min);
  out.at_least("slice: legacy check with the smaller candidate beta = " + num(k.beta_r_min) + " (0.95 C_r)",
               0.95 * k.C_r, with_min.c_best);
  const TetraReport with_max = legacy(q, k.beta_r);
  out.note("beta_r is implemented as the max of the two candidates (" + num(k.beta_r) + " vs " +
           num(k.beta_r_min) + "); the containment argument needs the min. With the max the legacy interval reaches " +
           num((1.0 + k.beta_r) * k.r_prime) + " > 2s = " + num(2.0 * s) + " (slice diameter) and the check gives " +
           to_string(with_max.verdict) + " with C_best = " + num(with_max.c_best));
  return out.finish();
}

Point rp_point(const Vec3& v) { return Point{Sheet::kNone, {v[0], v[1], v[2], 0.0}}; }

Vec3 rotate(const std::array<double, 4>& q, const Vec3& v) {
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  const double m[3][3] = {{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
                          {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
                          {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
  return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2], m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
          m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

ExampleReport ex_rp2_cone(const Env& env) {
  Builder out("rp2_cone");
  const SpaceSpec K = ConeOfProjectivePlane{};
  const SpaceSpec E3 = Euclidean{3};
  out.note("K(RP^2) realized as R^3 / {x ~ -x}; apexes at angle 41..45 degrees, s_i in [0.9 r, 1.1 r], random frames");

  int matched = 0;
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    Rng rng(mix_seed(env.seed, 0x52503200 + k));
    std::array<double, 4> quat = {rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    double norm = 0.0;
    for (double c : quat) norm += c * c;
    norm = std::sqrt(norm);
    for (double& c : quat) c /= norm;
    const double theta = (41.0 + k % 5) * kPi / 180.0;
    const double r = std::array<double, 3>{0.5, 1.0, 2.0}[k % 3];
    const Vec3 e1 = rotate(quat, {r, 0, 0});
    const Vec3 e2 = rotate(quat, {r * std::cos(theta), r * std::sin(theta), 0});
    const double s1 = r * (0.9 + 0.2 * rng.uniform());
    const double s2 = r * (0.9 + 0.2 * rng.uniform());

    Tolerances tol = Tolerances::for_radius(r);
    tol.seed = env.seed;
    const double zero[3] = {0, 0, 0};
    const SphereConstraint up[3] = {{euclidean_point(zero), r},
                                    {euclidean_point(e1), s1},
                                    {euclidean_point(e2), s2}};
    const SphereConstraint down[3] = {{rp_point({0, 0, 0}), r}, {rp_point(e1), s1}, {rp_point(e2), s2}};
    const IntersectionSet upstairs = solve_intersection(E3, up, tol);
    const IntersectionSet quotient = solve_intersection(K, down, tol);

    std::vector<Point> projected;
    for (const Cluster& c : upstairs.clusters) {
      projected.push_back(canonical(K, rp_point({c.representative.x[0], c.representative.x[1], c.representative.x[2]})));
    }
    auto one_way = [&](const std::vector<Point>& from, const std::vector<Cluster>& to) {
      double d = 0.0;
      for (const Point& a : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const Cluster& b : to) best = std::min(best, distance(K, a, b.representative));
        d = std::max(d, best);
      }
      return d;
    };
    std::vector<Cluster> proj_clusters;
    for (const Point& p : projected) proj_clusters.push_back(Cluster{p, 1, 0.0});
    std::vector<Point> quotient_points;
    for (const Cluster& c : quotient.clusters) quotient_points.push_back(c.representative);
    const double hd = std::max(one_way(projected, quotient.clusters), one_way(quotient_points, proj_clusters));
    const bool same = !upstairs.clusters.empty() && upstairs.clusters.size() == quotient.clusters.size() &&
                      !upstairs.is_continuum && !quotient.is_continuum && hd <= tol.delta_cluster;
    if (same) ++matched;
    worst = std::max(worst, hd / tol.delta_cluster);
  }
  out.close("probe configurations where pi(S upstairs) = S(pi(...)) within delta_cluster", 10.0, matched, 0.0);
  out.at_most("worst Hausdorff distance between the two sets, in delta_cluster units", 1.0, worst);

  const double c45 = std::cos(kPi / 4);
  auto q = env.query(K, rp_point({0, 0, 0}), 1.0, 3, {rp_point({1, 0, 0}), rp_point({c45, c45, 0})}, 0.5, 1.5);
  const TetraReport rep = legacy(q, 0.1);
  out.positive("vertex, r = 1, beta = 0.1: C_best", rep.c_best);
  out.verdict("vertex, r = 1, beta = 0.1", Verdict::kHolds, rep);
  return out.finish();
}

ExampleReport ex_modified_planes(const Env& env) {
  Builder out("modified_planes");
  const SpaceSpec X = GluedPlanes{};
  const double x = 0.5;
  const double r = 1.0;
  const double thr = std::sqrt(2.0 * r * r + 2.0 * r * x) / r;
  out.note("p = (0.5, 0) on the xy sheet, r = 1, threshold sqrt(2r^2 + 2r|x|)/r = " + num(thr));
  auto q = env.query(X, xy_point(x, 0.0), r, 2, {xy_point(x + r, 0.0)}, 0.5, thr - 0.05);
  out.verdict("(alpha, beta) = (0.5, threshold - 0.05)", Verdict::kHolds, check_tetrahedral(q));
  q.alpha = thr + 0.05;
  q.beta = 1.95;
  out.verdict("(alpha, beta) = (threshold + 0.05, 1.95)", Verdict::kHolds, check_tetrahedral(q));
  q.alpha = thr - 0.05;
  q.beta = thr + 0.05;
  q.C = 0.05;
  out.verdict("(alpha, beta) = threshold -+ 0.05 with C = 0.05", Verdict::kFails, check_tetrahedral(q));

  auto far = env.query(X, xy_point(2.0, 0.0), r, 2, {xy_point(3.0, 0.0)}, 0.1, 1.9);
  out.verdict("r <= |x| (x = 2): (alpha, beta) = (0.1, 1.9)", Verdict::kHolds, check_tetrahedral(far));
  return out.finish();
}

ExampleReport ex_modified_plane_ray(const Env& env) {
  Builder out("modified_plane_ray");
  const SpaceSpec X = PlaneWithRay{};
  const Point p = ray_point(1.0);
  {
    const double r = 1.5;
    const double top = 2.0 * (r - 1.0) / r;
    auto q = env.query(X, p, r, 2, {plane_point(r - 1.0, 0.0)}, 0.1, top - 0.05);
    out.verdict("r = 1.5: (alpha, beta) = (0.1, 2(r - |p|)/r - 0.05 = " + num(top - 0.05) + ")", Verdict::kHolds,
                check_tetrahedral(q));
    q.C = 0.05;
    out.verdict("r = 1.5: legacy beta = 0.1 (apex search)", Verdict::kFails, legacy_search(q, 0.1));
  }
  {
    const double r = 2.0;
    auto q = env.query(X, p, r, 2, {plane_point(r - 1.0, 0.0)}, 0.1, 2.0 * (r - 1.0) / r - 0.05);
    out.verdict("r = 2|p|: (alpha, beta) = (0.1, 0.95)", Verdict::kHolds, check_tetrahedral(q));
  }
  for (double r : {0.9, 1.0}) {
    auto q = env.query(X, p, r, 2, {}, 0.1, 1.9);
    out.close("r = " + num(r) + " <= |p|: C_best over the apex search", 0.0, search_apexes(q, kSearchBudget).report.c_best,
              0.0);
  }
  return out.finish();
}

}  // namespace

ExampleReport run_example(const std::string& id, std::uint64_t seed, int workers) {
  static const std::map<std::string, std::function<ExampleReport(const Env&)>> table = {
      {"planes", ex_planes},
      {"plane_ray", ex_plane_ray},
      {"cone_small_diam", ex_cone_small_diam},
      {"cone_vertex", ex_cone_vertex},
      {"slice_lemma", ex_slice_lemma},
      {"rp2_cone", ex_rp2_cone},
      {"modified_planes", ex_modified_planes},
      {"modified_plane_ray", ex_modified_plane_ray},
  };
  const auto it = table.find(id);
  if (it == table.end()) throw InvalidInput("unknown example id '" + id + "'");
  return it->second(Env{seed, std::max(workers, 1)});
}

}  // namespace tetraprop
