// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion. Oracles are computed
// here, independently of the library. Pass criterion numbers as arguments to
// run a subset.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "bounds.hpp"
#include "checker.hpp"
#include "examples_suite.hpp"
#include "integrals.hpp"
#include "rng.hpp"
#include "slicer.hpp"
#include "volume.hpp"

using namespace tetraprop;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fixed(double v, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << v;
  return s.str();
}

std::string sci(double v) {
  std::ostringstream s;
  s.precision(2);
  s << std::scientific << v;
  return s.str();
}

Point e(std::vector<double> c) { return euclidean_point(c); }

TetraQuery make_query(SpaceSpec space, Point p, double r, int n, std::vector<Point> apexes, double alpha,
                      double beta, std::optional<double> C = std::nullopt) {
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
  q.tol.seed = kSeed;
  return q;
}

TetraQuery legacy_query(TetraQuery q, double b) {
  q.alpha = 1.0 - b;
  q.beta = 1.0 + b;
  return q;
}

// HOLDS cases collected from criteria 1-7 for criterion 9, with C_best.
struct HoldsCase {
  std::string label;
  TetraQuery query;
  double c_best;
};
std::vector<HoldsCase> g_holds;

void record_holds(const std::string& label, const TetraQuery& q, const TetraReport& rep) {
  if (rep.verdict == Verdict::kHolds && rep.c_best > 0.0) g_holds.push_back({label, q, rep.c_best});
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Timer clock;
  const Point apex = e({1, 0});
  Tolerances tol = Tolerances::for_radius(1.0);
  tol.seed = kSeed;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double t = 0.2 + 1.7 * i / 49.0;
    const double ts[1] = {t};
    const double h = h_value(Euclidean{2}, e({0, 0}), std::span(&apex, 1), 1.0, ts, tol);
    const double c = 1.0 - t * t / 2.0;
    worst = std::max(worst, std::abs(h - 2.0 * std::sqrt(1.0 - c * c)));
  }
  const double secs = clock.seconds();
  const TetraQuery q = make_query(Euclidean{2}, e({0, 0}), 1.0, 2, {apex}, 0.2, 1.9);
  record_holds("flat plane, [0.2, 1.9]", q, check_tetrahedral(q));
  return {worst <= 1e-5 && secs < 5.0,
          "flat-plane h oracle, 50 values of t: max error " + sci(worst) + " (tol 1e-5), " + fixed(secs, 2) + " s"};
}

Outcome criterion2() {
  const Point apexes[2] = {e({1, 0, 0}), e({0, 1, 0})};
  const double t[2] = {1.0, 1.0};
  Tolerances tol = Tolerances::for_radius(1.0);
  tol.seed = kSeed;
  const double h = h_value(Euclidean{3}, e({0, 0, 0}), apexes, 1.0, t, tol);
  const TetraQuery q = make_query(Euclidean{3}, e({0, 0, 0}), 1.0, 3, {apexes[0], apexes[1]}, 0.9, 1.1);
  record_holds("flat 3-space, [0.9, 1.1]^2", q, check_tetrahedral(q));
  const double err = std::abs(h - std::sqrt(2.0));
  return {err <= 1e-5, "flat 3-space h(0, e1, e2; 1, (1, 1)) = " + fixed(h, 8) + ", error " + sci(err)};
}

Outcome criterion3() {
  Timer clock;
  const double C = 0.05;
  const double band = 0.02;
  bool all = true;
  std::string detail = "glued planes, C = 0.05, beta = threshold -+ 0.02:";
  for (double x : {0.1, 0.5, 1.0}) {
    const double thr = std::sqrt(2.0 + 2.0 * x) - 1.0;
    const TetraQuery base = make_query(GluedPlanes{}, xy_point(x, 0.0), 1.0, 2, {xy_point(x + 1.0, 0.0)}, 0.5,
                                       1.5, C);
    const TetraQuery below = legacy_query(base, thr - band);
    const TetraReport lo = check_tetrahedral(below);
    record_holds("glued planes x = " + fixed(x, 1) + ", legacy beta " + fixed(thr - band), below, lo);

    std::string hi_verdict;
    bool hi_ok = false;
    const double b_hi = thr + band;
    if (b_hi < 1.0) {
      const TetraReport hi = search_apexes(legacy_query(base, b_hi), 64).report;
      hi_verdict = to_string(hi.verdict) + " (C_best " + fixed(hi.c_best) + ", apex search)";
      hi_ok = hi.verdict == Verdict::kFails;
    } else {
      hi_verdict = "outside the legacy domain (beta " + fixed(b_hi) + " >= 1)";
    }
    const bool ok = lo.verdict == Verdict::kHolds && hi_ok;
    all = all && ok;
    detail += " x = " + fixed(x, 1) + ": " + to_string(lo.verdict) + " (C_best " + fixed(lo.c_best) + ") -> " +
              hi_verdict + (ok ? "" : " [mismatch]") + ";";
  }
  const double secs = clock.seconds();
  detail += " " + fixed(secs, 1) + " s";
  return {all && secs < 60.0, detail};
}

Outcome criterion4() {
  const SpaceSpec X = PlaneWithRay{};
  const Point p = ray_point(1.0);
  const double C = 0.05;
  std::vector<std::string> got;
  bool all = true;
  auto expect = [&](const std::string& what, bool ok, const std::string& value) {
    all = all && ok;
    got.push_back(what + " " + value + (ok ? "" : " [mismatch]"));
  };

  {
    const TetraQuery q = make_query(X, p, 0.9, 2, {}, 0.1, 1.9);
    const double c1 = search_apexes(q, 64).report.c_best;
    const double c2 = search_apexes(legacy_query(q, 0.5), 64).report.c_best;
    expect("r = 0.9: C_best", c1 == 0.0 && c2 == 0.0, fixed(std::max(c1, c2)));
  }
  {
    const double r = 1.5;
    const double top = 2.0 * (r - 1.0) / r - 0.05;
    for (double beta : {0.4, top}) {
      const TetraQuery q = make_query(X, p, r, 2, {plane_point(r - 1.0, 0.0)}, 0.1, beta, C);
      const TetraReport rep = check_tetrahedral(q);
      record_holds("plane with ray, r = 1.5, beta " + fixed(beta), q, rep);
      expect("r = 1.5 (0.1, " + fixed(beta) + "):", rep.verdict == Verdict::kHolds, to_string(rep.verdict));
    }
    for (double b : {0.1, 0.5}) {
      const TetraQuery q = make_query(X, p, r, 2, {}, 0.5, 1.5, C);
      const TetraReport rep = search_apexes(legacy_query(q, b), 64).report;
      expect("r = 1.5 legacy " + fixed(b, 1) + ":", rep.verdict == Verdict::kFails, to_string(rep.verdict));
    }
  }
  {
    const double r = 2.5;
    const double top = 1.0 - 2.0 / r - 0.05;
    for (double b : {0.05, top - 1e-3}) {
      const TetraQuery q = legacy_query(make_query(X, p, r, 2, {plane_point(r - 1.0, 0.0)}, 0.5, 1.5, C), b);
      const TetraReport rep = check_tetrahedral(q);
      record_holds("plane with ray, r = 2.5, legacy " + fixed(b), q, rep);
      expect("r = 2.5 legacy " + fixed(b, 3) + ":", rep.verdict == Verdict::kHolds, to_string(rep.verdict));
    }
  }
  std::string detail = "plane with ray at |p| = 1:";
  for (const auto& s : got) detail += " " + s + ";";
  return {all, detail};
}

Outcome criterion5() {
  const double r = 1.0;
  bool all = true;
  std::string detail = "cone over S^2(rho), 100 probes each:";
  for (double rho : {0.1, 0.2, 0.3}) {
    const SpaceSpec X = Cone{RoundSphere{rho}};
    Rng rng(mix_seed(kSeed, static_cast<std::uint64_t>(rho * 100)));
    Tolerances tol = Tolerances::for_radius(r);
    tol.seed = kSeed;
    double worst_lhs = 0.0;
    double worst_h = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Vec3 u = rng.unit3();
      const Vec3 v = rng.unit3();
      const double dot = std::clamp(u[0] * v[0] + u[1] * v[1] + u[2] * v[2], -1.0, 1.0);
      const double dxy = rho * std::acos(dot);
      worst_lhs = std::max(worst_lhs, 2.0 * r * r * (1.0 - std::cos(dxy)));
      const Point apex = cone_point(u, r);
      const double t[1] = {r};
      worst_h = std::max(worst_h, h_value(X, cone_vertex(), std::span(&apex, 1), r, t, tol));
    }
    const bool ok = worst_lhs < r * r && worst_h == 0.0;
    all = all && ok;
    detail += " rho = " + fixed(rho, 1) + ": max 2r^2(1 - cos d) = " + fixed(worst_lhs) + ", max h = " +
              sci(worst_h) + ";";
  }
  return {all, detail};
}

// Brute-force reference for the cone vertex: for each corner of the t-square,
// locate the two points of S(o; 1) at cone distances t1, t2 from the apexes
// by a latitude/longitude scan plus zooming, then take their distance.
double cone_chord(const Vec3& u, double s, const Vec3& v, double t) {
  const double dot = std::clamp(u[0] * v[0] + u[1] * v[1] + u[2] * v[2], -1.0, 1.0);
  const double theta = std::min(std::acos(dot), kPi);
  return std::sqrt(std::max(0.0, s * s + t * t - 2.0 * s * t * std::cos(theta)));
}

Vec3 from_angles(double lon, double lat) {
  return {std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat)};
}

double brute_force_corner_reference(const Vec3& a1, const Vec3& a2, double alpha, double beta) {
  double best = std::numeric_limits<double>::infinity();
  for (double t1 : {alpha, beta}) {
    for (double t2 : {alpha, beta}) {
      auto residual = [&](const Vec3& x) {
        const double d1 = cone_chord(x, 1.0, a1, 1.0) - t1;
        const double d2 = cone_chord(x, 1.0, a2, 1.0) - t2;
        return d1 * d1 + d2 * d2;
      };
      std::array<Vec3, 2> sol{};
      for (int hemi = 0; hemi < 2; ++hemi) {
        const int N = 1200;
        double lon0 = 0.0, lat0 = 0.0, f0 = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 2 * N; ++i) {
          for (int j = 1; j < N / 2; ++j) {
            const double lon = kPi * i / N;
            const double lat = (hemi == 0 ? 1.0 : -1.0) * (kPi / 2) * j / (N / 2);
            const double f = residual(from_angles(lon, lat));
            if (f < f0) {
              f0 = f;
              lon0 = lon;
              lat0 = lat;
            }
          }
        }
        double step = kPi / N;
        for (int round = 0; round < 40; ++round) {
          double lon1 = lon0, lat1 = lat0;
          for (int i = -10; i <= 10; ++i) {
            for (int j = -10; j <= 10; ++j) {
              const double lon = lon0 + step * i / 5.0;
              const double lat = lat0 + step * j / 5.0;
              const double f = residual(from_angles(lon, lat));
              if (f < f0) {
                f0 = f;
                lon1 = lon;
                lat1 = lat;
              }
            }
          }
          lon0 = lon1;
          lat0 = lat1;
          step *= 0.5;
        }
        if (f0 > 1e-12) return std::numeric_limits<double>::quiet_NaN();
        sol[hemi] = from_angles(lon0, lat0);
      }
      best = std::min(best, cone_chord(sol[0], 1.0, sol[1], 1.0));
    }
  }
  return best;
}

Outcome criterion6() {
  const double d12 = kPi / 2;
  const ConeVertexParams w = cone_vertex_params(1.0, d12);
  const double alpha = w.alpha_min + 0.05;
  const double beta = w.beta_max - 0.05;
  const Vec3 a1 = {1, 0, 0};
  const Vec3 a2 = {0, 1, 0};
  const double ref = brute_force_corner_reference(a1, a2, alpha, beta);
  const TetraQuery q = make_query(Cone{RoundSphere{1.0}}, cone_vertex(), 1.0, 3,
                                  {cone_point(a1, 1.0), cone_point(a2, 1.0)}, alpha, beta);
  const TetraReport rep = check_tetrahedral(q);
  record_holds("cone vertex window", q, rep);
  const bool ok = std::isfinite(ref) && rep.c_best >= 0.95 * ref;
  return {ok, "cone vertex, rho = 1, (alpha, beta) = (" + fixed(alpha) + ", " + fixed(beta) + "): C_best " +
                  fixed(rep.c_best) + " vs brute-force corner reference " + fixed(ref) + " (need >= 95%)"};
}

Outcome criterion7() {
  const double r = kPi / 2, s = 1.0, C = 0.5, b = 0.5;
  const SliceConstants k = slice_constants(r, s, C, b);
  // Independent arithmetic: chords of the unit circle.
  auto chord = [](double a) { return 2.0 * std::sin(a / 2.0); };
  const double Cr = chord(C * r) / chord(r);
  const double rp = s * chord(r);
  const double lo = chord((1 - b) * r) / chord(r);
  const double hi = chord((1 + b) * r) / chord(r);
  const double br = std::max(1.0 - lo, hi - 1.0);
  const double arith = std::max({std::abs(k.C_r - Cr), std::abs(k.r_prime - rp), std::abs(k.beta_r - br)});

  // Base (C, beta) at r on S^2(1), then the slice on the image interval.
  const TetraQuery base = legacy_query(
      make_query(RoundSphere{1.0}, sphere_point({0, 0, 1}), r, 2, {sphere_point({1, 0, 0})}, 0.5, 1.5, C), b);
  const TetraReport base_rep = check_tetrahedral(base);
  record_holds("slice base S^2(1)", base, base_rep);
  const TetraQuery slice = make_query(ConeSlice{RoundSphere{1.0}, s}, sphere_point({0, 0, 1}), rp, 2,
                                      {sphere_point({1, 0, 0})}, lo, hi);
  const TetraReport rep = check_tetrahedral(slice);
  record_holds("slice S^2 x {1}", slice, rep);
  const double predicted = chord(base_rep.c_best * r) / chord(r);
  const bool certified = rep.c_best >= 0.95 * Cr;
  const bool matches = std::abs(rep.c_best - predicted) <= 0.05 * predicted;
  return {arith <= 1e-12 && certified && matches && base_rep.verdict == Verdict::kHolds,
          "slice lemma: formula error " + sci(arith) + " (tol 1e-12); slice C_best " + fixed(rep.c_best) +
              " vs C_r " + fixed(Cr) + " (>= 95%) and vs C_r at the base C_best " + fixed(predicted) + " (5%)"};
}

Outcome criterion8() {
  bool all = true;
  std::string detail = "volume bound, 1e5 samples:";
  auto run = [&](const std::string& name, const SpaceSpec& X, const Point& p, double r, double C, double alpha,
                 double beta, double analytic) {
    const VolumeBoundReport vb =
        verify_volume_bound(X, p, r, C, alpha, beta, VolumeMethod::kMonteCarlo, 100000, kSeed);
    const double z = std::abs(vb.volume.value - analytic) / vb.volume.std_error;
    const bool ok = vb.slack > 1.0 && z <= 3.0;
    all = all && ok;
    detail += " " + name + ": MC " + fixed(vb.volume.value) + " +- " + fixed(vb.volume.std_error) + " vs " +
              fixed(analytic) + " (" + fixed(z, 2) + " se), slack " + fixed(vb.slack, 2) + ";";
  };

  const TetraQuery e3 = make_query(Euclidean{3}, e({0, 0, 0}), 1.0, 3, {e({1, 0, 0}), e({0, 1, 0})}, 0.9, 1.1);
  const TetraReport e3_rep = check_tetrahedral(e3);
  for (double r : {0.5, 1.0}) {
    run("E^3 r = " + fixed(r, 1), Euclidean{3}, e({0, 0, 0}), r, e3_rep.c_best, 0.9, 1.1,
        4.0 / 3.0 * kPi * r * r * r);
  }

  const double b = std::sqrt(2.0) - 1.0 - 0.05;
  const TetraQuery gp =
      legacy_query(make_query(GluedPlanes{}, xy_point(0, 0), 1.0, 2, {xy_point(1.0, 0.0)}, 0.5, 1.5), b);
  const TetraReport gp_rep = check_tetrahedral(gp);
  run("glued seam r = 1", GluedPlanes{}, xy_point(0, 0), 1.0, gp_rep.c_best, 1 - b, 1 + b, 1.5 * kPi);
  return {all && e3_rep.c_best > 0.0 && gp_rep.c_best > 0.0, detail};
}

Outcome criterion9() {
  int satisfied = 0;
  std::string failures;
  for (const HoldsCase& h : g_holds) {
    TetraQuery q = h.query;
    q.C = h.c_best;
    const IntegralReport rep = integral_tetra(q, QuadratureSpec{});
    if (rep.satisfied) {
      ++satisfied;
    } else {
      failures += " " + h.label + " (" + fixed(rep.integral_value) + " < " + fixed(rep.bound) + ");";
    }
  }
  const int total = static_cast<int>(g_holds.size());
  return {total > 0 && satisfied == total, "integral property with C = C_best on " + std::to_string(satisfied) +
                                               "/" + std::to_string(total) + " HOLDS cases from criteria 1-7" +
                                               (failures.empty() ? "" : ":" + failures)};
}

Outcome criterion10() {
  bool ok = true;
  ok = ok && packing_bound(10, 1, 0.9, 1.1, 3, 1) == 250;
  ok = ok && packing_bound(10, 1, 0.9, 1.1, 3, 2) == 31;
  ok = ok && packing_bound(0.01, 1, 0.9, 1.1, 3, 1) == 0;
  const double D0 = diameter_bound(10, 1, 0.9, 1.1, 3, 1);
  ok = ok && std::abs(D0 - 2001.0) <= 1e-9;

  const TetraQuery e2 = make_query(Euclidean{2}, e({0, 0}), 1.0, 2, {e({1, 0})}, 0.9, 1.1);
  const TetraQuery e3 = make_query(Euclidean{3}, e({0, 0, 0}), 1.0, 3, {e({1, 0, 0}), e({0, 1, 0})}, 0.9, 1.1);
  const double C2 = check_tetrahedral(e2).c_best;
  const double C3 = check_tetrahedral(e3).c_best;
  int configs = 0;
  int within = 0;
  std::int64_t tightest_gap = std::numeric_limits<std::int64_t>::max();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = seed % 2 == 0 ? 2 : 3;
    const double side = 1.0 + 0.25 * static_cast<double>(seed % 5);
    const double eps = 0.08 + 0.04 * static_cast<double>(seed % 4);
    const BoxRegion box{std::vector<double>(n, 0.0), std::vector<double>(n, side)};
    const double V0 = std::pow(side + 2.0 * eps, n);
    const auto count = greedy_packing(Euclidean{n}, box, eps, 4000, seed);
    const auto bound = packing_bound(V0, n == 2 ? C2 : C3, 0.9, 1.1, n, eps);
    ++configs;
    if (count <= bound) ++within;
    tightest_gap = std::min(tightest_gap, bound - count);
  }
  ok = ok && within == configs;
  return {ok, "bounds: packing 250 / 31 / 0, D0 = " + fixed(D0, 6) + "; greedy <= packing bound on " +
                  std::to_string(within) + "/" + std::to_string(configs) + " configurations (smallest margin " +
                  std::to_string(tightest_gap) + ")"};
}

// Quotient oracle: lifts of [e_i] are +-e_i, so each solution upstairs solves
// |x| = r, |x - s1 e1| = t1, |x - s2 e2| = t2 for some signs; keep those whose
// quotient distances are the minima over both lifts.
std::vector<Vec3> rp2_oracle(double r, const Vec3& e1, const Vec3& e2, double t1, double t2) {
  auto dot = [](const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
  auto norm = [&](const Vec3& a) { return std::sqrt(dot(a, a)); };
  auto sub = [](const Vec3& a, const Vec3& b) { return Vec3{a[0] - b[0], a[1] - b[1], a[2] - b[2]}; };
  auto add = [](const Vec3& a, const Vec3& b) { return Vec3{a[0] + b[0], a[1] + b[1], a[2] + b[2]}; };
  const Vec3 nrm = {e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2], e1[0] * e2[1] - e1[1] * e2[0]};
  const double nn = norm(nrm);
  std::vector<Vec3> out;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      // x . e_i = s_i (|x|^2 + |e_i|^2 - t_i^2) / 2
      const double b1 = s1 * (r * r + dot(e1, e1) - t1 * t1) / 2.0;
      const double b2 = s2 * (r * r + dot(e2, e2) - t2 * t2) / 2.0;
      const double g11 = dot(e1, e1), g12 = dot(e1, e2), g22 = dot(e2, e2);
      const double det = g11 * g22 - g12 * g12;
      const double a = (b1 * g22 - b2 * g12) / det;
      const double b = (b2 * g11 - b1 * g12) / det;
      const Vec3 in = {a * e1[0] + b * e2[0], a * e1[1] + b * e2[1], a * e1[2] + b * e2[2]};
      const double h2 = r * r - dot(in, in);
      if (h2 < 0.0) continue;
      const double c = std::sqrt(h2) / nn;
      for (int sc : {1, -1}) {
        const Vec3 x = {in[0] + sc * c * nrm[0], in[1] + sc * c * nrm[1], in[2] + sc * c * nrm[2]};
        const double q1 = std::min(norm(sub(x, e1)), norm(add(x, e1)));
        const double q2 = std::min(norm(sub(x, e2)), norm(add(x, e2)));
        if (std::abs(q1 - t1) > 1e-9 * r || std::abs(q2 - t2) > 1e-9 * r) continue;
        out.push_back(x);
      }
    }
  }
  return out;
}

double quotient_distance(const Vec3& a, const Vec3& b) {
  return std::min(std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]), std::hypot(a[0] + b[0], a[1] + b[1], a[2] + b[2]));
}

Outcome criterion11() {
  const SpaceSpec K = ConeOfProjectivePlane{};
  int matched = 0;
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    Rng rng(mix_seed(kSeed, 0xac11 + k));
    const double r = std::array<double, 3>{0.5, 1.0, 2.0}[k % 3];
    const Vec3 u = rng.unit3();
    Vec3 w = rng.unit3();
    const double uw = u[0] * w[0] + u[1] * w[1] + u[2] * w[2];
    w = {w[0] - uw * u[0], w[1] - uw * u[1], w[2] - uw * u[2]};
    const double wn = std::hypot(w[0], w[1], w[2]);
    w = {w[0] / wn, w[1] / wn, w[2] / wn};
    const double theta = (35.0 + 20.0 * rng.uniform()) * kPi / 180.0;
    const Vec3 e1 = {r * u[0], r * u[1], r * u[2]};
    const Vec3 e2 = {r * (std::cos(theta) * u[0] + std::sin(theta) * w[0]),
                     r * (std::cos(theta) * u[1] + std::sin(theta) * w[1]),
                     r * (std::cos(theta) * u[2] + std::sin(theta) * w[2])};
    const double t1 = r * (0.9 + 0.2 * rng.uniform());
    const double t2 = r * (0.9 + 0.2 * rng.uniform());

    Tolerances tol = Tolerances::for_radius(r);
    tol.seed = kSeed;
    auto pt = [](const Vec3& v) { return Point{Sheet::kNone, {v[0], v[1], v[2], 0.0}}; };
    const SphereConstraint cs[3] = {{pt({0, 0, 0}), r}, {pt(e1), t1}, {pt(e2), t2}};
    const IntersectionSet solved = solve_intersection(K, cs, tol);

    // Deduplicate the oracle set in the quotient metric.
    std::vector<Vec3> oracle;
    for (const Vec3& x : rp2_oracle(r, e1, e2, t1, t2)) {
      bool dup = false;
      for (const Vec3& y : oracle) dup = dup || quotient_distance(x, y) <= tol.delta_cluster;
      if (!dup) oracle.push_back(x);
    }
    double hd = 0.0;
    for (const Vec3& x : oracle) {
      double best = std::numeric_limits<double>::infinity();
      for (const Cluster& c : solved.clusters) {
        best = std::min(best, quotient_distance(x, {c.representative.x[0], c.representative.x[1], c.representative.x[2]}));
      }
      hd = std::max(hd, best);
    }
    for (const Cluster& c : solved.clusters) {
      double best = std::numeric_limits<double>::infinity();
      for (const Vec3& x : oracle) {
        best = std::min(best, quotient_distance(x, {c.representative.x[0], c.representative.x[1], c.representative.x[2]}));
      }
      hd = std::max(hd, best);
    }
    const bool same = !oracle.empty() && oracle.size() == solved.clusters.size() && !solved.is_continuum &&
                      hd <= tol.delta_cluster;
    if (same) ++matched;
    worst = std::max(worst, hd / tol.delta_cluster);
  }

  const double c45 = std::cos(kPi / 4);
  auto pt = [](const Vec3& v) { return Point{Sheet::kNone, {v[0], v[1], v[2], 0.0}}; };
  const TetraQuery q = legacy_query(make_query(K, pt({0, 0, 0}), 1.0, 3, {pt({1, 0, 0}), pt({c45, c45, 0})}, 0.5, 1.5),
                                    0.1);
  const TetraReport rep = check_tetrahedral(q);
  return {matched == 10 && rep.c_best > 0.0,
          "cone over RP^2: quotient set matches the lifted oracle on " + std::to_string(matched) +
              "/10 configurations (worst " + fixed(worst, 3) + " delta); vertex C_best " + fixed(rep.c_best)};
}

struct Captured {
  int code = -1;
  std::string out;
};

Captured run_cli(const std::string& args) {
  Captured c;
  FILE* pipe = popen((std::string(TETRAPROP_CLI) + " " + args).c_str(), "r");
  if (!pipe) return c;
  std::array<char, 65536> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  const int status = pclose(pipe);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

Outcome criterion12() {
  Timer first_clock;
  const Captured a = run_cli("--seed 42 --json examples");
  const double first = first_clock.seconds();
  Timer second_clock;
  const Captured b = run_cli("--seed 42 --json examples");
  const double second = second_clock.seconds();
  const bool same = !a.out.empty() && a.out == b.out;
  return {same && first < 600.0 && second < 600.0,
          "examples suite twice with seed 42: " + std::string(same ? "byte-identical" : "outputs differ") + " (" +
              std::to_string(a.out.size()) + " bytes), runs " + fixed(first, 1) + " s and " + fixed(second, 1) +
              " s, exit codes " + std::to_string(a.code) + "/" + std::to_string(b.code)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                          criterion5, criterion6, criterion7, criterion8,
                                                          criterion9, criterion10, criterion11, criterion12};
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& ex) {
      o = {false, std::string("threw: ") + ex.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << (id < 10 ? " " : "") << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
