// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#include "checker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "charts.hpp"
#include "nelder_mead.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace tetraprop {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "HOLDS";
    case Verdict::kFails:
      return "FAILS";
    case Verdict::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "HOLDS") return Verdict::kHolds;
  if (s == "FAILS") return Verdict::kFails;
  if (s == "INCONCLUSIVE") return Verdict::kInconclusive;
  throw InvalidInput("unknown verdict '" + s + "'");
}

void validate_query(const TetraQuery& q, bool need_apexes) {
  validate_space(q.space);
  q.tol.validate();
  require(q.r > 0.0 && std::isfinite(q.r), "r must be positive");
  require(q.n >= 2, "n must be >= 2");
  if (q.n > q.max_n) {
    std::ostringstream msg;
    msg << "n = " << q.n << " exceeds the configured cap " << q.max_n << " (grid cost is grid_m^(n-1) = "
        << std::pow(q.tol.grid_m, q.n - 1) << " h evaluations)";
    throw InvalidInput(msg.str());
  }
  require(q.alpha > 0.0 && q.alpha < q.beta && q.beta < 2.0, "need 0 < alpha < beta < 2");
  if (q.C) require(*q.C > 0.0 && std::isfinite(*q.C), "C must be positive");
  canonical(q.space, q.p);
  if (!need_apexes) return;
  if (q.apexes.empty()) throw InvalidInput("apexes missing: supply n-1 apexes or run the apex search");
  require(static_cast<int>(q.apexes.size()) == q.n - 1, "need exactly n-1 apexes");
  require_apexes_on_sphere(q.space, q.p, q.apexes, q.r, q.tol);
}

std::vector<double> cube_nodes(const TetraQuery& q, int m) {
  require(m >= 2, "need at least two nodes per axis");
  std::vector<double> nodes(m);
  const double lo = q.alpha * q.r;
  const double hi = q.beta * q.r;
  for (int j = 0; j < m; ++j) nodes[j] = j + 1 == m ? hi : lo + (hi - lo) * j / (m - 1);
  return nodes;
}

std::vector<double> evaluate_h_grid(const TetraQuery& q, const std::vector<double>& axis_nodes) {
  const int axes = q.n - 1;
  const std::size_t m = axis_nodes.size();
  std::size_t count = 1;
  for (int a = 0; a < axes; ++a) count *= m;
  std::vector<double> values(count);
  parallel_for(count, q.workers, [&](std::size_t idx) {
    std::vector<double> t(axes);
    std::size_t rest = idx;
    for (int a = axes - 1; a >= 0; --a) {
      t[a] = axis_nodes[rest % m];
      rest /= m;
    }
    values[idx] = h_value(q.space, q.p, q.apexes, q.r, t, q.tol);
  });
  return values;
}

namespace {

struct Sample {
  double h = std::numeric_limits<double>::infinity();
  std::vector<double> t;
};

bool better(const Sample& a, const Sample& b) {
  if (a.h != b.h) return a.h < b.h;
  return a.t < b.t;
}

Sample refine_from(const TetraQuery& q, const std::vector<double>& t0, double step) {
  const int axes = q.n - 1;
  const double lo = q.alpha * q.r;
  const double hi = q.beta * q.r;
  Sample best;
  auto objective = [&](const Coords& x) {
    Sample s;
    s.t.resize(axes);
    for (int a = 0; a < axes; ++a) s.t[a] = std::clamp(x[a], lo, hi);
    s.h = h_value(q.space, q.p, q.apexes, q.r, s.t, q.tol);
    if (better(s, best)) best = s;
    return s.h;
  };
  Coords start{};
  for (int a = 0; a < axes; ++a) start[a] = t0[a];
  SimplexOptions opt;
  opt.max_iterations = q.refine_iters;
  opt.initial_step = step;
  opt.target = 0.0;
  opt.x_tolerance = 1e-9 * q.r;
  nelder_mead(objective, start, axes, opt);
  return best;
}

}  // namespace

TetraReport check_tetrahedral(const TetraQuery& q) {
  validate_query(q, true);
  const int axes = q.n - 1;
  const int m = q.tol.grid_m;
  const std::vector<double> nodes = cube_nodes(q, m);
  const std::vector<double> grid = evaluate_h_grid(q, nodes);

  auto node_t = [&](std::size_t idx) {
    std::vector<double> t(axes);
    for (int a = axes - 1; a >= 0; --a) {
      t[a] = nodes[idx % m];
      idx /= m;
    }
    return t;
  };

  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return grid[a] < grid[b]; });

  TetraReport report;
  Sample best{grid[order[0]], node_t(order[0])};
  report.grid_min = best.h;

  if (best.h > 0.0) {
    const int starts = std::min<int>(q.refine_starts, static_cast<int>(order.size()));
    std::vector<Sample> refined(starts);
    const double step = 0.5 * (q.beta - q.alpha) * q.r / (m - 1);
    parallel_for(starts, q.workers, [&](std::size_t k) { refined[k] = refine_from(q, node_t(order[k]), step); });
    for (const Sample& s : refined) {
      if (better(s, best)) best = s;
    }
  }

  report.refined_min = std::min(best.h, report.grid_min);
  report.t_witness = best.t;
  report.c_best = report.refined_min / q.r;
  for (const Point& a : q.apexes) report.apexes_used.push_back(canonical(q.space, a));

  std::ostringstream cube;
  cube << "t-cube [" << q.alpha * q.r << ", " << q.beta * q.r << "]^" << axes << ", grid " << m << "^" << axes
       << ", " << q.refine_starts << " refinement starts";
  report.notes.push_back(cube.str());

  if (report.refined_min == 0.0) {
    report.verdict = Verdict::kFails;
    report.notes.push_back("h vanishes at t_witness: the intersection has fewer than two points or is a continuum");
  } else if (q.C) {
    const double C = *q.C;
    if (std::abs(report.c_best - C) < 1e-3 * C) {
      report.verdict = Verdict::kInconclusive;
      report.notes.push_back("C_best within 1e-3 C of the target constant");
    } else {
      report.verdict = report.c_best >= C ? Verdict::kHolds : Verdict::kFails;
    }
  } else {
    report.verdict = Verdict::kHolds;
    report.notes.push_back("no target C given: holds with C = C_best");
  }
  return report;
}

TetraReport check_legacy(TetraQuery q, double beta_legacy) {
  require(beta_legacy > 0.0 && beta_legacy < 1.0, "legacy beta must lie in (0, 1)");
  q.alpha = 1.0 - beta_legacy;
  q.beta = 1.0 + beta_legacy;
  TetraReport report = check_tetrahedral(q);
  std::ostringstream note;
  note << "legacy (C, beta) form with beta = " << beta_legacy;
  report.notes.insert(report.notes.begin(), note.str());
  return report;
}

namespace {

/// Cheap score of an apex tuple: min of h over a 3^(n-1) grid, divided by r.
double screen(const TetraQuery& base, const std::vector<Point>& apexes) {
  TetraQuery q = base;
  q.apexes = apexes;
  const std::vector<double> nodes = cube_nodes(q, 3);
  const std::vector<double> grid = evaluate_h_grid(q, nodes);
  return *std::min_element(grid.begin(), grid.end()) / q.r;
}

}  // namespace

ApexSearchResult search_apexes(const TetraQuery& q, int budget) {
  validate_query(q, false);
  require(budget >= 1, "search budget must be >= 1");
  const int k = q.n - 1;
  const Point p = canonical(q.space, q.p);
  const std::vector<Point> pool = sphere_samples(q.space, p, q.r, q.tol);

  ApexSearchResult result;
  if (pool.empty()) {
    result.report.verdict = Verdict::kFails;
    result.report.notes.push_back("S(p; r) is empty within the solver's reach; no apexes exist");
    return result;
  }

  Rng rng(mix_seed(q.tol.seed, 0x5ea7c4));
  std::vector<Point> best;
  double best_score = -1.0;
  int used = 0;

  const int restarts = std::max(1, budget / 2);
  for (; used < restarts; ++used) {
    std::vector<Point> tuple;
    for (int i = 0; i < k; ++i) tuple.push_back(pool[rng.next() % pool.size()]);
    const double s = screen(q, tuple);
    if (s > best_score) {
      best_score = s;
      best = tuple;
    }
  }

  // Perturbation descent: move one apex at a time along S(p; r).
  const std::vector<Chart> charts = solver_charts(q.space);
  double step = 0.25 * q.r;
  int failures = 0;
  for (int i = 0; used < budget && step > 1e-4 * q.r; ++used, i = (i + 1) % k) {
    auto [chart, x] = chart_coords(q.space, best[i]);
    const Chart& c = charts[chart];
    for (int d = 0; d < c.dim; ++d) x[d] += step / c.unit_length * rng.normal();
    const auto moved = project_to_sphere(q.space, chart_point(q.space, c, x), p, q.r, q.tol);
    bool improved = false;
    if (moved) {
      std::vector<Point> trial = best;
      trial[i] = *moved;
      const double s = screen(q, trial);
      if (s > best_score) {
        best_score = s;
        best = trial;
        improved = true;
      }
    }
    failures = improved ? 0 : failures + 1;
    if (failures >= 2 * k) {
      step *= 0.5;
      failures = 0;
    }
  }

  TetraQuery final_query = q;
  final_query.apexes = best;
  result.apexes = best;
  result.report = check_tetrahedral(final_query);
  std::ostringstream note;
  note << "apex search: " << used << " tuples screened from a pool of " << pool.size() << " points on S(p; r)";
  result.report.notes.push_back(note.str());
  return result;
}

}  // namespace tetraprop
