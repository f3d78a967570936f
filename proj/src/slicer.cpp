// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#include "slicer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "charts.hpp"
#include "nelder_mead.hpp"
#include "rng.hpp"

namespace tetraprop {

Tolerances Tolerances::for_radius(double r) {
  require(r > 0.0 && std::isfinite(r), "radius must be positive");
  Tolerances tol;
  tol.tau_sphere = 1e-7 * r;
  tol.delta_cluster = 1e-3 * r;
  return tol;
}

void Tolerances::validate() const {
  require(tau_sphere > 0.0 && delta_cluster > 0.0 && kappa_continuum > 0.0,
          "tolerances must be positive");
  require(tau_sphere < delta_cluster, "tolerances: tau_sphere must be < delta_cluster");
  require(kappa_continuum > 1.0, "tolerances: kappa_continuum must exceed 1");
  require(grid_m >= 3, "tolerances: grid_m must be >= 3");
  require(refine_iters >= 1 && samples >= 1 && descents >= 1,
          "tolerances: refine_iters, samples and descents must be >= 1");
}

namespace {

struct Accepted {
  Point point;
  int chart = 0;
  Coords x{};
  double residual = 0.0;  // max_i |d - t_i|
};

class Residual {
 public:
  Residual(const SpaceSpec& space, std::span<const SphereConstraint> constraints)
      : space_(space), constraints_(constraints) {}

  double sum_sq(const Point& p) const {
    double s = 0.0;
    for (const SphereConstraint& c : constraints_) {
      const double e = unchecked_distance(space_, p, c.center) - c.radius;
      s += e * e;
    }
    return s;
  }

  double max_abs(const Point& p) const {
    double m = 0.0;
    for (const SphereConstraint& c : constraints_) {
      m = std::max(m, std::abs(unchecked_distance(space_, p, c.center) - c.radius));
    }
    return m;
  }

 private:
  const SpaceSpec& space_;
  std::span<const SphereConstraint> constraints_;
};

std::uint64_t constraint_seed(std::uint64_t seed, std::span<const SphereConstraint> constraints) {
  std::uint64_t h = mix_seed(seed, constraints.size());
  for (const SphereConstraint& c : constraints) {
    h = mix_seed(h, static_cast<std::uint64_t>(c.center.sheet));
    h = hash_doubles(h, c.center.x);
    const double radius[1] = {c.radius};
    h = hash_doubles(h, radius);
  }
  return h;
}

double dist2(const Coords& a, const Coords& b, int dim) {
  double s = 0.0;
  for (int i = 0; i < dim; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

struct Seed {
  int chart = 0;
  Coords x{};
  double score = 0.0;
};

/// Candidate points in the shell 0.75 t0 <= d(x, c0) <= 1.25 t0 around the
/// first sphere, drawn from each chart in proportion to its measure.
std::vector<Seed> shell_seeds(const SpaceSpec& space, const SphereConstraint& first, const Residual& residual,
                              const Tolerances& tol, Rng& rng) {
  std::vector<Seed> seeds;
  const double t0 = first.radius;
  std::vector<Patch> patches;
  patches = ball_patches(space, first.center, 1.25 * t0);
  double total = 0.0;
  for (const Patch& p : patches) total += p.measure;
  if (!(total > 0.0)) return seeds;

  // Lower-dimensional patches (the ray) get a fixed share so they are not
  // starved by the area weighting.
  std::vector<double> weight(patches.size());
  int top_dim = 0;
  for (const Patch& p : patches) top_dim = std::max(top_dim, p.dim);
  double weight_total = 0.0;
  for (std::size_t i = 0; i < patches.size(); ++i) {
    weight[i] = patches[i].dim == top_dim ? patches[i].measure / total : 0.125;
    weight_total += weight[i];
  }

  seeds.reserve(tol.samples);
  const int max_proposals = 8 * tol.samples;
  for (int k = 0; k < max_proposals && static_cast<int>(seeds.size()) < tol.samples; ++k) {
    double pick = rng.uniform() * weight_total;
    std::size_t which = 0;
    while (which + 1 < patches.size() && pick >= weight[which]) {
      pick -= weight[which];
      ++which;
    }
    const Point x = sample_patch(space, patches[which], rng);
    const double d = unchecked_distance(space, x, first.center);
    if (std::abs(d - t0) > 0.25 * t0) continue;
    auto [chart, coords] = chart_coords(space, x);
    seeds.push_back({chart, coords, residual.sum_sq(x)});
  }
  return seeds;
}

/// Runs local descent from one chart position; returns the accepted point
/// if the residual reaches tau_sphere.
std::optional<Accepted> descend(const SpaceSpec& space, const Chart& chart, int chart_index, const Coords& start,
                                double step, const Residual& residual, const Tolerances& tol,
                                double give_up_residual) {
  auto objective = [&](const Coords& x) { return residual.sum_sq(chart_point(space, chart, x)); };
  SimplexOptions opt;
  opt.initial_step = step;
  opt.target = (1e-2 * tol.tau_sphere) * (1e-2 * tol.tau_sphere);
  opt.x_tolerance = 1e-3 * tol.tau_sphere / chart.unit_length;

  const int first_phase = std::min(60, tol.refine_iters);
  opt.max_iterations = first_phase;
  SimplexResult r = nelder_mead(objective, start, chart.dim, opt);
  Point p = chart_point(space, chart, r.x);
  double err = residual.max_abs(p);
  if (err > give_up_residual) return std::nullopt;

  int remaining = tol.refine_iters - r.iterations;
  // Restarting with a simplex sized to the current error keeps convergence
  // linear with a good rate instead of stalling on a degenerate simplex.
  while (err > tol.tau_sphere && remaining > 0) {
    opt.initial_step = std::max(4.0 * err, 1e-3 * tol.tau_sphere) / chart.unit_length;
    opt.max_iterations = std::min(remaining, 80);
    r = nelder_mead(objective, r.x, chart.dim, opt);
    remaining -= std::max(r.iterations, 1);
    p = chart_point(space, chart, r.x);
    err = residual.max_abs(p);
  }
  if (err > tol.tau_sphere) return std::nullopt;
  return Accepted{p, chart_index, r.x, err};
}

std::vector<Accepted> solve_points(const SpaceSpec& space, std::span<const SphereConstraint> constraints,
                                   const Tolerances& tol, Rng& rng) {
  const Residual residual(space, constraints);
  const std::vector<Chart> charts = solver_charts(space);
  const SphereConstraint& first = constraints.front();

  std::vector<Seed> seeds = shell_seeds(space, first, residual, tol, rng);
  std::vector<std::size_t> order(seeds.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return seeds[a].score < seeds[b].score; });

  int max_dim = 1;
  for (const Chart& c : charts) max_dim = std::max(max_dim, c.dim);
  const double spacing = first.radius * std::pow(static_cast<double>(tol.samples), -1.0 / max_dim);

  // Promote the lowest-residual candidates, skipping near-duplicates.
  std::vector<const Seed*> chosen;
  for (std::size_t idx : order) {
    if (static_cast<int>(chosen.size()) >= tol.descents) break;
    const Seed& s = seeds[idx];
    const Chart& chart = charts[s.chart];
    const double radius = spacing / chart.unit_length;
    bool crowded = false;
    for (const Seed* c : chosen) {
      if (c->chart == s.chart && dist2(c->x, s.x, chart.dim) < radius * radius) {
        crowded = true;
        break;
      }
    }
    if (!crowded) chosen.push_back(&s);
  }

  std::vector<Accepted> accepted;
  for (const Seed* s : chosen) {
    const Chart& chart = charts[s->chart];
    auto hit = descend(space, chart, s->chart, s->x, spacing / chart.unit_length, residual, tol,
                       1e-2 * first.radius);
    if (hit) accepted.push_back(*hit);
  }
  return accepted;
}

std::vector<int> single_linkage(const SpaceSpec& space, const std::vector<Accepted>& pts, double delta) {
  std::vector<int> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (unchecked_distance(space, pts[i].point, pts[j].point) <= delta) {
        const int a = find(static_cast<int>(i));
        const int b = find(static_cast<int>(j));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<int> label(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) label[i] = find(static_cast<int>(i));
  return label;
}

}  // namespace

IntersectionSet solve_intersection(const SpaceSpec& space, std::span<const SphereConstraint> constraints,
                                   const Tolerances& tol) {
  validate_space(space);
  tol.validate();
  require(!constraints.empty(), "solve_intersection needs at least one constraint");
  std::vector<SphereConstraint> cs(constraints.begin(), constraints.end());
  for (SphereConstraint& c : cs) {
    require(c.radius > 0.0 && std::isfinite(c.radius), "sphere radius must be positive");
    c.center = canonical(space, c.center);
  }

  Rng rng(constraint_seed(tol.seed, cs));
  const std::vector<Accepted> pts = solve_points(space, cs, tol, rng);
  IntersectionSet out;
  if (pts.empty()) return out;

  const std::vector<int> label = single_linkage(space, pts, tol.delta_cluster);
  std::vector<int> roots;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (label[i] == static_cast<int>(i)) roots.push_back(static_cast<int>(i));
  }

  struct Group {
    std::vector<int> members;
    int best = 0;
  };
  std::vector<Group> groups;
  for (int root : roots) {
    Group g;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (label[i] == root) g.members.push_back(static_cast<int>(i));
    }
    g.best = g.members.front();
    for (int m : g.members) {
      if (pts[m].residual < pts[g.best].residual) g.best = m;
    }
    groups.push_back(std::move(g));
  }

  for (const Accepted& a : pts) out.residual_max = std::max(out.residual_max, a.residual);
  for (const Group& g : groups) {
    Cluster c;
    c.representative = pts[g.best].point;
    c.member_count = static_cast<int>(g.members.size());
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      for (std::size_t j = i + 1; j < g.members.size(); ++j) {
        c.diameter = std::max(c.diameter, unchecked_distance(space, pts[g.members[i]].point, pts[g.members[j]].point));
      }
    }
    out.clusters.push_back(c);
  }

  // Continuum probes: step off each representative and re-project. Landing
  // on a new solution far from the representative (and away from every
  // other known cluster) means the solution set extends continuously.
  const double extent = tol.kappa_continuum * tol.delta_cluster;
  const Residual residual(space, cs);
  const std::vector<Chart> charts = solver_charts(space);
  auto near_other = [&](const Point& q, std::size_t self) {
    for (std::size_t k = 0; k < groups.size(); ++k) {
      if (k == self) continue;
      for (int m : groups[k].members) {
        if (unchecked_distance(space, q, pts[m].point) <= tol.delta_cluster) return true;
      }
    }
    return false;
  };

  for (std::size_t gi = 0; gi < groups.size() && !out.is_continuum; ++gi) {
    Cluster& cluster = out.clusters[gi];
    if (cluster.diameter > extent) {
      out.is_continuum = true;
      break;
    }
    const Accepted& rep = pts[groups[gi].best];
    const Chart& chart = charts[rep.chart];
    std::vector<Coords> dirs;
    for (int i = 0; i < chart.dim; ++i) {
      Coords e{};
      e[i] = 1.0;
      dirs.push_back(e);
      e[i] = -1.0;
      dirs.push_back(e);
    }
    for (int k = 0; k < 2; ++k) {
      Coords e{};
      double n = 0.0;
      for (int i = 0; i < chart.dim; ++i) {
        e[i] = rng.normal();
        n += e[i] * e[i];
      }
      n = std::sqrt(n);
      for (int i = 0; i < chart.dim; ++i) e[i] /= n;
      dirs.push_back(e);
    }
    const double step = 3.0 * extent / chart.unit_length;
    for (const Coords& dir : dirs) {
      Coords start = rep.x;
      for (int i = 0; i < chart.dim; ++i) start[i] += step * dir[i];
      auto hit = descend(space, chart, rep.chart, start, 0.5 * extent / chart.unit_length, residual, tol,
                         std::numeric_limits<double>::infinity());
      if (!hit) continue;
      const double reach = unchecked_distance(space, rep.point, hit->point);
      if (reach > extent && !near_other(hit->point, gi)) {
        cluster.diameter = std::max(cluster.diameter, reach);
        cluster.member_count += 1;
        out.residual_max = std::max(out.residual_max, hit->residual);
        out.is_continuum = true;
        break;
      }
    }
  }
  return out;
}

std::vector<Point> sphere_samples(const SpaceSpec& space, const Point& center, double radius,
                                  const Tolerances& tol) {
  validate_space(space);
  tol.validate();
  require(radius > 0.0, "sphere radius must be positive");
  const SphereConstraint c[1] = {{canonical(space, center), radius}};
  Rng rng(constraint_seed(mix_seed(tol.seed, 0xa9e1), c));
  std::vector<Point> out;
  for (const Accepted& a : solve_points(space, c, tol, rng)) out.push_back(a.point);
  return out;
}

std::optional<Point> project_to_sphere(const SpaceSpec& space, const Point& start, const Point& center,
                                       double radius, const Tolerances& tol) {
  const SphereConstraint c[1] = {{canonical(space, center), radius}};
  const Residual residual(space, c);
  const std::vector<Chart> charts = solver_charts(space);
  const Point s = canonical(space, start);
  auto [index, x] = chart_coords(space, s);
  const Chart& chart = charts[index];
  const double err = std::abs(unchecked_distance(space, s, c[0].center) - radius);
  if (err <= tol.tau_sphere) return s;
  const double step = std::max(err, 1e-3 * radius) / chart.unit_length;
  auto hit = descend(space, chart, index, x, step, residual, tol, std::numeric_limits<double>::infinity());
  if (!hit) return std::nullopt;
  return hit->point;
}

void require_apexes_on_sphere(const SpaceSpec& space, const Point& p, std::span<const Point> apexes, double r,
                              const Tolerances& tol) {
  for (const Point& a : apexes) {
    const double d = distance(space, p, a);
    if (std::abs(d - r) > tol.tau_sphere) {
      throw InvalidInput("apex is not on S(p; r): d(p, apex) = " + std::to_string(d) +
                         ", r = " + std::to_string(r));
    }
  }
}

double h_value(const SpaceSpec& space, const Point& p, std::span<const Point> apexes, double r,
               std::span<const double> t, const Tolerances& tol) {
  require_apexes_on_sphere(space, p, apexes, r, tol);
  return h_free(space, p, apexes, r, t, tol);
}

double h_free(const SpaceSpec& space, const Point& p, std::span<const Point> apexes, double r,
              std::span<const double> t, const Tolerances& tol) {
  require(r > 0.0 && std::isfinite(r), "r must be positive");
  require(apexes.size() == t.size(), "h needs one radius per center");
  for (double ti : t) require(ti >= 0.0 && std::isfinite(ti), "sphere radii t_i must be non-negative");

  // Order (apex, t) pairs canonically so h is permutation-invariant bit for bit.
  std::vector<SphereConstraint> rest;
  for (std::size_t i = 0; i < apexes.size(); ++i) rest.push_back({canonical(space, apexes[i]), t[i]});
  std::stable_sort(rest.begin(), rest.end(), [](const SphereConstraint& a, const SphereConstraint& b) {
    if (a.center.sheet != b.center.sheet) return a.center.sheet < b.center.sheet;
    if (a.center.x != b.center.x) return a.center.x < b.center.x;
    return a.radius < b.radius;
  });
  std::vector<SphereConstraint> cs;
  cs.push_back({canonical(space, p), r});
  cs.insert(cs.end(), rest.begin(), rest.end());

  const IntersectionSet set = solve_intersection(space, cs, tol);
  if (set.clusters.size() < 2 || set.is_continuum) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < set.clusters.size(); ++i) {
    for (std::size_t j = i + 1; j < set.clusters.size(); ++j) {
      best = std::min(best, unchecked_distance(space, set.clusters[i].representative, set.clusters[j].representative));
    }
  }
  return best;
}

}  // namespace tetraprop
