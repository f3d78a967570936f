// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spaces.hpp"

namespace tetraprop {

/// S(center; radius) = { x : d(x, center) = radius }.
struct SphereConstraint {
  Point center;
  double radius = 1.0;
};

/// Numerical policy of the intersection solver. Lengths are absolute;
/// use Tolerances::for_radius to scale the defaults to a working radius.
struct Tolerances {
  double tau_sphere = 1e-7;     // accepted |d(x, c) - t|
  double delta_cluster = 1e-3;  // single-linkage merge radius
  double kappa_continuum = 10;  // cluster extent (in delta units) that marks a continuum
  int grid_m = 17;              // checker nodes per t-axis
  int refine_iters = 200;       // simplex iterations per descent
  int samples = 4096;           // candidate points near the first sphere
  int descents = 96;            // candidates promoted to local descent
  std::uint64_t seed = 0;

  static Tolerances for_radius(double r);
  void validate() const;
};

struct Cluster {
  Point representative;
  int member_count = 0;
  double diameter = 0.0;
};

struct IntersectionSet {
  std::vector<Cluster> clusters;
  bool is_continuum = false;
  double residual_max = 0.0;
};

/// Numerically solves the simultaneous sphere constraints. Deterministic
/// given tol.seed and the constraint data. An empty result is valid.
IntersectionSet solve_intersection(const SpaceSpec& space, std::span<const SphereConstraint> constraints,
                                   const Tolerances& tol);

/// Converged points on a single sphere S(center; radius), unclustered.
/// Used as an apex pool by the apex search.
std::vector<Point> sphere_samples(const SpaceSpec& space, const Point& center, double radius,
                                  const Tolerances& tol);

/// Projects `start` onto S(center; radius) by local descent; nullopt when
/// the descent does not reach tau_sphere.
std::optional<Point> project_to_sphere(const SpaceSpec& space, const Point& start, const Point& center,
                                       double radius, const Tolerances& tol);

/// h(p, r, t_1..t_{n-1}): the smallest distance between distinct points of
/// S(p, p_1..p_{n-1}; r, t_1..t_{n-1}); 0 when the set has fewer than two
/// points or contains a continuum.
double h_value(const SpaceSpec& space, const Point& p, std::span<const Point> apexes, double r,
               std::span<const double> t, const Tolerances& tol);

/// The same infimum for arbitrary centers q_i, not necessarily on S(p; r).
double h_free(const SpaceSpec& space, const Point& p, std::span<const Point> centers, double r,
              std::span<const double> t, const Tolerances& tol);

/// Throws InvalidInput unless every apex lies on S(p; r) within tau_sphere.
void require_apexes_on_sphere(const SpaceSpec& space, const Point& p, std::span<const Point> apexes, double r,
                              const Tolerances& tol);

}  // namespace tetraprop
