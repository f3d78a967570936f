// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace tetraprop {

using Vec3 = std::array<double, 3>;

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

/// Flat R^n, 1 <= n <= 4.
struct Euclidean {
  int dim = 2;
  friend bool operator==(const Euclidean&, const Euclidean&) = default;
};

/// S^2 scaled to radius rho with the intrinsic (great-circle) metric.
struct RoundSphere {
  double rho = 1.0;
  friend bool operator==(const RoundSphere&, const RoundSphere&) = default;
};

/// S^2(rho) modulo the antipodal map.
struct ProjectivePlane {
  double rho = 1.0;
  friend bool operator==(const ProjectivePlane&, const ProjectivePlane&) = default;
};

/// Bases admitted under a cone: the only catalog entries with diameter <= pi.
using ConeBase = std::variant<RoundSphere, ProjectivePlane>;

/// Euclidean cone K(Y) = Y x [0, inf) / Y x {0}.
struct Cone {
  ConeBase base;
  friend bool operator==(const Cone&, const Cone&) = default;
};

/// R^3 modulo x ~ -x; isometric to K(RP^2(1)).
struct ConeOfProjectivePlane {
  friend bool operator==(const ConeOfProjectivePlane&, const ConeOfProjectivePlane&) = default;
};

/// xy-plane union the half-plane {x = 0, z >= 0}, intrinsic metric.
struct GluedPlanes {
  friend bool operator==(const GluedPlanes&, const GluedPlanes&) = default;
};

/// xy-plane union the non-negative z-axis, intrinsic metric.
struct PlaneWithRay {
  friend bool operator==(const PlaneWithRay&, const PlaneWithRay&) = default;
};

/// The level set Y x {s} inside K(Y), with the restricted cone metric.
struct ConeSlice {
  ConeBase base;
  double s = 1.0;
  friend bool operator==(const ConeSlice&, const ConeSlice&) = default;
};

using SpaceSpec = std::variant<Euclidean, RoundSphere, ProjectivePlane, Cone,
                               ConeOfProjectivePlane, GluedPlanes, PlaneWithRay, ConeSlice>;

/// Throws InvalidInput when a catalog invariant is violated.
void validate_space(const SpaceSpec& space);

std::string space_name(const SpaceSpec& space);

// ---------------------------------------------------------------------------
// Points
// ---------------------------------------------------------------------------

enum class Sheet : std::uint8_t { kNone, kXY, kYZ, kPlane, kRay };

/// Chart coordinates. Layout by space:
///   Euclidean(n)               x[0..n)
///   RoundSphere, ProjectivePlane, ConeSlice, cone bases: unit vector x[0..3)
///   Cone                       x[0..3) base direction, x[3] radial t >= 0
///   ConeOfProjectivePlane      x[0..3)
///   GluedPlanes  kXY: (x, y)   kYZ: (y, z), z >= 0
///   PlaneWithRay kPlane: (x, y) kRay: (z), z >= 0
struct Point {
  Sheet sheet = Sheet::kNone;
  std::array<double, 4> x{};

  friend bool operator==(const Point&, const Point&) = default;
};

Point euclidean_point(std::span<const double> coords);
Point sphere_point(const Vec3& direction);  // normalizes
Point cone_point(const Vec3& direction, double t);
Point cone_vertex();
Point xy_point(double x, double y);
Point yz_point(double y, double z);
Point plane_point(double x, double y);
Point ray_point(double z);

/// Checks chart constraints and returns the canonical representative
/// (quotient orbits, seam points, cone vertex).
Point canonical(const SpaceSpec& space, const Point& p);

/// Intrinsic distance with full validation of both points.
double distance(const SpaceSpec& space, const Point& a, const Point& b);

/// Hot-path distance: charts are assumed valid.
double unchecked_distance(const SpaceSpec& space, const Point& a, const Point& b);

/// Intrinsic distance on a cone base.
double base_distance(const ConeBase& base, const Vec3& u, const Vec3& v);
double base_diameter(const ConeBase& base);

/// Analytic diameter; nullopt means unbounded.
std::optional<double> diameter(const SpaceSpec& space);

/// Hausdorff dimension of the top stratum.
int natural_dimension(const SpaceSpec& space);

/// Coordinates used when packing a point into a flat record (JSON, hashes).
std::vector<double> point_coords(const SpaceSpec& space, const Point& p);

// ---------------------------------------------------------------------------
// Regions and sampling
// ---------------------------------------------------------------------------

struct BallRegion {
  Point center;
  double radius = 1.0;
};

/// One sheet of a glued complex (or the whole chart of a one-sheet space),
/// truncated to |coord| <= half_width. Bounded charts ignore the width.
struct SheetRegion {
  Sheet sheet = Sheet::kNone;
  double half_width = 1.0;
};

/// Axis-aligned box, Euclidean spaces only.
struct BoxRegion {
  std::vector<double> lo;
  std::vector<double> hi;
};

/// Entire space; only valid for bounded spaces.
struct WholeSpace {};

using Region = std::variant<BallRegion, SheetRegion, BoxRegion, WholeSpace>;

/// A chart patch with a uniform sampler w.r.t. its Hausdorff measure.
/// Patches from ball_patches() cover the requested ball.
struct Patch {
  Sheet sheet = Sheet::kNone;
  int dim = 0;           // Hausdorff dimension of the patch
  double measure = 0.0;  // dim-dimensional measure
  // Parameters interpreted per space; see sampling.cpp.
  std::array<double, 4> lo{};
  std::array<double, 4> hi{};
};

std::vector<Patch> ball_patches(const SpaceSpec& space, const Point& center, double radius);
std::vector<Patch> region_patches(const SpaceSpec& space, const Region& region);
Point sample_patch(const SpaceSpec& space, const Patch& patch, class Rng& rng);

bool region_contains(const SpaceSpec& space, const Region& region, const Point& p);

/// Deterministic point in the region: same (seed, index) gives the same bits.
Point sample_point(const SpaceSpec& space, const Region& region, std::uint64_t seed,
                   std::uint64_t index = 0);

}  // namespace tetraprop
