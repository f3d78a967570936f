// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

// Dominating samplers for balls and regions in the catalog spaces.
//
// Every patch is sampled uniformly with respect to its own Hausdorff
// measure, so Monte Carlo hit fractions times patch measures estimate the
// measure of the target set.

#include <cmath>
#include <numbers>

#include "rng.hpp"
#include "spaces.hpp"

namespace tetraprop {
namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double base_area(const ConeBase& base) {
  return std::visit(Overloaded{
                        [](const RoundSphere& s) { return 4.0 * kPi * s.rho * s.rho; },
                        [](const ProjectivePlane& s) { return 2.0 * kPi * s.rho * s.rho; },
                    },
                    base);
}

Patch box_patch(Sheet sheet, int dim, std::span<const double> lo, std::span<const double> hi) {
  Patch p;
  p.sheet = sheet;
  p.dim = dim;
  p.measure = 1.0;
  for (int i = 0; i < dim; ++i) {
    p.lo[i] = lo[i];
    p.hi[i] = hi[i];
    p.measure *= hi[i] - lo[i];
  }
  return p;
}

Patch square(Sheet sheet, double x0, double x1, double y0, double y1) {
  const double lo[2] = {x0, y0};
  const double hi[2] = {x1, y1};
  return box_patch(sheet, 2, lo, hi);
}

Patch segment(Sheet sheet, double z0, double z1) {
  const double lo[1] = {z0};
  const double hi[1] = {z1};
  return box_patch(sheet, 1, lo, hi);
}

Patch whole_sphere_patch(double measure) {
  Patch p;
  p.dim = 2;
  p.measure = measure;
  return p;
}

Patch cone_shell(const ConeBase& base, double t0, double t1) {
  Patch p;
  p.dim = 3;
  p.lo[0] = t0;
  p.hi[0] = t1;
  p.measure = base_area(base) * (t1 * t1 * t1 - t0 * t0 * t0) / 3.0;
  return p;
}

Patch origin_ball(double radius) {
  Patch p;
  p.dim = 3;
  p.hi[0] = radius;
  p.measure = 0.5 * 4.0 / 3.0 * kPi * radius * radius * radius;
  return p;
}

std::vector<Patch> bounded_whole(const SpaceSpec& space) {
  return std::visit(
      Overloaded{
          [](const RoundSphere& s) {
            return std::vector<Patch>{whole_sphere_patch(4.0 * kPi * s.rho * s.rho)};
          },
          [](const ProjectivePlane& s) {
            return std::vector<Patch>{whole_sphere_patch(2.0 * kPi * s.rho * s.rho)};
          },
          [](const ConeSlice& c) {
            return std::vector<Patch>{whole_sphere_patch(base_area(c.base) * c.s * c.s)};
          },
          [](const auto&) -> std::vector<Patch> {
            throw InvalidInput("region is unbounded: the space has infinite diameter");
          },
      },
      space);
}

void keep_if_positive(std::vector<Patch>& out, const Patch& p) {
  if (p.measure > 0.0) out.push_back(p);
}

}  // namespace

std::vector<Patch> ball_patches(const SpaceSpec& space, const Point& center, double radius) {
  require(radius > 0.0 && std::isfinite(radius), "ball radius must be positive");
  const Point c = canonical(space, center);
  const double R = radius;
  return std::visit(
      Overloaded{
          [&](const Euclidean& e) {
            std::array<double, 4> lo{};
            std::array<double, 4> hi{};
            for (int i = 0; i < e.dim; ++i) {
              lo[i] = c.x[i] - R;
              hi[i] = c.x[i] + R;
            }
            return std::vector<Patch>{box_patch(Sheet::kNone, e.dim, lo, hi)};
          },
          [&](const Cone& k) {
            return std::vector<Patch>{cone_shell(k.base, std::max(0.0, c.x[3] - R), c.x[3] + R)};
          },
          [&](const ConeOfProjectivePlane&) {
            return std::vector<Patch>{origin_ball(std::hypot(c.x[0], c.x[1], c.x[2]) + R)};
          },
          [&](const GluedPlanes&) {
            std::vector<Patch> out;
            if (c.sheet == Sheet::kXY) {
              const double x = c.x[0];
              const double y = c.x[1];
              keep_if_positive(out, square(Sheet::kXY, x - R, x + R, y - R, y + R));
              if (R > std::abs(x)) keep_if_positive(out, square(Sheet::kYZ, y - R, y + R, 0.0, R - std::abs(x)));
            } else {
              const double y = c.x[0];
              const double z = c.x[1];
              if (R > z) keep_if_positive(out, square(Sheet::kXY, -(R - z), R - z, y - R, y + R));
              keep_if_positive(out, square(Sheet::kYZ, y - R, y + R, std::max(0.0, z - R), z + R));
            }
            return out;
          },
          [&](const PlaneWithRay&) {
            std::vector<Patch> out;
            if (c.sheet == Sheet::kPlane) {
              const double x = c.x[0];
              const double y = c.x[1];
              keep_if_positive(out, square(Sheet::kPlane, x - R, x + R, y - R, y + R));
              const double reach = R - std::hypot(x, y);
              if (reach > 0.0) keep_if_positive(out, segment(Sheet::kRay, 0.0, reach));
            } else {
              const double z = c.x[0];
              if (R > z) keep_if_positive(out, square(Sheet::kPlane, -(R - z), R - z, -(R - z), R - z));
              keep_if_positive(out, segment(Sheet::kRay, std::max(0.0, z - R), z + R));
            }
            return out;
          },
          [&](const auto&) { return bounded_whole(space); },
      },
      space);
}

std::vector<Patch> region_patches(const SpaceSpec& space, const Region& region) {
  validate_space(space);
  return std::visit(
      Overloaded{
          [&](const BallRegion& b) { return ball_patches(space, b.center, b.radius); },
          [&](const BoxRegion& b) {
            const auto* e = std::get_if<Euclidean>(&space);
            require(e != nullptr, "box regions are only defined on euclidean spaces");
            require(static_cast<int>(b.lo.size()) == e->dim && static_cast<int>(b.hi.size()) == e->dim,
                    "box region dimension mismatch");
            for (int i = 0; i < e->dim; ++i) require(b.lo[i] < b.hi[i], "empty region: box has lo >= hi");
            return std::vector<Patch>{box_patch(Sheet::kNone, e->dim, b.lo, b.hi)};
          },
          [&](const WholeSpace&) { return bounded_whole(space); },
          [&](const SheetRegion& s) {
            const double w = s.half_width;
            require(w > 0.0 && std::isfinite(w), "empty region: sheet half_width must be positive");
            return std::visit(
                Overloaded{
                    [&](const GluedPlanes&) {
                      require(s.sheet == Sheet::kXY || s.sheet == Sheet::kYZ, "glued_planes sheet must be xy or yz");
                      if (s.sheet == Sheet::kXY) return std::vector<Patch>{square(Sheet::kXY, -w, w, -w, w)};
                      return std::vector<Patch>{square(Sheet::kYZ, -w, w, 0.0, w)};
                    },
                    [&](const PlaneWithRay&) {
                      require(s.sheet == Sheet::kPlane || s.sheet == Sheet::kRay,
                              "plane_with_ray sheet must be plane or ray");
                      if (s.sheet == Sheet::kPlane) return std::vector<Patch>{square(Sheet::kPlane, -w, w, -w, w)};
                      return std::vector<Patch>{segment(Sheet::kRay, 0.0, w)};
                    },
                    [&](const Euclidean& e) {
                      require(s.sheet == Sheet::kNone, "euclidean space has a single sheet");
                      std::array<double, 4> lo{};
                      std::array<double, 4> hi{};
                      for (int i = 0; i < e.dim; ++i) {
                        lo[i] = -w;
                        hi[i] = w;
                      }
                      return std::vector<Patch>{box_patch(Sheet::kNone, e.dim, lo, hi)};
                    },
                    [&](const Cone& k) {
                      require(s.sheet == Sheet::kNone, "cone has a single sheet");
                      return std::vector<Patch>{cone_shell(k.base, 0.0, w)};
                    },
                    [&](const ConeOfProjectivePlane&) {
                      require(s.sheet == Sheet::kNone, "cone has a single sheet");
                      return std::vector<Patch>{origin_ball(w)};
                    },
                    [&](const auto&) {
                      require(s.sheet == Sheet::kNone, "space has a single sheet");
                      return bounded_whole(space);
                    },
                },
                space);
          },
      },
      region);
}

Point sample_patch(const SpaceSpec& space, const Patch& patch, Rng& rng) {
  return std::visit(
      Overloaded{
          [&](const Cone& k) {
            const double t0 = patch.lo[0];
            const double t1 = patch.hi[0];
            const double cube = t0 * t0 * t0 + rng.uniform() * (t1 * t1 * t1 - t0 * t0 * t0);
            const double t = std::cbrt(cube);
            const Vec3 u = rng.unit3();
            if (t == 0.0) return cone_vertex();
            return canonical(Cone{k.base}, cone_point(u, t));
          },
          [&](const ConeOfProjectivePlane&) {
            const Vec3 u = rng.unit3();
            const double rad = patch.hi[0] * std::cbrt(rng.uniform());
            return canonical(space, Point{Sheet::kNone, {u[0] * rad, u[1] * rad, u[2] * rad, 0.0}});
          },
          [&](const RoundSphere&) { return sphere_point(rng.unit3()); },
          [&](const ProjectivePlane&) { return canonical(space, sphere_point(rng.unit3())); },
          [&](const ConeSlice&) { return canonical(space, sphere_point(rng.unit3())); },
          [&](const auto&) {
            Point p;
            p.sheet = patch.sheet;
            for (int i = 0; i < patch.dim; ++i) p.x[i] = rng.uniform(patch.lo[i], patch.hi[i]);
            return canonical(space, p);
          },
      },
      space);
}

bool region_contains(const SpaceSpec& space, const Region& region, const Point& p) {
  return std::visit(Overloaded{
                        [&](const BallRegion& b) { return distance(space, b.center, p) < b.radius; },
                        [&](const BoxRegion& b) {
                          for (std::size_t i = 0; i < b.lo.size(); ++i) {
                            if (p.x[i] < b.lo[i] || p.x[i] > b.hi[i]) return false;
                          }
                          return true;
                        },
                        [&](const SheetRegion& s) {
                          if (s.sheet == Sheet::kNone) return true;
                          // seam points canonicalize onto xy / plane and belong to both sheets
                          const bool seam = (p.sheet == Sheet::kXY && p.x[0] == 0.0) ||
                                            (p.sheet == Sheet::kPlane && p.x[0] == 0.0 && p.x[1] == 0.0);
                          return p.sheet == s.sheet || seam;
                        },
                        [&](const WholeSpace&) { return true; },
                    },
                    region);
}

Point sample_point(const SpaceSpec& space, const Region& region, std::uint64_t seed, std::uint64_t index) {
  const std::vector<Patch> patches = region_patches(space, region);
  double total = 0.0;
  for (const Patch& p : patches) total += p.measure;
  require(total > 0.0, "empty region");

  Rng rng(mix_seed(seed, index));
  for (int attempt = 0; attempt < 100000; ++attempt) {
    double pick = rng.uniform() * total;
    std::size_t which = 0;
    while (which + 1 < patches.size() && pick >= patches[which].measure) {
      pick -= patches[which].measure;
      ++which;
    }
    const Point candidate = sample_patch(space, patches[which], rng);
    if (region_contains(space, region, candidate)) return candidate;
  }
  throw InvalidInput("empty region: rejection sampling found no point inside");
}

}  // namespace tetraprop
