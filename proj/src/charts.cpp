// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#include "charts.hpp"

#include <cmath>

namespace tetraprop {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double rho_of(const ConeBase& base) {
  return std::visit([](const auto& b) { return b.rho; }, base);
}

Point direction_point(const Coords& x) {
  const double n = std::hypot(x[0], x[1], x[2]);
  if (!(n > 0.0)) return cone_vertex();  // arbitrary pole; only hit on degenerate input
  return Point{Sheet::kNone, {x[0] / n, x[1] / n, x[2] / n, 0.0}};
}

Point flip_sign(Point p) {
  for (int i = 0; i < 3; ++i) {
    if (p.x[i] > 0.0) return p;
    if (p.x[i] < 0.0) {
      for (int k = 0; k < 3; ++k) p.x[k] = -p.x[k];
      return p;
    }
  }
  return p;
}

}  // namespace

std::vector<Chart> solver_charts(const SpaceSpec& space) {
  return std::visit(Overloaded{
                        [](const Euclidean& e) { return std::vector<Chart>{{Sheet::kNone, e.dim, 1.0}}; },
                        [](const RoundSphere& s) { return std::vector<Chart>{{Sheet::kNone, 3, s.rho}}; },
                        [](const ProjectivePlane& s) { return std::vector<Chart>{{Sheet::kNone, 3, s.rho}}; },
                        [](const ConeSlice& c) {
                          return std::vector<Chart>{{Sheet::kNone, 3, c.s * rho_of(c.base)}};
                        },
                        [](const Cone&) { return std::vector<Chart>{{Sheet::kNone, 3, 1.0}}; },
                        [](const ConeOfProjectivePlane&) { return std::vector<Chart>{{Sheet::kNone, 3, 1.0}}; },
                        [](const GluedPlanes&) {
                          return std::vector<Chart>{{Sheet::kXY, 2, 1.0}, {Sheet::kYZ, 2, 1.0}};
                        },
                        [](const PlaneWithRay&) {
                          return std::vector<Chart>{{Sheet::kPlane, 2, 1.0}, {Sheet::kRay, 1, 1.0}};
                        },
                    },
                    space);
}

Point chart_point(const SpaceSpec& space, const Chart& chart, const Coords& x) {
  return std::visit(
      Overloaded{
          [&](const Euclidean&) {
            Point p;
            for (int i = 0; i < chart.dim; ++i) p.x[i] = x[i];
            return p;
          },
          [&](const RoundSphere&) { return direction_point(x); },
          [&](const ProjectivePlane&) { return flip_sign(direction_point(x)); },
          [&](const ConeSlice& c) {
            Point p = direction_point(x);
            return std::holds_alternative<ProjectivePlane>(c.base) ? flip_sign(p) : p;
          },
          [&](const Cone& c) {
            const double t = std::hypot(x[0], x[1], x[2]);
            if (!(t > 0.0)) return cone_vertex();
            Point p{Sheet::kNone, {x[0] / t, x[1] / t, x[2] / t, t}};
            if (std::holds_alternative<ProjectivePlane>(c.base)) {
              p = flip_sign(p);
              p.x[3] = t;
            }
            return p;
          },
          [&](const ConeOfProjectivePlane&) { return flip_sign(Point{Sheet::kNone, {x[0], x[1], x[2], 0.0}}); },
          [&](const GluedPlanes&) {
            if (chart.sheet == Sheet::kXY) return xy_point(x[0], x[1]);
            const double z = std::abs(x[1]);
            return z == 0.0 ? xy_point(0.0, x[0]) : yz_point(x[0], z);
          },
          [&](const PlaneWithRay&) {
            if (chart.sheet == Sheet::kPlane) return plane_point(x[0], x[1]);
            const double z = std::abs(x[0]);
            return z == 0.0 ? plane_point(0.0, 0.0) : ray_point(z);
          },
      },
      space);
}

std::pair<int, Coords> chart_coords(const SpaceSpec& space, const Point& p) {
  Coords c{};
  int index = 0;
  std::visit(Overloaded{
                 [&](const Cone&) {
                   for (int i = 0; i < 3; ++i) c[i] = p.x[i] * p.x[3];
                 },
                 [&](const GluedPlanes&) {
                   index = p.sheet == Sheet::kYZ ? 1 : 0;
                   c[0] = p.x[0];
                   c[1] = p.x[1];
                 },
                 [&](const PlaneWithRay&) {
                   index = p.sheet == Sheet::kRay ? 1 : 0;
                   c[0] = p.x[0];
                   c[1] = p.sheet == Sheet::kRay ? 0.0 : p.x[1];
                 },
                 [&](const auto&) { c = p.x; },
             },
             space);
  return {index, c};
}

}  // namespace tetraprop
