// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#include "spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace tetraprop {
namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Vec3 head3(const Point& p) { return {p.x[0], p.x[1], p.x[2]}; }

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

double angle_between(const Vec3& u, const Vec3& v) {
  const Vec3 cross{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
  const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  return std::atan2(norm3(cross), dot);
}

/// Flips v so that its first nonzero coordinate is positive.
Vec3 canonical_sign(Vec3 v) {
  for (double c : v) {
    if (c > 0.0) return v;
    if (c < 0.0) return {-v[0], -v[1], -v[2]};
  }
  return v;
}

bool is_projective(const ConeBase& base) { return std::holds_alternative<ProjectivePlane>(base); }

double base_rho(const ConeBase& base) {
  return std::visit([](const auto& b) { return b.rho; }, base);
}

Vec3 checked_unit(const Point& p, const char* what) {
  const Vec3 v = head3(p);
  const double n = norm3(v);
  if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << what << ": direction must be a unit vector (norm " << n << ")";
    throw InvalidInput(msg.str());
  }
  return {v[0] / n, v[1] / n, v[2] / n};
}

void require_finite(const Point& p, int count) {
  for (int i = 0; i < count; ++i) {
    require(std::isfinite(p.x[i]), "point coordinates must be finite");
  }
}

void require_sheet(const Point& p, Sheet expected, const char* space) {
  if (p.sheet != expected) {
    throw InvalidInput(std::string(space) + ": unexpected sheet tag on point");
  }
}

Point canonical_base_point(const ConeBase& base, const Point& p, const char* what) {
  require_sheet(p, Sheet::kNone, what);
  Vec3 u = checked_unit(p, what);
  if (is_projective(base)) u = canonical_sign(u);
  Point out;
  out.x = {u[0], u[1], u[2], 0.0};
  return out;
}

void validate_base(const ConeBase& base) {
  const double rho = base_rho(base);
  require(std::isfinite(rho) && rho > 0.0, "sphere radius rho must be positive");
  require(base_diameter(base) <= kPi + 1e-15, "cone base must have diameter <= pi");
}

}  // namespace

// ---------------------------------------------------------------------------

void validate_space(const SpaceSpec& space) {
  std::visit(Overloaded{
                 [](const Euclidean& e) {
                   require(e.dim >= 1 && e.dim <= 4, "euclidean dimension must be in [1, 4]");
                 },
                 [](const RoundSphere& s) {
                   require(std::isfinite(s.rho) && s.rho > 0.0, "sphere radius rho must be positive");
                 },
                 [](const ProjectivePlane& s) {
                   require(std::isfinite(s.rho) && s.rho > 0.0,
                           "projective plane radius rho must be positive");
                 },
                 [](const Cone& c) { validate_base(c.base); },
                 [](const ConeSlice& c) {
                   validate_base(c.base);
                   require(std::isfinite(c.s) && c.s > 0.0, "slice level s must be positive");
                 },
                 [](const auto&) {},
             },
             space);
}

std::string space_name(const SpaceSpec& space) {
  auto base_name = [](const ConeBase& b) {
    std::ostringstream o;
    o << (is_projective(b) ? "projective_plane(" : "round_sphere(") << base_rho(b) << ")";
    return o.str();
  };
  return std::visit(Overloaded{
                        [](const Euclidean& e) { return "euclidean(" + std::to_string(e.dim) + ")"; },
                        [](const RoundSphere& s) {
                          std::ostringstream o;
                          o << "round_sphere(" << s.rho << ")";
                          return o.str();
                        },
                        [](const ProjectivePlane& s) {
                          std::ostringstream o;
                          o << "projective_plane(" << s.rho << ")";
                          return o.str();
                        },
                        [&](const Cone& c) { return "cone(" + base_name(c.base) + ")"; },
                        [](const ConeOfProjectivePlane&) { return std::string("cone_projective_plane"); },
                        [](const GluedPlanes&) { return std::string("glued_planes"); },
                        [](const PlaneWithRay&) { return std::string("plane_with_ray"); },
                        [&](const ConeSlice& c) {
                          std::ostringstream o;
                          o << "cone_slice(" << base_name(c.base) << ", s=" << c.s << ")";
                          return o.str();
                        },
                    },
                    space);
}

// ---------------------------------------------------------------------------

Point euclidean_point(std::span<const double> coords) {
  require(!coords.empty() && coords.size() <= 4, "euclidean point needs 1..4 coordinates");
  Point p;
  std::copy(coords.begin(), coords.end(), p.x.begin());
  return p;
}

Point sphere_point(const Vec3& direction) {
  const double n = norm3(direction);
  require(n > 0.0 && std::isfinite(n), "direction must be nonzero");
  Point p;
  p.x = {direction[0] / n, direction[1] / n, direction[2] / n, 0.0};
  return p;
}

Point cone_point(const Vec3& direction, double t) {
  Point p = sphere_point(direction);
  p.x[3] = t;
  return p;
}

Point cone_vertex() {
  Point p;
  p.x = {0.0, 0.0, 1.0, 0.0};
  return p;
}

Point xy_point(double x, double y) { return Point{Sheet::kXY, {x, y, 0.0, 0.0}}; }
Point yz_point(double y, double z) { return Point{Sheet::kYZ, {y, z, 0.0, 0.0}}; }
Point plane_point(double x, double y) { return Point{Sheet::kPlane, {x, y, 0.0, 0.0}}; }
Point ray_point(double z) { return Point{Sheet::kRay, {z, 0.0, 0.0, 0.0}}; }

Point canonical(const SpaceSpec& space, const Point& p) {
  return std::visit(
      Overloaded{
          [&](const Euclidean& e) {
            require_sheet(p, Sheet::kNone, "euclidean");
            require_finite(p, e.dim);
            Point out;
            std::copy_n(p.x.begin(), e.dim, out.x.begin());
            return out;
          },
          [&](const RoundSphere&) { return canonical_base_point(RoundSphere{}, p, "round_sphere"); },
          [&](const ProjectivePlane&) {
            return canonical_base_point(ProjectivePlane{}, p, "projective_plane");
          },
          [&](const ConeSlice& c) { return canonical_base_point(c.base, p, "cone_slice"); },
          [&](const Cone& c) {
            require_sheet(p, Sheet::kNone, "cone");
            require(std::isfinite(p.x[3]) && p.x[3] >= 0.0, "cone radial coordinate must be >= 0");
            if (p.x[3] == 0.0) return cone_vertex();
            Point out = canonical_base_point(c.base, p, "cone");
            out.x[3] = p.x[3];
            return out;
          },
          [&](const ConeOfProjectivePlane&) {
            require_sheet(p, Sheet::kNone, "cone_projective_plane");
            require_finite(p, 3);
            const Vec3 v = canonical_sign(head3(p));
            return Point{Sheet::kNone, {v[0], v[1], v[2], 0.0}};
          },
          [&](const GluedPlanes&) {
            require_finite(p, 2);
            if (p.sheet == Sheet::kXY) return xy_point(p.x[0], p.x[1]);
            require(p.sheet == Sheet::kYZ, "glued_planes: point needs sheet xy or yz");
            require(p.x[1] >= 0.0, "glued_planes: yz sheet requires z >= 0");
            if (p.x[1] == 0.0) return xy_point(0.0, p.x[0]);  // seam
            return yz_point(p.x[0], p.x[1]);
          },
          [&](const PlaneWithRay&) {
            if (p.sheet == Sheet::kPlane) {
              require_finite(p, 2);
              return plane_point(p.x[0], p.x[1]);
            }
            require(p.sheet == Sheet::kRay, "plane_with_ray: point needs sheet plane or ray");
            require(std::isfinite(p.x[0]) && p.x[0] >= 0.0, "plane_with_ray: ray requires z >= 0");
            if (p.x[0] == 0.0) return plane_point(0.0, 0.0);
            return ray_point(p.x[0]);
          },
      },
      space);
}

double base_distance(const ConeBase& base, const Vec3& u, const Vec3& v) {
  const double angle = angle_between(u, v);
  if (is_projective(base)) return base_rho(base) * std::min(angle, kPi - angle);
  return base_rho(base) * angle;
}

double base_diameter(const ConeBase& base) {
  return is_projective(base) ? kPi * base_rho(base) / 2.0 : kPi * base_rho(base);
}

double unchecked_distance(const SpaceSpec& space, const Point& a, const Point& b) {
  return std::visit(
      Overloaded{
          [&](const Euclidean& e) {
            double sum = 0.0;
            for (int i = 0; i < e.dim; ++i) {
              const double d = a.x[i] - b.x[i];
              sum += d * d;
            }
            return std::sqrt(sum);
          },
          [&](const RoundSphere& s) { return s.rho * angle_between(head3(a), head3(b)); },
          [&](const ProjectivePlane& s) {
            const double angle = angle_between(head3(a), head3(b));
            return s.rho * std::min(angle, kPi - angle);
          },
          [&](const Cone& c) {
            const double t = a.x[3];
            const double s = b.x[3];
            if (t == 0.0 || s == 0.0) return std::abs(t - s);
            const double half = 0.5 * base_distance(c.base, head3(a), head3(b));
            const double sh = std::sin(half);
            // (t - s)^2 + 2ts(1 - cos d), written without cancellation
            return std::sqrt((t - s) * (t - s) + 4.0 * t * s * sh * sh);
          },
          [&](const ConeSlice& c) {
            return 2.0 * c.s * std::sin(0.5 * base_distance(c.base, head3(a), head3(b)));
          },
          [&](const ConeOfProjectivePlane&) {
            double minus = 0.0;
            double plus = 0.0;
            for (int i = 0; i < 3; ++i) {
              minus += (a.x[i] - b.x[i]) * (a.x[i] - b.x[i]);
              plus += (a.x[i] + b.x[i]) * (a.x[i] + b.x[i]);
            }
            return std::sqrt(std::min(minus, plus));
          },
          [&](const GluedPlanes&) {
            if (a.sheet == b.sheet) return std::hypot(a.x[0] - b.x[0], a.x[1] - b.x[1]);
            const Point& xy = a.sheet == Sheet::kXY ? a : b;
            const Point& yz = a.sheet == Sheet::kXY ? b : a;
            // unfold the yz half-plane about the seam
            return std::hypot(std::abs(xy.x[0]) + yz.x[1], xy.x[1] - yz.x[0]);
          },
          [&](const PlaneWithRay&) {
            if (a.sheet == Sheet::kPlane && b.sheet == Sheet::kPlane) {
              return std::hypot(a.x[0] - b.x[0], a.x[1] - b.x[1]);
            }
            if (a.sheet == Sheet::kRay && b.sheet == Sheet::kRay) return std::abs(a.x[0] - b.x[0]);
            const Point& q = a.sheet == Sheet::kPlane ? a : b;
            const Point& z = a.sheet == Sheet::kPlane ? b : a;
            return std::hypot(q.x[0], q.x[1]) + z.x[0];
          },
      },
      space);
}

double distance(const SpaceSpec& space, const Point& a, const Point& b) {
  validate_space(space);
  return unchecked_distance(space, canonical(space, a), canonical(space, b));
}

std::optional<double> diameter(const SpaceSpec& space) {
  validate_space(space);
  return std::visit(Overloaded{
                        [](const RoundSphere& s) -> std::optional<double> { return kPi * s.rho; },
                        [](const ProjectivePlane& s) -> std::optional<double> { return kPi * s.rho / 2.0; },
                        [](const ConeSlice& c) -> std::optional<double> {
                          return 2.0 * c.s * std::sin(0.5 * base_diameter(c.base));
                        },
                        [](const auto&) -> std::optional<double> { return std::nullopt; },
                    },
                    space);
}

int natural_dimension(const SpaceSpec& space) {
  return std::visit(Overloaded{
                        [](const Euclidean& e) { return e.dim; },
                        [](const Cone&) { return 3; },
                        [](const ConeOfProjectivePlane&) { return 3; },
                        [](const auto&) { return 2; },
                    },
                    space);
}

std::vector<double> point_coords(const SpaceSpec& space, const Point& p) {
  return std::visit(Overloaded{
                        [&](const Euclidean& e) {
                          return std::vector<double>(p.x.begin(), p.x.begin() + e.dim);
                        },
                        [&](const Cone&) { return std::vector<double>(p.x.begin(), p.x.end()); },
                        [&](const GluedPlanes&) { return std::vector<double>{p.x[0], p.x[1]}; },
                        [&](const PlaneWithRay&) {
                          if (p.sheet == Sheet::kRay) return std::vector<double>{p.x[0]};
                          return std::vector<double>{p.x[0], p.x[1]};
                        },
                        [&](const auto&) { return std::vector<double>{p.x[0], p.x[1], p.x[2]}; },
                    },
                    space);
}

}  // namespace tetraprop
