// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "rng.hpp"
#include "spaces.hpp"

using namespace tetraprop;

namespace {

constexpr double kPi = std::numbers::pi;

double angle(const Vec3& u, const Vec3& v) {
  const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

std::vector<SpaceSpec> catalog() {
  return {Euclidean{2},        Euclidean{3},          RoundSphere{0.7},
          ProjectivePlane{1.3}, Cone{RoundSphere{0.25}}, Cone{ProjectivePlane{1.0}},
          ConeOfProjectivePlane{}, GluedPlanes{},      PlaneWithRay{},
          ConeSlice{RoundSphere{1.0}, 2.0}};
}

Point origin_of(const SpaceSpec& X) {
  if (std::holds_alternative<Euclidean>(X)) return euclidean_point(std::vector<double>(std::get<Euclidean>(X).dim, 0.0));
  if (std::holds_alternative<Cone>(X)) return cone_vertex();
  if (std::holds_alternative<ConeOfProjectivePlane>(X)) return Point{Sheet::kNone, {0, 0, 0, 0}};
  if (std::holds_alternative<GluedPlanes>(X)) return xy_point(0, 0);
  if (std::holds_alternative<PlaneWithRay>(X)) return plane_point(0, 0);
  return sphere_point({0, 0, 1});
}

}  // namespace

TEST_SUITE("spaces") {
  TEST_CASE("metric axioms on sampled points") {
    for (const SpaceSpec& X : catalog()) {
      CAPTURE(space_name(X));
      const Region ball = BallRegion{origin_of(X), 1.5};
      std::vector<Point> pts;
      for (std::uint64_t i = 0; i < 24; ++i) pts.push_back(sample_point(X, ball, 7, i));
      for (const Point& a : pts) {
        CHECK(distance(X, a, a) <= 1e-7);
        for (const Point& b : pts) {
          const double dab = distance(X, a, b);
          CHECK(dab >= 0.0);
          CHECK(dab == doctest::Approx(distance(X, b, a)).epsilon(1e-12));
          for (const Point& c : pts) CHECK(dab <= distance(X, a, c) + distance(X, c, b) + 1e-9);
        }
      }
    }
  }

  TEST_CASE("euclidean distance") {
    const double a[3] = {1, 2, 3};
    const double b[3] = {4, 6, 3};
    CHECK(distance(Euclidean{3}, euclidean_point(a), euclidean_point(b)) == doctest::Approx(5.0));
  }

  TEST_CASE("glued planes: distance across the seam unfolds") {
    const SpaceSpec X = GluedPlanes{};
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
      const double x = rng.uniform(-2, 2), y = rng.uniform(-2, 2);
      const double y2 = rng.uniform(-2, 2), z = rng.uniform(0, 2);
      const double oracle = std::hypot(std::abs(x) + z, y - y2);
      CHECK(distance(X, xy_point(x, y), yz_point(y2, z)) == doctest::Approx(oracle).epsilon(1e-9));
    }
    CHECK(distance(X, xy_point(0, 1), yz_point(1, 0)) == doctest::Approx(0.0));
    CHECK(canonical(X, yz_point(0.5, 0.0)) == canonical(X, xy_point(0.0, 0.5)));
  }

  TEST_CASE("plane with ray: paths run through the origin") {
    const SpaceSpec X = PlaneWithRay{};
    CHECK(distance(X, plane_point(3, 4), ray_point(2)) == doctest::Approx(7.0));
    CHECK(distance(X, ray_point(0.5), ray_point(2)) == doctest::Approx(1.5));
    CHECK(distance(X, plane_point(1, 1), plane_point(4, 5)) == doctest::Approx(5.0));
  }

  TEST_CASE("cone chord identity") {
    for (double rho : {0.25, 0.7, 1.0}) {
      const SpaceSpec X = Cone{RoundSphere{rho}};
      Rng rng(11);
      for (int i = 0; i < 100; ++i) {
        const Vec3 u = rng.unit3(), v = rng.unit3();
        const double s = rng.uniform(0, 2), t = rng.uniform(0, 2);
        const double dy = std::min(rho * angle(u, v), kPi);
        const double oracle = std::sqrt(std::max(0.0, s * s + t * t - 2 * s * t * std::cos(dy)));
        CHECK(distance(X, cone_point(u, s), cone_point(v, t)) == doctest::Approx(oracle).epsilon(1e-9));
      }
      CHECK(distance(X, cone_vertex(), cone_point({0, 1, 0}, 1.25)) == doctest::Approx(1.25));
    }
  }

  TEST_CASE("quotient consistency") {
    Rng rng(5);
    const SpaceSpec P = ProjectivePlane{1.3};
    const SpaceSpec K = ConeOfProjectivePlane{};
    for (int i = 0; i < 100; ++i) {
      const Vec3 u = rng.unit3(), v = rng.unit3();
      const double a = angle(u, v);
      CHECK(distance(P, sphere_point(u), sphere_point(v)) == doctest::Approx(1.3 * std::min(a, kPi - a)).epsilon(1e-9));
      const Vec3 mu = {-u[0], -u[1], -u[2]};
      CHECK(distance(P, sphere_point(u), sphere_point(mu)) == doctest::Approx(0.0).scale(1.0));

      const Point x{Sheet::kNone, {u[0], u[1], u[2], 0}};
      const Point y{Sheet::kNone, {2 * v[0], 2 * v[1], 2 * v[2], 0}};
      const double plus = std::hypot(u[0] - 2 * v[0], u[1] - 2 * v[1], u[2] - 2 * v[2]);
      const double minus = std::hypot(u[0] + 2 * v[0], u[1] + 2 * v[1], u[2] + 2 * v[2]);
      CHECK(distance(K, x, y) == doctest::Approx(std::min(plus, minus)).epsilon(1e-9));
    }
  }

  TEST_CASE("canonical is idempotent") {
    for (const SpaceSpec& X : catalog()) {
      const Region ball = BallRegion{origin_of(X), 1.0};
      for (std::uint64_t i = 0; i < 10; ++i) {
        const Point p = canonical(X, sample_point(X, ball, 9, i));
        CHECK(canonical(X, p) == p);
      }
    }
  }

  TEST_CASE("diameters") {
    CHECK_FALSE(diameter(Euclidean{2}).has_value());
    CHECK(*diameter(RoundSphere{0.5}) == doctest::Approx(0.5 * kPi));
    CHECK(*diameter(ProjectivePlane{1.0}) == doctest::Approx(0.5 * kPi));
    CHECK(base_diameter(RoundSphere{0.3}) == doctest::Approx(0.3 * kPi));
  }

  TEST_CASE("catalog validation") {
    CHECK_THROWS_AS(validate_space(Euclidean{0}), InvalidInput);
    CHECK_THROWS_AS(validate_space(RoundSphere{-1.0}), InvalidInput);
    CHECK_THROWS_AS(validate_space(Cone{RoundSphere{2.0}}), InvalidInput);
    CHECK_NOTHROW(validate_space(Cone{RoundSphere{1.0}}));
    CHECK_THROWS_AS(canonical(GluedPlanes{}, yz_point(0.0, -1.0)), InvalidInput);
    CHECK_THROWS_AS(canonical(PlaneWithRay{}, ray_point(-0.5)), InvalidInput);
  }

  TEST_CASE("sampling is deterministic and stays in the region") {
    const SpaceSpec X = GluedPlanes{};
    const Region ball = BallRegion{xy_point(0.2, 0.0), 1.0};
    for (std::uint64_t i = 0; i < 50; ++i) {
      const Point a = sample_point(X, ball, 17, i);
      CHECK(a == sample_point(X, ball, 17, i));
      CHECK(region_contains(X, ball, a));
    }
  }
}
