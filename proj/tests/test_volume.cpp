// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "volume.hpp"

using namespace tetraprop;

namespace {

constexpr double kPi = std::numbers::pi;

Point origin(int n) { return euclidean_point(std::vector<double>(n, 0.0)); }

void check_mc_against(const SpaceSpec& X, const Point& p, double r, double oracle) {
  const VolumeResult mc = ball_volume(X, p, r, VolumeMethod::kMonteCarlo, 100000, 42);
  CAPTURE(space_name(X));
  CAPTURE(r);
  CHECK(std::abs(mc.value - oracle) <= 3.0 * mc.std_error + 1e-12 * oracle);
}

}  // namespace

TEST_SUITE("volume") {
  TEST_CASE("analytic Euclidean balls") {
    CHECK(*analytic_ball_volume(Euclidean{2}, origin(2), 2.0) == doctest::Approx(4.0 * kPi));
    CHECK(*analytic_ball_volume(Euclidean{3}, origin(3), 1.0) == doctest::Approx(4.0 * kPi / 3.0));
    CHECK(*analytic_ball_volume(Euclidean{1}, origin(1), 1.5) == doctest::Approx(3.0));
  }

  TEST_CASE("analytic spherical caps") {
    CHECK(*analytic_ball_volume(RoundSphere{1.0}, sphere_point({0, 0, 1}), kPi / 2) == doctest::Approx(2 * kPi));
    CHECK(*analytic_ball_volume(RoundSphere{2.0}, sphere_point({0, 0, 1}), 10.0) == doctest::Approx(16 * kPi));
  }

  TEST_CASE("glued planes ball at the seam") {
    // Half disk on the vertical sheet plus the full disk.
    CHECK(*analytic_ball_volume(GluedPlanes{}, xy_point(0, 0), 1.0) == doctest::Approx(1.5 * kPi));
    CHECK(*analytic_ball_volume(GluedPlanes{}, xy_point(3, 0), 1.0) == doctest::Approx(kPi));
  }

  TEST_CASE("Monte Carlo matches closed forms within three standard errors") {
    check_mc_against(Euclidean{2}, origin(2), 1.0, kPi);
    check_mc_against(Euclidean{3}, origin(3), 0.7, 4.0 / 3.0 * kPi * std::pow(0.7, 3));
    check_mc_against(GluedPlanes{}, xy_point(0, 0), 1.0, 1.5 * kPi);
    check_mc_against(GluedPlanes{}, xy_point(0.4, 0.1), 1.0, *analytic_ball_volume(GluedPlanes{}, xy_point(0.4, 0.1), 1.0));
    check_mc_against(RoundSphere{1.0}, sphere_point({1, 0, 0}), 1.0, 2 * kPi * (1 - std::cos(1.0)));
    check_mc_against(Cone{RoundSphere{0.5}}, cone_vertex(), 1.0, 4 * kPi * 0.25 / 3.0);
  }

  TEST_CASE("ball volume grows with the radius") {
    double prev = 0.0;
    for (double r : {0.25, 0.5, 1.0, 1.5}) {
      const double a = *analytic_ball_volume(GluedPlanes{}, xy_point(0.3, 0), r);
      const double mc = ball_volume(GluedPlanes{}, xy_point(0.3, 0), r, VolumeMethod::kMonteCarlo, 20000, 1).value;
      CHECK(a > prev);
      CHECK(mc > prev);
      prev = a;
    }
  }

  TEST_CASE("mixed dimensions have no single volume formula") {
    CHECK_THROWS_AS(analytic_ball_volume(PlaneWithRay{}, plane_point(0, 0), 1.0), Unavailable);
  }

  TEST_CASE("Monte Carlo is deterministic and worker independent") {
    const auto a = ball_volume(Euclidean{3}, origin(3), 1.0, VolumeMethod::kMonteCarlo, 30000, 9, 1);
    const auto b = ball_volume(Euclidean{3}, origin(3), 1.0, VolumeMethod::kMonteCarlo, 30000, 9, 3);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
  }

  TEST_CASE("volume bound verdicts") {
    const VolumeBoundReport ok =
        verify_volume_bound(Euclidean{2}, origin(2), 1.0, 1.6, 0.9, 1.1, VolumeMethod::kAnalytic);
    CHECK(ok.verdict == Verdict::kHolds);
    CHECK(ok.bound == doctest::Approx(1.6 * 0.2));
    CHECK(ok.slack == doctest::Approx(kPi / 0.32));
    const VolumeBoundReport bad =
        verify_volume_bound(Euclidean{2}, origin(2), 1.0, 100.0, 0.1, 1.9, VolumeMethod::kAnalytic);
    CHECK(bad.verdict == Verdict::kFails);
    CHECK_FALSE(bad.notes.empty());
  }
}
