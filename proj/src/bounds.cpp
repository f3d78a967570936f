// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#include "bounds.hpp"

#include <cmath>
#include <vector>

#include "errors.hpp"

namespace tetraprop {
namespace {

void check_constants(double C, double alpha, double beta, int n) {
  require(C > 0.0 && std::isfinite(C), "C must be positive");
  require(alpha > 0.0 && alpha < beta && beta < 2.0, "need 0 < alpha < beta < 2");
  require(n >= 1, "n must be positive");
}

double per_ball(double C, double alpha, double beta, int n, double radius) {
  return C * std::pow(beta - alpha, n - 1) * std::pow(radius, n);
}

}  // namespace

std::int64_t packing_bound(double V0, double C, double alpha, double beta, int n, double eps) {
  check_constants(C, alpha, beta, n);
  require(V0 > 0.0 && std::isfinite(V0), "V0 must be positive");
  require(eps > 0.0 && std::isfinite(eps), "eps must be positive");
  // 1e-12 relative guard so exact quotients such as 10 / 0.04 are not floored down by rounding
  const double q = V0 / per_ball(C, alpha, beta, n, eps);
  return static_cast<std::int64_t>(std::floor(q * (1.0 + 1e-12)));
}

double diameter_bound(double V0, double C, double alpha, double beta, int n, double r0) {
  check_constants(C, alpha, beta, n);
  require(V0 > 0.0 && std::isfinite(V0), "V0 must be positive");
  require(r0 > 0.0 && std::isfinite(r0), "r0 must be positive");
  return r0 * (V0 / per_ball(C, alpha, beta, n, 0.5 * r0) + 1.0);
}

std::string diameter_bound_derivation() {
  return "explicit choice D0 = r0 (V0 / (C (beta-alpha)^(n-1) (r0/2)^n) + 1): centers spaced r0 along a "
         "geodesic carry disjoint r0/2-balls of volume >= C (beta-alpha)^(n-1) (r0/2)^n, so at most V0 over "
         "that many fit; the existence statement it instantiates gives no formula";
}

std::int64_t greedy_packing(const SpaceSpec& space, const Region& region, double eps, int candidate_count,
                            std::uint64_t seed) {
  require(eps > 0.0 && std::isfinite(eps), "eps must be positive");
  require(candidate_count >= 1, "need at least one candidate");
  std::vector<Point> chosen;
  for (int i = 0; i < candidate_count; ++i) {
    const Point x = sample_point(space, region, seed, static_cast<std::uint64_t>(i));
    bool free = true;
    for (const Point& y : chosen) {
      if (unchecked_distance(space, x, y) < 2.0 * eps) {
        free = false;
        break;
      }
    }
    if (free) chosen.push_back(x);
  }
  return static_cast<std::int64_t>(chosen.size());
}

}  // namespace tetraprop
