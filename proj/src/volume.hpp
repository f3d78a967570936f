// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "checker.hpp"
#include "spaces.hpp"

namespace tetraprop {

enum class VolumeMethod { kAnalytic, kMonteCarlo };

std::string to_string(VolumeMethod m);
VolumeMethod volume_method_from_string(const std::string& s);

struct VolumeResult {
  double value = 0.0;
  double std_error = 0.0;  // 0 for analytic values
  VolumeMethod method = VolumeMethod::kAnalytic;
  int dimension = 0;
};

/// Closed-form Hausdorff measure of B_r(p), or nullopt when the case has no
/// documented formula. Throws Unavailable for mixed-dimension spaces.
std::optional<double> analytic_ball_volume(const SpaceSpec& space, const Point& p, double r);

/// Measure of B_r(p) in the space's natural dimension. Monte Carlo draws
/// `samples` points split across the dominating patches by measure; the
/// stream is seeded from (seed, space, p, r).
VolumeResult ball_volume(const SpaceSpec& space, const Point& p, double r, VolumeMethod method,
                         int samples = 100000, std::uint64_t seed = 0, int workers = 1);

struct VolumeBoundReport {
  Verdict verdict = Verdict::kInconclusive;
  VolumeResult volume;
  double bound = 0.0;  // C (beta - alpha)^(n-1) r^n
  double slack = 0.0;  // volume / bound
  std::vector<std::string> notes;
};

/// Checks value + 3 stderr >= C (beta - alpha)^(n-1) r^n with n the natural
/// dimension. The caller vouches for the (C, alpha, beta) certificate.
VolumeBoundReport verify_volume_bound(const SpaceSpec& space, const Point& p, double r, double C, double alpha,
                                      double beta, VolumeMethod method, int samples = 100000,
                                      std::uint64_t seed = 0, int workers = 1);

}  // namespace tetraprop
