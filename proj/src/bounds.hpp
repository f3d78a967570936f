// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "spaces.hpp"

namespace tetraprop {

/// floor(V0 / (C (beta - alpha)^(n-1) eps^n)): an upper bound on the number
/// of disjoint eps-balls when each has volume >= C (beta - alpha)^(n-1) eps^n.
std::int64_t packing_bound(double V0, double C, double alpha, double beta, int n, double eps);

/// D0 = r0 (V0 / (C (beta - alpha)^(n-1) (r0/2)^n) + 1).
///
/// In a length space a geodesic of length D carries floor(D / r0) + 1
/// centers spaced r0 apart whose r0/2-balls are disjoint; each ball has
/// volume >= C (beta - alpha)^(n-1) (r0/2)^n, so the count is at most V0
/// over that, which bounds D.
double diameter_bound(double V0, double C, double alpha, double beta, int n, double r0);

/// Text shipped with diameter_bound results.
std::string diameter_bound_derivation();

/// Greedy maximal set of sampled points pairwise >= 2 eps apart; returns its
/// size. Deterministic given seed.
std::int64_t greedy_packing(const SpaceSpec& space, const Region& region, double eps, int candidate_count,
                            std::uint64_t seed);

}  // namespace tetraprop
