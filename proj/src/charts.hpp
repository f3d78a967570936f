// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "nelder_mead.hpp"
#include "spaces.hpp"

namespace tetraprop {

/// An unconstrained coordinate patch used by the local solver. Chart
/// coordinates fold onto the space (normalization, |z|, quotient sign), so
/// any real vector maps to a valid point.
struct Chart {
  Sheet sheet = Sheet::kNone;
  int dim = 0;
  /// Intrinsic length corresponding to one chart unit (approximate for
  /// curved charts); converts length-scale steps into chart steps.
  double unit_length = 1.0;
};

std::vector<Chart> solver_charts(const SpaceSpec& space);

/// Chart coordinates -> valid point of the space.
Point chart_point(const SpaceSpec& space, const Chart& chart, const Coords& x);

/// Point -> (chart index, coordinates) such that chart_point reproduces it.
std::pair<int, Coords> chart_coords(const SpaceSpec& space, const Point& p);

}  // namespace tetraprop
