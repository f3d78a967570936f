// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "checker.hpp"

namespace tetraprop {

enum class QuadRule { kMidpoint, kTrapezoid };

std::string to_string(QuadRule rule);
QuadRule quad_rule_from_string(const std::string& s);

struct QuadratureSpec {
  int m = 17;  // nodes per axis
  QuadRule rule = QuadRule::kMidpoint;

  void validate() const;
};

/// Integrand over the t-cube.
using HFunction = std::function<double(std::span<const double> t)>;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |I_m - I_(2m-1)|
};

/// Tensor-product rule on the box prod [lo_i, hi_i]. The value uses m nodes
/// per axis; the estimate compares it against 2m-1 nodes.
QuadratureResult integrate_box(const HFunction& h, std::span<const double> lo, std::span<const double> hi,
                               const QuadratureSpec& quad, int workers = 1);

struct IntegralReport {
  double integral_value = 0.0;
  double bound = 0.0;  // C (beta - alpha)^(n-1) r^n
  double error_estimate = 0.0;
  bool satisfied = false;
  std::vector<std::string> notes;
};

/// Integral of h over [alpha r, beta r]^(n-1) against C (beta - alpha)^(n-1) r^n.
/// Needs q.C.
IntegralReport integral_tetra(const TetraQuery& q, const QuadratureSpec& quad);

/// Same, with a caller-supplied integrand in place of h (stub spaces, tests).
IntegralReport integral_tetra(const TetraQuery& q, const QuadratureSpec& quad, const HFunction& h);

/// Runs the pointwise check and, if it certifies q.C (or C_best when q.C is
/// empty), evaluates the integral property with the same constant. Throws
/// InvalidInput when the pointwise property is not certified.
bool pointwise_implies_integral(const TetraQuery& q, const QuadratureSpec& quad);

struct SlicedFillingReport {
  double value = 0.0;  // certified mass lower bound
  double error_estimate = 0.0;
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<std::string> notes;
};

/// Integral of h(p, r, t) over prod [max(s_i - r, 0), s_i + r] with
/// s_i = d(p, q_i). The apexes need not lie on S(p; r).
SlicedFillingReport sliced_filling_lower_bound(const SpaceSpec& space, const Point& p, double r,
                                               std::span<const Point> apexes, const Tolerances& tol,
                                               const QuadratureSpec& quad, int workers = 1);

}  // namespace tetraprop
