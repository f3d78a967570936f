// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicer.hpp"
#include "spaces.hpp"

namespace tetraprop {

enum class Verdict { kHolds, kFails, kInconclusive };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// One (C, alpha, beta) question: is h(p, r, t) >= C r for every t in the
/// cube [alpha r, beta r]^(n-1)?
struct TetraQuery {
  SpaceSpec space = Euclidean{2};
  Point p;
  double r = 1.0;
  int n = 2;
  double alpha = 0.5;
  double beta = 1.5;
  std::optional<double> C;
  std::vector<Point> apexes;
  Tolerances tol;

  int max_n = 4;          // grid cost is grid_m^(n-1)
  int workers = 1;        // h evaluations fan out; results are order-independent
  int refine_starts = 5;  // lowest grid cells refined by local descent
  int refine_iters = 40;  // simplex iterations per refinement start
};

struct TetraReport {
  Verdict verdict = Verdict::kInconclusive;
  double c_best = 0.0;
  std::vector<double> t_witness;
  std::vector<Point> apexes_used;
  double grid_min = 0.0;
  double refined_min = 0.0;
  std::vector<std::string> notes;
};

/// Validates the query; throws InvalidInput with an explanation.
void validate_query(const TetraQuery& q, bool need_apexes = true);

/// h on the tensor grid axis_nodes^(n-1); row-major with the last axis
/// varying fastest.
std::vector<double> evaluate_h_grid(const TetraQuery& q, const std::vector<double>& axis_nodes);

/// Evenly spaced nodes alpha r .. beta r, endpoints included.
std::vector<double> cube_nodes(const TetraQuery& q, int m);

TetraReport check_tetrahedral(const TetraQuery& q);

/// The original (C, beta) property: the cube [(1-b) r, (1+b) r].
TetraReport check_legacy(TetraQuery q, double beta_legacy);

struct ApexSearchResult {
  std::vector<Point> apexes;
  TetraReport report;
};

/// Seeded random restarts plus per-apex perturbation descent over apex
/// tuples on S(p; r); `budget` counts apex tuples screened. q.apexes is
/// ignored.
ApexSearchResult search_apexes(const TetraQuery& q, int budget);

}  // namespace tetraprop
