// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace tetraprop {

using ClaimValue = std::variant<double, std::string>;

struct Claim {
  std::string description;
  ClaimValue expected;
  ClaimValue computed;
  double tolerance = 0.0;
  bool pass = false;
};

struct ExampleReport {
  std::string example_id;
  std::vector<Claim> claims;
  std::vector<std::string> notes;
  bool overall = false;  // conjunction of claim passes
};

struct SliceConstants {
  double C_r = 0.0;
  double beta_r = 0.0;      // max of the two candidates
  double beta_r_min = 0.0;  // min of the two candidates
  double r_prime = 0.0;
  // Image of [(1-b) r, (1+b) r] under t -> 2 s sin(t/2), in units of r'.
  double alpha_image = 0.0;
  double beta_image = 0.0;
};

/// Constants of the slice Y x {s} inside K(Y) for a base with the
/// (C, beta) property at radius r <= pi/2.
SliceConstants slice_constants(double r, double s, double C, double beta_in);

struct ConeVertexParams {
  double alpha_min = 0.0;
  double beta_max = 0.0;
  bool window_nonempty = false;
};

/// Admissible (alpha, beta) window at the vertex of K(S^2(rho)) for apexes
/// whose base distance is d12.
ConeVertexParams cone_vertex_params(double rho, double d12);

const std::vector<std::string>& example_ids();

/// Runs the fixed probe set of one example. Unknown ids throw InvalidInput.
ExampleReport run_example(const std::string& id, std::uint64_t seed = 42, int workers = 1);

}  // namespace tetraprop
