// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

namespace tetraprop {

/// Fixed-capacity coordinate vector for the low-dimensional searches used
/// here (chart coordinates and radius vectors, at most 4 entries).
using Coords = std::array<double, 4>;

struct SimplexResult {
  Coords x{};
  double value = std::numeric_limits<double>::infinity();
  int iterations = 0;
  int evaluations = 0;
};

struct SimplexOptions {
  int max_iterations = 200;
  double initial_step = 0.1;
  /// Stop once the best value drops to this level.
  double target = 0.0;
  /// Stop once every vertex is within this distance of the best one.
  double x_tolerance = 0.0;
};

/// Nelder-Mead downhill simplex over `dim` coordinates (1 <= dim <= 4).
///
/// Deterministic: vertex ordering ties break by insertion order.
template <class F>
SimplexResult nelder_mead(F&& f, const Coords& start, int dim, const SimplexOptions& opt) {
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  std::array<Coords, 5> vertex{};
  std::array<double, 5> value{};
  SimplexResult result;

  auto eval = [&](const Coords& x) {
    ++result.evaluations;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  vertex[0] = start;
  value[0] = eval(start);
  for (int i = 0; i < dim; ++i) {
    vertex[i + 1] = start;
    vertex[i + 1][i] += opt.initial_step;
    value[i + 1] = eval(vertex[i + 1]);
  }

  std::array<int, 5> order{0, 1, 2, 3, 4};
  auto sort_vertices = [&] {
    std::stable_sort(order.begin(), order.begin() + dim + 1,
                     [&](int a, int b) { return value[a] < value[b]; });
  };

  int iter = 0;
  for (; iter < opt.max_iterations; ++iter) {
    sort_vertices();
    const int best = order[0];
    const int worst = order[dim];
    const int second = order[dim - 1 >= 0 ? dim - 1 : 0];
    if (value[best] <= opt.target) break;
    if (opt.x_tolerance > 0.0) {
      double spread = 0.0;
      for (int k = 1; k <= dim; ++k) {
        for (int i = 0; i < dim; ++i) {
          spread = std::max(spread, std::abs(vertex[order[k]][i] - vertex[best][i]));
        }
      }
      if (spread <= opt.x_tolerance) break;
    }

    Coords centroid{};
    for (int k = 0; k < dim; ++k) {
      for (int i = 0; i < dim; ++i) centroid[i] += vertex[order[k]][i] / dim;
    }
    auto along = [&](double coeff) {
      Coords x{};
      for (int i = 0; i < dim; ++i) x[i] = centroid[i] + coeff * (vertex[worst][i] - centroid[i]);
      return x;
    };

    const Coords reflected = along(-kReflect);
    const double f_reflected = eval(reflected);
    if (f_reflected < value[best]) {
      const Coords expanded = along(-kExpand);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        vertex[worst] = expanded;
        value[worst] = f_expanded;
      } else {
        vertex[worst] = reflected;
        value[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < value[second]) {
      vertex[worst] = reflected;
      value[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < value[worst];
    const Coords contracted = along(outside ? -kContract : kContract);
    const double f_contracted = eval(contracted);
    if (f_contracted < std::min(f_reflected, value[worst])) {
      vertex[worst] = contracted;
      value[worst] = f_contracted;
      continue;
    }
    for (int k = 1; k <= dim; ++k) {
      const int v = order[k];
      for (int i = 0; i < dim; ++i) vertex[v][i] = vertex[best][i] + kShrink * (vertex[v][i] - vertex[best][i]);
      value[v] = eval(vertex[v]);
    }
  }
  sort_vertices();
  result.x = vertex[order[0]];
  result.value = value[order[0]];
  result.iterations = iter;
  return result;
}

}  // namespace tetraprop
