// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "examples_suite.hpp"
#include "errors.hpp"

using namespace tetraprop;

TEST_SUITE("examples") {
  TEST_CASE("slice constants against direct arithmetic") {
    const double pi = std::numbers::pi;
    for (double r : {pi / 2, 1.0, 0.3}) {
      for (double s : {1.0, 2.5}) {
        for (double C : {0.5, 1.0}) {
          for (double b : {0.2, 0.5}) {
            const SliceConstants k = slice_constants(r, s, C, b);
            const double one_minus_cos = 1.0 - std::cos(r);
            const double chord_lo = std::sqrt(2.0 * (1.0 - std::cos((1.0 - b) * r)));
            const double chord_hi = std::sqrt(2.0 * (1.0 - std::cos((1.0 + b) * r)));
            const double chord_r = std::sqrt(2.0 * one_minus_cos);
            CHECK(k.C_r == doctest::Approx(std::sqrt(2.0 * (1.0 - std::cos(C * r))) / chord_r).epsilon(1e-12));
            CHECK(k.r_prime == doctest::Approx(s * chord_r).epsilon(1e-12));
            CHECK(k.alpha_image == doctest::Approx(chord_lo / chord_r).epsilon(1e-12));
            CHECK(k.beta_image == doctest::Approx(chord_hi / chord_r).epsilon(1e-12));
            const double c1 = 1.0 - chord_lo / chord_r;
            const double c2 = chord_hi / chord_r - 1.0;
            CHECK(k.beta_r == doctest::Approx(std::max(c1, c2)).epsilon(1e-12));
            CHECK(k.beta_r_min == doctest::Approx(std::min(c1, c2)).epsilon(1e-12));
          }
        }
      }
    }
    CHECK_THROWS_AS(slice_constants(2.0, 1.0, 0.5, 0.5), InvalidInput);
  }

  TEST_CASE("cone vertex window") {
    const double pi = std::numbers::pi;
    const ConeVertexParams w = cone_vertex_params(1.0, pi / 2);
    CHECK(w.alpha_min == doctest::Approx(2 * std::sin(pi / 8)).epsilon(1e-12));
    CHECK(w.beta_max == doctest::Approx(2 * std::sin(3 * pi / 8)).epsilon(1e-12));
    CHECK(w.window_nonempty);
    const ConeVertexParams tight = cone_vertex_params(0.25, 0.9 * pi * 0.25);
    CHECK(tight.beta_max == doctest::Approx(2 * std::sin(0.5 * (pi * 0.25 - 0.45 * pi * 0.25))).epsilon(1e-12));
    CHECK(tight.window_nonempty == (tight.alpha_min < tight.beta_max));
    CHECK_THROWS_AS(cone_vertex_params(1.0, 4.0), InvalidInput);
  }

  TEST_CASE("catalog of examples") {
    CHECK(example_ids().size() == 8);
    CHECK_THROWS_AS(run_example("nope"), InvalidInput);
  }

  TEST_CASE("modified planes example passes and is reproducible") {
    const ExampleReport a = run_example("modified_planes", 42);
    CHECK(a.overall);
    CHECK(a.claims.size() == 4);
    const ExampleReport b = run_example("modified_planes", 42);
    REQUIRE(b.claims.size() == a.claims.size());
    for (std::size_t i = 0; i < a.claims.size(); ++i) CHECK(a.claims[i].computed == b.claims[i].computed);
  }
}
