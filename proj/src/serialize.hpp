// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "bounds.hpp"
#include "checker.hpp"
#include "examples_suite.hpp"
#include "integrals.hpp"
#include "spaces.hpp"
#include "volume.hpp"

namespace tetraprop {

using Json = nlohmann::ordered_json;

std::string to_string(Sheet sheet);
Sheet sheet_from_string(const std::string& s);

Json to_json(const SpaceSpec& space);
SpaceSpec space_from_json(const Json& j);

/// {"sheet": ..., "coords": [...]}; coords fill the chart layout from x[0].
Json to_json(const Point& p, const SpaceSpec& space);
Point point_from_json(const Json& j);

/// Builds a point from a sheet (kNone picks the space default) and chart
/// coordinates, then canonicalizes it.
Point make_point(const SpaceSpec& space, Sheet sheet, const std::vector<double>& coords);

Json to_json(const Tolerances& tol);
/// Starts from Tolerances::for_radius(r) and applies the keys present.
Tolerances tolerances_from_json(const Json& j, double r);

Json to_json(const TetraQuery& q);
/// Request fields: space, p, r, n, alpha, beta, C, legacy_beta, apexes,
/// tolerances, seed, workers, max_n, refine_starts, refine_iters.
TetraQuery query_from_json(const Json& j);

Json to_json(const TetraReport& r, const SpaceSpec& space);
TetraReport report_from_json(const Json& j);

Json to_json(const QuadratureSpec& q);
QuadratureSpec quadrature_from_json(const Json& j);
Json to_json(const IntegralReport& r);
IntegralReport integral_report_from_json(const Json& j);
Json to_json(const SlicedFillingReport& r);
SlicedFillingReport sliced_filling_from_json(const Json& j);

Json to_json(const VolumeResult& v);
VolumeResult volume_result_from_json(const Json& j);
Json to_json(const VolumeBoundReport& r);
VolumeBoundReport volume_bound_from_json(const Json& j);

Region region_from_json(const Json& j, const SpaceSpec& space);

Json to_json(const Claim& c);
Claim claim_from_json(const Json& j);
Json to_json(const ExampleReport& r);
ExampleReport example_report_from_json(const Json& j);

Json to_json(const SliceConstants& k);
Json to_json(const ConeVertexParams& w);

}  // namespace tetraprop
