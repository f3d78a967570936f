// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#include "tetraprop/tetraprop.h"

#include <exception>
#include <set>
#include <string>

#include "errors.hpp"
#include "parallel.hpp"
#include "serialize.hpp"

using namespace tetraprop;

struct tp_space {
  SpaceSpec spec;
  std::string json;
};

struct tp_report {
  std::string json;
  tp_verdict verdict = TP_VERDICT_NONE;
};

namespace {

thread_local std::string g_last_error;

constexpr int kDefaultBudget = 64;

template <class F>
tp_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return TP_OK;
  } catch (const InvalidInput& e) {
    g_last_error = e.what();
    return TP_INVALID_INPUT;
  } catch (const Unavailable& e) {
    g_last_error = e.what();
    return TP_UNAVAILABLE;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("malformed request: ") + e.what();
    return TP_INVALID_INPUT;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return TP_INTERNAL;
  } catch (...) {
    g_last_error = "internal error: unknown exception";
    return TP_INTERNAL;
  }
}

tp_status null_argument(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return TP_NULL_ARGUMENT;
}

Json parse(const char* text) {
  Json j = Json::parse(text);
  require(j.is_object(), "request must be a JSON object");
  return j;
}

tp_verdict to_c(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return TP_VERDICT_HOLDS;
    case Verdict::kFails:
      return TP_VERDICT_FAILS;
    case Verdict::kInconclusive:
      return TP_VERDICT_INCONCLUSIVE;
  }
  return TP_VERDICT_NONE;
}

tp_report* make_report(const Json& doc, tp_verdict verdict) {
  auto* r = new tp_report;
  r->json = doc.dump(2);
  r->verdict = verdict;
  return r;
}

// Splits command-specific keys off a request; the rest must be a query.
Json take(Json& j, const char* key) {
  if (!j.contains(key)) return Json();
  Json v = j.at(key);
  j.erase(key);
  return v;
}

int budget_of(const Json& v) {
  if (v.is_null()) return kDefaultBudget;
  require(v.is_number_integer() && v.get<int>() >= 1, "budget must be a positive integer");
  return v.get<int>();
}

// Fills q.apexes by the apex search when none were supplied; returns the
// search section of the response (null when apexes were given).
Json ensure_apexes(TetraQuery& q, bool force_search, int budget, TetraReport* searched) {
  if (!q.apexes.empty() && !force_search) return Json();
  ApexSearchResult res = search_apexes(q, budget);
  q.apexes = res.apexes;
  if (searched) *searched = res.report;
  return Json{{"budget", budget},
              {"reason", force_search ? "requested" : "apexes not supplied"},
              {"found", !res.apexes.empty()}};
}

}  // namespace

extern "C" {

const char* tp_version(void) { return "1.0.0"; }

const char* tp_last_error(void) { return g_last_error.c_str(); }

tp_status tp_space_create(const char* space_json, tp_space** out) {
  if (!space_json) return null_argument("space_json");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const SpaceSpec spec = space_from_json(Json::parse(space_json));
    *out = new tp_space{spec, to_json(spec).dump()};
  });
}

void tp_space_free(tp_space* space) { delete space; }

const char* tp_space_json(const tp_space* space) { return space ? space->json.c_str() : ""; }

tp_status tp_space_distance(const tp_space* space, const char* a, const char* b, double* out) {
  if (!space) return null_argument("space");
  if (!a || !b) return null_argument("point");
  if (!out) return null_argument("out");
  return guarded([&] {
    const Json req = Json{{"space", to_json(space->spec)}, {"p", Json::parse(a)}, {"r", 1.0},
                          {"apexes", Json::array({Json::parse(b)})}};
    const TetraQuery q = query_from_json(req);
    *out = distance(space->spec, q.p, q.apexes.at(0));
  });
}

tp_status tp_space_h(const tp_space* space, const char* request_json, double* out) {
  if (!space) return null_argument("space");
  if (!request_json) return null_argument("request_json");
  if (!out) return null_argument("out");
  return guarded([&] {
    Json j = parse(request_json);
    const std::vector<double> t = take(j, "t").get<std::vector<double>>();
    j["space"] = to_json(space->spec);
    if (!j.contains("n")) j["n"] = static_cast<int>(t.size()) + 1;
    const TetraQuery q = query_from_json(j);
    require(q.apexes.size() == t.size(), "need one radius t_i per apex");
    *out = h_value(q.space, q.p, q.apexes, q.r, t, q.tol);
  });
}

tp_status tp_check(const char* request_json, tp_report** out) {
  if (!request_json) return null_argument("request_json");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    Json j = parse(request_json);
    const Json search = take(j, "search");
    const int budget = budget_of(take(j, "budget"));
    const Json integral = take(j, "integral");
    TetraQuery q = query_from_json(j);

    Json doc{{"command", "check"}};
    validate_query(q, false);
    TetraReport searched;
    const Json search_info = ensure_apexes(q, search.is_boolean() && search.get<bool>(), budget, &searched);
    TetraReport report;
    if (q.apexes.empty()) {
      report = searched;  // S(p; r) empty: the search already reports FAILS
    } else {
      report = check_tetrahedral(q);
    }
    if (!search_info.is_null()) doc["search"] = search_info;
    doc["query"] = to_json(q);
    doc["report"] = to_json(report, q.space);
    if (!integral.is_null() && !(integral.is_boolean() && !integral.get<bool>()) && !q.apexes.empty()) {
      TetraQuery iq = q;
      if (!iq.C) iq.C = report.c_best;
      if (*iq.C > 0.0) {
        doc["integral"] = to_json(integral_tetra(iq, quadrature_from_json(integral.is_object() ? integral : Json())));
      } else {
        doc["integral"] = Json{{"skipped", "C_best = 0: no positive constant to test"}};
      }
    }
    *out = make_report(doc, to_c(report.verdict));
  });
}

tp_status tp_integral(const char* request_json, tp_report** out) {
  if (!request_json) return null_argument("request_json");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    Json j = parse(request_json);
    const Json mode_json = take(j, "mode");
    const std::string mode = mode_json.is_null() ? "integral_tetra" : mode_json.get<std::string>();
    const QuadratureSpec quad = quadrature_from_json(take(j, "quadrature"));
    const TetraQuery q = query_from_json(j);
    Json doc{{"command", "integral"}, {"mode", mode}, {"quadrature", to_json(quad)}, {"query", to_json(q)}};
    tp_verdict verdict = TP_VERDICT_NONE;
    if (mode == "integral_tetra") {
      const IntegralReport r = integral_tetra(q, quad);
      doc["report"] = to_json(r);
      verdict = r.satisfied ? TP_VERDICT_HOLDS : TP_VERDICT_FAILS;
    } else if (mode == "pointwise_implies_integral") {
      const bool ok = pointwise_implies_integral(q, quad);
      doc["report"] = Json{{"implies", ok}};
      verdict = ok ? TP_VERDICT_HOLDS : TP_VERDICT_FAILS;
    } else if (mode == "sliced_filling") {
      doc["report"] = to_json(sliced_filling_lower_bound(q.space, q.p, q.r, q.apexes, q.tol, quad, q.workers));
    } else {
      throw InvalidInput("unknown integral mode '" + mode + "'");
    }
    *out = make_report(doc, verdict);
  });
}

tp_status tp_hmap(const char* request_json, tp_report** out) {
  if (!request_json) return null_argument("request_json");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    Json j = parse(request_json);
    const Json m_json = take(j, "m");
    const int budget = budget_of(take(j, "budget"));
    TetraQuery q = query_from_json(j);
    validate_query(q, false);
    const int m = m_json.is_null() ? q.tol.grid_m : m_json.get<int>();
    require(m >= 2, "hmap needs m >= 2 nodes per axis");
    Json doc{{"command", "hmap"}};
    const Json search_info = ensure_apexes(q, false, budget, nullptr);
    if (!search_info.is_null()) doc["search"] = search_info;
    validate_query(q, true);
    const std::vector<double> nodes = cube_nodes(q, m);
    const std::vector<double> values = evaluate_h_grid(q, nodes);
    const int axes = q.n - 1;
    Json rows = Json::array();
    for (std::size_t idx = 0; idx < values.size(); ++idx) {
      std::vector<double> row(axes + 1);
      std::size_t rest = idx;
      for (int a = axes - 1; a >= 0; --a) {
        row[a] = nodes[rest % m];
        rest /= m;
      }
      row[axes] = values[idx];
      rows.push_back(row);
    }
    doc["query"] = to_json(q);
    doc["axes"] = axes;
    doc["nodes"] = nodes;
    doc["rows"] = rows;
    *out = make_report(doc, TP_VERDICT_NONE);
  });
}

tp_status tp_volume(const char* request_json, tp_report** out) {
  if (!request_json) return null_argument("request_json");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    Json j = parse(request_json);
    for (const auto& [key, value] : j.items()) {
      static const std::set<std::string> ok = {"space", "p", "r", "method", "samples", "seed", "workers",
                                               "certificate"};
      if (!ok.count(key)) throw InvalidInput("unknown key '" + key + "' in volume request");
    }
    const Json r_json = j.at("r");
    const std::vector<double> radii = r_json.is_array() ? r_json.get<std::vector<double>>()
                                                        : std::vector<double>{r_json.get<double>()};
    require(!radii.empty(), "volume needs at least one radius");
    const TetraQuery base = query_from_json(Json{{"space", j.at("space")}, {"p", j.at("p")}, {"r", radii[0]}});
    const VolumeMethod method = volume_method_from_string(j.value("method", std::string("monte_carlo")));
    const int samples = j.value("samples", 100000);
    const std::uint64_t seed = j.value("seed", std::uint64_t{0});
    const int workers = j.value("workers", 1);
    const Json cert = j.value("certificate", Json());

    Json results = Json::array();
    bool all_hold = true;
    for (double r : radii) {
      Json row{{"r", r}};
      if (cert.is_null()) {
        row["volume"] = to_json(ball_volume(base.space, base.p, r, method, samples, seed, workers));
      } else {
        const VolumeBoundReport rep =
            verify_volume_bound(base.space, base.p, r, cert.at("C").get<double>(), cert.at("alpha").get<double>(),
                                cert.at("beta").get<double>(), method, samples, seed, workers);
        all_hold = all_hold && rep.verdict == Verdict::kHolds;
        row["volume"] = to_json(rep.volume);
        row["bound_check"] = to_json(rep);
      }
      results.push_back(row);
    }
    Json doc{{"command", "volume"},   {"space", to_json(base.space)}, {"p", to_json(base.p, base.space)},
             {"method", to_string(method)}, {"samples", samples},       {"seed", seed},
             {"results", results}};
    if (!cert.is_null()) doc["certificate"] = cert;
    const tp_verdict v = cert.is_null() ? TP_VERDICT_NONE : (all_hold ? TP_VERDICT_HOLDS : TP_VERDICT_FAILS);
    *out = make_report(doc, v);
  });
}

tp_status tp_bounds(const char* request_json, tp_report** out) {
  if (!request_json) return null_argument("request_json");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const Json j = parse(request_json);
    for (const auto& [key, value] : j.items()) {
      static const std::set<std::string> ok = {"V0", "C", "alpha", "beta", "n", "eps", "r0", "greedy"};
      if (!ok.count(key)) throw InvalidInput("unknown key '" + key + "' in bounds request");
    }
    Json doc{{"command", "bounds"}};
    const bool has_constants = j.contains("V0") || j.contains("eps") || j.contains("r0");
    if (has_constants) {
      const double V0 = j.at("V0").get<double>();
      const double C = j.at("C").get<double>();
      const double alpha = j.at("alpha").get<double>();
      const double beta = j.at("beta").get<double>();
      const int n = j.at("n").get<int>();
      doc["inputs"] = Json{{"V0", V0}, {"C", C}, {"alpha", alpha}, {"beta", beta}, {"n", n}};
      require(j.contains("eps") || j.contains("r0"), "bounds needs eps (packing) or r0 (diameter)");
      if (j.contains("eps")) {
        doc["inputs"]["eps"] = j.at("eps");
        doc["packing_bound"] = packing_bound(V0, C, alpha, beta, n, j.at("eps").get<double>());
      }
      if (j.contains("r0")) {
        doc["inputs"]["r0"] = j.at("r0");
        doc["diameter_bound"] = diameter_bound(V0, C, alpha, beta, n, j.at("r0").get<double>());
        doc["diameter_bound_derivation"] = diameter_bound_derivation();
      }
    }
    if (j.contains("greedy")) {
      const Json& g = j.at("greedy");
      const SpaceSpec space = space_from_json(g.at("space"));
      const Region region = region_from_json(g.at("region"), space);
      doc["greedy_packing"] = greedy_packing(space, region, g.at("eps").get<double>(), g.value("candidates", 2000),
                                             g.value("seed", std::uint64_t{0}));
    }
    require(has_constants || j.contains("greedy"), "bounds request is empty");
    *out = make_report(doc, TP_VERDICT_NONE);
  });
}

tp_status tp_examples(const char* request_json, tp_report** out) {
  if (!request_json) return null_argument("request_json");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const Json j = parse(request_json);
    for (const auto& [key, value] : j.items()) {
      if (key != "ids" && key != "seed" && key != "workers") {
        throw InvalidInput("unknown key '" + key + "' in examples request");
      }
    }
    const std::vector<std::string> ids = j.contains("ids") ? j.at("ids").get<std::vector<std::string>>() : example_ids();
    require(!ids.empty(), "no example ids given");
    const std::uint64_t seed = j.value("seed", std::uint64_t{42});
    const int workers = std::max(1, j.value("workers", 1));
    std::vector<ExampleReport> reports(ids.size());
    // examples run side by side; each one is single-threaded and seeded
    parallel_for(ids.size(), workers, [&](std::size_t i) { reports[i] = run_example(ids[i], seed, 1); });
    Json list = Json::array();
    bool overall = true;
    for (const ExampleReport& r : reports) {
      list.push_back(to_json(r));
      overall = overall && r.overall;
    }
    const Json doc{{"command", "examples"}, {"seed", seed}, {"overall", overall}, {"reports", list}};
    *out = make_report(doc, overall ? TP_VERDICT_HOLDS : TP_VERDICT_FAILS);
  });
}

tp_verdict tp_report_verdict(const tp_report* report) { return report ? report->verdict : TP_VERDICT_NONE; }

const char* tp_report_json(const tp_report* report) { return report ? report->json.c_str() : ""; }

void tp_report_free(tp_report* report) { delete report; }

}  // extern "C"
