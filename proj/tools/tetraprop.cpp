// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

// tetraprop command-line front end. Talks to the library only through the
// C API; requests and reports are JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tetraprop/tetraprop.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) throw UsageError("cannot parse number '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

/// "lo:hi:count" or "v1,v2,..." or a single value.
std::vector<double> parse_values(const std::string& s) {
  const auto range = split(s, ':');
  if (range.size() == 3) {
    const double lo = parse_double(range[0]);
    const double hi = parse_double(range[1]);
    const int count = static_cast<int>(parse_double(range[2]));
    if (count < 0) throw UsageError("negative count in '" + s + "'");
    std::vector<double> out;
    for (int i = 0; i < count; ++i) {
      out.push_back(count == 1 ? lo : (lo * (count - 1 - i) + hi * i) / (count - 1));
    }
    return out;
  }
  if (range.size() != 1) throw UsageError("values must be 'lo:hi:count' or a comma list, got '" + s + "'");
  std::vector<double> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_double(item));
  return out;
}

// ---------------------------------------------------------------------------
// C API plumbing

struct Report {
  Json doc;
  tp_verdict verdict = TP_VERDICT_NONE;
};

using Entry = tp_status (*)(const char*, tp_report**);

struct ApiError : std::runtime_error {
  tp_status status;
  ApiError(tp_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

Report call(Entry entry, const Json& request) {
  tp_report* raw = nullptr;
  const tp_status st = entry(request.dump().c_str(), &raw);
  if (st != TP_OK) throw ApiError(st, tp_last_error());
  Report out{Json::parse(tp_report_json(raw)), tp_report_verdict(raw)};
  tp_report_free(raw);
  return out;
}

int exit_code(tp_verdict v) {
  switch (v) {
    case TP_VERDICT_HOLDS:
      return 0;
    case TP_VERDICT_FAILS:
      return 1;
    case TP_VERDICT_INCONCLUSIVE:
      return 2;
    default:
      return 0;
  }
}

// ---------------------------------------------------------------------------
// Global options

struct Global {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  int workers = 1;
  bool json = false;
  bool text = false;
};

Json load_config(const Global& g) {
  if (g.config_path.empty()) return Json::object();
  std::ifstream in(g.config_path);
  if (!in) throw UsageError("cannot open config '" + g.config_path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed config '" + g.config_path + "': " + e.what());
  }
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  return j;
}

std::uint64_t resolve_seed(const Global& g, const Json& config) {
  if (g.seed) return *g.seed;
  if (config.contains("seed")) return config.at("seed").get<std::uint64_t>();
  if (const char* env = std::getenv("TETRAPROP_SEED"); env && *env) {
    std::uint64_t v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto res = std::from_chars(env, end, v);
    if (res.ec != std::errc() || res.ptr != end) throw UsageError("TETRAPROP_SEED must be an unsigned integer");
    return v;
  }
  return 42;
}

// ---------------------------------------------------------------------------
// Query flags shared by check, sweep and hmap

struct QueryFlags {
  std::optional<std::string> space;
  std::optional<double> rho;
  std::optional<double> s;
  std::optional<std::string> p;
  std::optional<double> r;
  std::optional<int> n;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> legacy_beta;
  std::optional<double> C;
  std::vector<std::string> apexes;
  bool search = false;
  std::optional<int> budget;
  std::optional<int> grid_m;
  std::optional<int> max_n;
};

void add_query_flags(CLI::App* cmd, QueryFlags& f) {
  cmd->add_option("--space", f.space, "space: euclidean2, glued_planes, plane_with_ray, cone:RHO, cone_rp2:RHO, "
                                      "cone_projective_plane, round_sphere:RHO, projective_plane:RHO, cone_slice:RHO:S");
  cmd->add_option("--rho", f.rho, "base radius for sphere-like spaces and cones");
  cmd->add_option("--s", f.s, "slice level for cone_slice");
  cmd->add_option("--p", f.p, "point: 'x,y', 'xy:x,y', 'ray:z', 'vertex', cone 'u1,u2,u3,t'");
  cmd->add_option("--r", f.r, "radius");
  cmd->add_option("--n", f.n, "dimension of the property (n-1 apexes)");
  cmd->add_option("--alpha", f.alpha);
  cmd->add_option("--beta", f.beta);
  cmd->add_option("--legacy-beta", f.legacy_beta, "use the (C, beta) form: alpha = 1 - b, beta = 1 + b");
  cmd->add_option("--C", f.C, "target constant");
  cmd->add_option("--apex", f.apexes, "apex point (repeat n-1 times)");
  cmd->add_flag("--search", f.search, "search apexes even when given");
  cmd->add_option("--budget", f.budget, "apex tuples screened by the search");
  cmd->add_option("--grid-m", f.grid_m, "grid nodes per t-axis");
  cmd->add_option("--max-n", f.max_n, "cap on n");
}

// Sets rho (and s) on a space given as a shorthand string or an object.
Json with_space_params(Json space, std::optional<double> rho, std::optional<double> s) {
  if (!rho && !s) return space;
  if (space.is_string()) {
    auto parts = split(space.get<std::string>(), ':');
    if (parts.empty()) throw UsageError("empty --space");
    if (rho) {
      if (parts.size() < 2) parts.resize(2, "1");
      parts[1] = fmt(*rho);
    }
    if (s) {
      if (parts[0] != "cone_slice") throw UsageError("--s only applies to cone_slice");
      if (parts.size() < 2) parts.resize(2, "1");
      parts.resize(3);
      parts[2] = fmt(*s);
    }
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += ":" + parts[i];
    return out;
  }
  if (rho) {
    if (space.contains("base")) {
      space["base"]["rho"] = *rho;
    } else {
      space["rho"] = *rho;
    }
  }
  if (s) space["s"] = *s;
  return space;
}

Json build_query(const QueryFlags& f, const Json& config, const Global& g) {
  Json j = config;
  j.erase("vary");
  if (f.space) j["space"] = *f.space;
  if (!j.contains("space")) throw UsageError("missing --space");
  j["space"] = with_space_params(j["space"], f.rho, f.s);
  if (f.p) j["p"] = *f.p;
  if (!j.contains("p")) throw UsageError("missing --p");
  if (f.r) j["r"] = *f.r;
  if (!j.contains("r")) throw UsageError("missing --r");
  if (f.n) j["n"] = *f.n;
  if (f.legacy_beta) {
    j.erase("alpha");
    j.erase("beta");
    j["legacy_beta"] = *f.legacy_beta;
  }
  if (f.alpha || f.beta) j.erase("legacy_beta");
  if (f.alpha) j["alpha"] = *f.alpha;
  if (f.beta) j["beta"] = *f.beta;
  if (f.C) j["C"] = *f.C;
  if (!f.apexes.empty()) j["apexes"] = f.apexes;
  if (f.search) j["search"] = true;
  if (f.budget) j["budget"] = *f.budget;
  if (f.grid_m) j["tolerances"]["grid_m"] = *f.grid_m;
  if (f.max_n) j["max_n"] = *f.max_n;
  j["seed"] = resolve_seed(g, config);
  if (!j.contains("workers")) j["workers"] = g.workers;
  return j;
}

// ---------------------------------------------------------------------------
// Commands

std::string verdict_line(const Json& report) {
  std::string line = report.at("verdict").get<std::string>() + " C_best=" + fmt(report.at("C_best").get<double>());
  std::string t;
  for (const auto& v : report.at("t_witness")) t += (t.empty() ? "" : ",") + fmt(v.get<double>());
  line += " t_witness=(" + t + ") grid_min=" + fmt(report.at("grid_min").get<double>()) +
          " refined_min=" + fmt(report.at("refined_min").get<double>());
  return line;
}

int cmd_check(const QueryFlags& f, bool integral, const Global& g) {
  const Json config = load_config(g);
  Json req = build_query(f, config, g);
  if (integral) req["integral"] = true;
  const Report rep = call(tp_check, req);
  if (!g.json) std::cout << verdict_line(rep.doc.at("report")) << "\n";
  std::cout << rep.doc.dump(2) << "\n";
  return exit_code(rep.verdict);
}

struct Axis {
  std::string name;
  std::vector<double> values;
};

Axis parse_axis(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw UsageError("--vary expects NAME=SPEC, got '" + spec + "'");
  Axis a{spec.substr(0, eq), parse_values(spec.substr(eq + 1))};
  static const std::vector<std::string> names = {"r", "alpha", "beta", "legacy_beta", "C", "rho", "s",
                                                 "p0", "p1", "p2", "p3"};
  if (std::find(names.begin(), names.end(), a.name) == names.end()) {
    throw UsageError("cannot vary '" + a.name + "' (r, alpha, beta, legacy_beta, C, rho, s, p0..p3)");
  }
  return a;
}

// Replaces coordinate i of a point given as a string like "xy:0.5,0".
std::string set_coord(const std::string& p, int i, double v) {
  std::string prefix;
  std::string body = p;
  if (const auto colon = p.find(':'); colon != std::string::npos) {
    prefix = p.substr(0, colon + 1);
    body = p.substr(colon + 1);
  }
  auto items = split(body, ',');
  if (i >= static_cast<int>(items.size())) throw UsageError("point '" + p + "' has no coordinate p" + std::to_string(i));
  items[i] = fmt(v);
  std::string out = prefix;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? "," : "") + items[k];
  return out;
}

int cmd_sweep(const QueryFlags& f, const std::vector<std::string>& vary, const Global& g) {
  const Json config = load_config(g);
  std::vector<std::string> specs = vary;
  if (config.contains("vary")) {
    for (const auto& v : config.at("vary")) specs.push_back(v.get<std::string>());
  }
  std::vector<Axis> axes;
  for (const auto& s : specs) axes.push_back(parse_axis(s));
  std::size_t cells = axes.empty() ? 0 : 1;
  for (const Axis& a : axes) cells *= a.values.size();
  if (cells == 0) throw UsageError("empty sweep grid: give at least one --vary with a nonempty range");

  QueryFlags base_flags = f;
  const Json base = build_query(base_flags, config, g);

  std::vector<Json> requests(cells);
  std::vector<std::vector<double>> cell_values(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    Json req = base;
    req["workers"] = 1;
    std::size_t rest = c;
    std::vector<double> vals(axes.size());
    for (std::size_t k = axes.size(); k-- > 0;) {
      vals[k] = axes[k].values[rest % axes[k].values.size()];
      rest /= axes[k].values.size();
    }
    std::optional<double> rho;
    std::optional<double> s;
    for (std::size_t k = 0; k < axes.size(); ++k) {
      const std::string& name = axes[k].name;
      const double v = vals[k];
      if (name == "rho") {
        rho = v;
      } else if (name == "s") {
        s = v;
      } else if (name[0] == 'p' && name.size() == 2) {
        if (!req.at("p").is_string()) throw UsageError("varying point coordinates needs --p as a string");
        req["p"] = set_coord(req.at("p").get<std::string>(), name[1] - '0', v);
      } else if (name == "legacy_beta") {
        req.erase("alpha");
        req.erase("beta");
        req["legacy_beta"] = v;
      } else {
        if (name == "alpha" || name == "beta") req.erase("legacy_beta");
        req[name] = v;
      }
    }
    req["space"] = with_space_params(req["space"], rho, s);
    requests[c] = req;
    cell_values[c] = vals;
  }

  // Cells fan out over the pool; rows are emitted in grid order.
  std::vector<Report> results(cells);
  std::vector<std::string> errors(cells);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < cells; c = next++) {
      try {
        results[c] = call(tp_check, requests[c]);
      } catch (const std::exception& e) {
        errors[c] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const int threads = std::max(1, std::min<int>(g.workers, static_cast<int>(cells)));
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t c = 0; c < cells; ++c) {
    if (!errors[c].empty()) throw ApiError(TP_INVALID_INPUT, "cell " + std::to_string(c) + ": " + errors[c]);
  }

  if (g.json) {
    Json out{{"command", "sweep"}, {"axes", Json::array()}, {"cells", Json::array()}};
    for (const Axis& a : axes) out["axes"].push_back(Json{{"name", a.name}, {"values", a.values}});
    for (std::size_t c = 0; c < cells; ++c) {
      Json cell;
      for (std::size_t k = 0; k < axes.size(); ++k) cell[axes[k].name] = cell_values[c][k];
      cell["report"] = results[c].doc.at("report");
      out["cells"].push_back(cell);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const Axis& a : axes) std::cout << a.name << ",";
    std::cout << "C_best,verdict,grid_min,refined_min\n";
    for (std::size_t c = 0; c < cells; ++c) {
      for (double v : cell_values[c]) std::cout << fmt(v) << ",";
      const Json& r = results[c].doc.at("report");
      std::cout << fmt(r.at("C_best").get<double>()) << "," << r.at("verdict").get<std::string>() << ","
                << fmt(r.at("grid_min").get<double>()) << "," << fmt(r.at("refined_min").get<double>()) << "\n";
    }
  }
  return 0;
}

int cmd_hmap(const QueryFlags& f, std::optional<int> m, const Global& g) {
  const Json config = load_config(g);
  Json req = build_query(f, config, g);
  req.erase("search");
  if (m) req["m"] = *m;
  const Report rep = call(tp_hmap, req);
  if (g.json) {
    std::cout << rep.doc.dump(2) << "\n";
    return 0;
  }
  const int axes = rep.doc.at("axes").get<int>();
  for (int a = 1; a <= axes; ++a) std::cout << "t" << a << ",";
  std::cout << "h\n";
  for (const auto& row : rep.doc.at("rows")) {
    for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? "," : "") << fmt(row[k].get<double>());
    std::cout << "\n";
  }
  return 0;
}

struct VolumeFlags {
  std::optional<std::string> space;
  std::optional<double> rho;
  std::optional<double> s;
  std::optional<std::string> p;
  std::optional<std::string> r;
  std::string method = "monte_carlo";
  int samples = 100000;
  std::optional<double> C;
  std::optional<double> alpha;
  std::optional<double> beta;
};

int cmd_volume(const VolumeFlags& f, const Global& g) {
  const Json config = load_config(g);
  Json req = config;
  if (f.space) req["space"] = *f.space;
  if (!req.contains("space")) throw UsageError("missing --space");
  req["space"] = with_space_params(req["space"], f.rho, f.s);
  if (f.p) req["p"] = *f.p;
  if (!req.contains("p")) throw UsageError("missing --p");
  if (f.r) {
    const auto values = parse_values(*f.r);
    req["r"] = values.size() == 1 ? Json(values[0]) : Json(values);
  }
  if (!req.contains("r")) throw UsageError("missing --r");
  if (!config.contains("method") || f.method != "monte_carlo") req["method"] = f.method;
  if (!config.contains("samples") || f.samples != 100000) req["samples"] = f.samples;
  req["seed"] = resolve_seed(g, config);
  req["workers"] = g.workers;
  if (f.C || f.alpha || f.beta) {
    if (!f.C || !f.alpha || !f.beta) throw UsageError("the volume bound needs --C, --alpha and --beta together");
    req["certificate"] = Json{{"C", *f.C}, {"alpha", *f.alpha}, {"beta", *f.beta}};
  }
  const Report rep = call(tp_volume, req);
  const Json& results = rep.doc.at("results");
  if (g.json || (results.size() == 1 && !g.text)) {
    std::cout << rep.doc.dump(2) << "\n";
  } else {
    std::cout << "r,volume,stderr,bound,slack\n";
    for (const auto& row : results) {
      std::cout << fmt(row.at("r").get<double>()) << "," << fmt(row.at("volume").at("value").get<double>()) << ","
                << fmt(row.at("volume").at("stderr").get<double>()) << ",";
      if (row.contains("bound_check")) {
        std::cout << fmt(row.at("bound_check").at("bound").get<double>()) << ","
                  << fmt(row.at("bound_check").at("slack").get<double>());
      } else {
        std::cout << ",";
      }
      std::cout << "\n";
    }
  }
  return exit_code(rep.verdict);
}

struct BoundsFlags {
  std::optional<double> V0, C, alpha, beta, eps, r0;
  std::optional<int> n;
  std::optional<std::string> box;
  std::optional<double> greedy_eps;
  int candidates = 2000;
};

int cmd_bounds(const BoundsFlags& f, const Global& g) {
  Json req = load_config(g);
  auto set = [&](const char* key, const auto& v) {
    if (v) req[key] = *v;
  };
  set("V0", f.V0);
  set("C", f.C);
  set("alpha", f.alpha);
  set("beta", f.beta);
  set("n", f.n);
  set("eps", f.eps);
  set("r0", f.r0);
  if (f.box) {
    const auto corners = split(*f.box, ':');
    if (corners.size() != 2) throw UsageError("--box expects 'lo1,lo2,...:hi1,hi2,...'");
    const auto lo = parse_values(corners[0]);
    const auto hi = parse_values(corners[1]);
    if (!f.greedy_eps) throw UsageError("--box needs --greedy-eps");
    req["greedy"] = Json{{"space", Json{{"kind", "euclidean"}, {"n", lo.size()}}},
                         {"region", Json{{"kind", "box"}, {"lo", lo}, {"hi", hi}}},
                         {"eps", *f.greedy_eps},
                         {"candidates", f.candidates},
                         {"seed", resolve_seed(g, req)}};
  }
  req.erase("seed");
  const Report rep = call(tp_bounds, req);
  std::cout << rep.doc.dump(2) << "\n";
  return 0;
}

int cmd_examples(const std::vector<std::string>& ids, const std::string& out_dir, const Global& g) {
  const Json config = load_config(g);
  Json req{{"seed", resolve_seed(g, config)}, {"workers", g.workers}};
  if (!ids.empty()) {
    req["ids"] = ids;
  } else if (config.contains("ids")) {
    req["ids"] = config.at("ids");
  }
  const Report rep = call(tp_examples, req);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto& r : rep.doc.at("reports")) {
      std::ofstream file(std::filesystem::path(out_dir) / (r.at("example_id").get<std::string>() + ".json"));
      file << r.dump(2) << "\n";
    }
  }
  if (g.json) {
    std::cout << rep.doc.dump(2) << "\n";
  } else {
    for (const auto& r : rep.doc.at("reports")) {
      int passed = 0;
      const auto& claims = r.at("claims");
      for (const auto& c : claims) passed += c.at("pass").get<bool>() ? 1 : 0;
      std::cout << (r.at("overall").get<bool>() ? "PASS " : "FAIL ") << r.at("example_id").get<std::string>() << " ("
                << passed << "/" << claims.size() << " claims)\n";
      for (const auto& c : claims) {
        if (c.at("pass").get<bool>()) continue;
        std::cout << "  failed: " << c.at("description").get<std::string>() << " expected " << c.at("expected").dump()
                  << " computed " << c.at("computed").dump() << "\n";
      }
    }
  }
  return exit_code(rep.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tetraprop: tetrahedral-property checks on catalog metric spaces"};
  app.require_subcommand(1);
  Global g;
  std::uint64_t seed_value = 0;
  app.add_option("--config", g.config_path, "JSON file with request defaults")->check(CLI::ExistingFile);
  auto* seed_opt = app.add_option("--seed", seed_value, "random seed (fallback: TETRAPROP_SEED, then 42)");
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber);
  auto* json_flag = app.add_flag("--json", g.json, "machine-readable JSON output");
  auto* text_flag = app.add_flag("--text", g.text, "human-readable output (default)");
  json_flag->excludes(text_flag);

  QueryFlags check_flags;
  bool integral = false;
  auto* check = app.add_subcommand("check", "check the (C, alpha, beta) property at a point");
  add_query_flags(check, check_flags);
  check->add_flag("--integral", integral, "also evaluate the integral property with C (or C_best)");
  check->fallthrough();

  QueryFlags sweep_flags;
  std::vector<std::string> vary;
  auto* sweep = app.add_subcommand("sweep", "CSV of verdicts over a parameter grid");
  add_query_flags(sweep, sweep_flags);
  sweep->add_option("--vary", vary, "NAME=lo:hi:count or NAME=v1,v2 (repeatable; last varies fastest)");
  sweep->fallthrough();

  QueryFlags hmap_flags;
  std::optional<int> hmap_m;
  auto* hmap = app.add_subcommand("hmap", "CSV dump of h over the t-cube");
  add_query_flags(hmap, hmap_flags);
  hmap->add_option("--m", hmap_m, "nodes per axis");
  hmap->fallthrough();

  VolumeFlags vf;
  auto* volume = app.add_subcommand("volume", "ball volume and the volume lower bound");
  volume->add_option("--space", vf.space);
  volume->add_option("--rho", vf.rho);
  volume->add_option("--s", vf.s);
  volume->add_option("--p", vf.p);
  volume->add_option("--r", vf.r, "radius, comma list or lo:hi:count (CSV for several)");
  volume->add_option("--method", vf.method)->check(CLI::IsMember({"analytic", "monte_carlo"}));
  volume->add_option("--samples", vf.samples)->check(CLI::PositiveNumber);
  volume->add_option("--C", vf.C);
  volume->add_option("--alpha", vf.alpha);
  volume->add_option("--beta", vf.beta);
  volume->fallthrough();

  BoundsFlags bf;
  auto* bounds = app.add_subcommand("bounds", "packing and diameter bounds");
  bounds->add_option("--V0", bf.V0);
  bounds->add_option("--C", bf.C);
  bounds->add_option("--alpha", bf.alpha);
  bounds->add_option("--beta", bf.beta);
  bounds->add_option("--n", bf.n);
  bounds->add_option("--eps", bf.eps);
  bounds->add_option("--r0", bf.r0);
  bounds->add_option("--box", bf.box, "greedy packing box 'lo1,lo2:hi1,hi2' in euclidean space");
  bounds->add_option("--greedy-eps", bf.greedy_eps);
  bounds->add_option("--candidates", bf.candidates);
  bounds->fallthrough();

  std::vector<std::string> ids;
  std::string out_dir;
  auto* examples = app.add_subcommand("examples", "reproduce the worked examples");
  examples->add_option("--id", ids, "example id (repeatable)");
  examples->add_option("--out", out_dir, "write one <id>.json per example into this directory");
  examples->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (*seed_opt) g.seed = seed_value;

  try {
    if (*check) return cmd_check(check_flags, integral, g);
    if (*sweep) return cmd_sweep(sweep_flags, vary, g);
    if (*hmap) return cmd_hmap(hmap_flags, hmap_m, g);
    if (*volume) return cmd_volume(vf, g);
    if (*bounds) return cmd_bounds(bf, g);
    if (*examples) return cmd_examples(ids, out_dir, g);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.status == TP_INTERNAL ? kExitInternal : kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
