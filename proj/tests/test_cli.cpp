// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(TETRAPROP_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

const std::string kPlane = "--space euclidean2 --p 0,0 --alpha 0.9 --beta 1.1";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check exit codes") {
    const Run ok = cli("check " + kPlane + " --r 1 --search");
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("HOLDS C_best=1.6074", 0) == 0);
    CHECK(cli("check " + kPlane).code == 64);
    CHECK(cli("check --space cone --rho 0.25 --p vertex --r 1 --alpha 0.5 --beta 1.5 --C 0.5").code == 1);
    CHECK(cli("check " + kPlane + " --r 1 --apex 1,0 --C 1.6075").code == 2);
    CHECK(cli("check " + kPlane + " --r 1 --apex 1,0 --C 9").code == 1);
    CHECK(cli("frobnicate").code == 64);
    CHECK(cli("check --space nowhere --p 0,0 --r 1").code == 64);
  }

  TEST_CASE("json mode prints one parseable document") {
    const Run r = cli("--json check " + kPlane + " --r 1 --apex 1,0");
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "check");
    CHECK(doc["report"]["verdict"] == "HOLDS");
  }

  TEST_CASE("config file, flags and the seed fallback") {
    const std::string path = "cli_test_config.json";
    std::ofstream(path) << R"({"space":"euclidean2","p":"0,0","r":2,"alpha":0.9,"beta":1.1,"apexes":["2,0"],"seed":5})";
    const Run from_config = cli("--json --config " + path + " check");
    REQUIRE(from_config.code == 0);
    CHECK(nlohmann::json::parse(from_config.out)["query"]["r"] == 2.0);
    CHECK(nlohmann::json::parse(from_config.out)["query"]["tolerances"]["seed"] == 5);
    const Run flag = cli("--json --config " + path + " --seed 9 check --r 1 --apex 1,0");
    REQUIRE(flag.code == 0);
    CHECK(nlohmann::json::parse(flag.out)["query"]["r"] == 1.0);
    CHECK(nlohmann::json::parse(flag.out)["query"]["tolerances"]["seed"] == 9);
    setenv("TETRAPROP_SEED", "13", 1);
    const Run env = cli("--json check " + kPlane + " --r 1 --apex 1,0");
    const Run env_flag = cli("--json --seed 4 check " + kPlane + " --r 1 --apex 1,0");
    unsetenv("TETRAPROP_SEED");
    CHECK(nlohmann::json::parse(env_flag.out)["query"]["tolerances"]["seed"] == 4);
    CHECK(nlohmann::json::parse(env.out)["query"]["tolerances"]["seed"] == 13);

    std::ofstream("cli_test_bad.json") << "{\"r\": ";
    CHECK(cli("--config cli_test_bad.json check " + kPlane).code == 64);
  }

  TEST_CASE("identical invocations give identical bytes") {
    const std::string args = "sweep " + kPlane + " --r 1 --vary r=0.5:1.5:3 --vary alpha=0.8,0.9";
    const Run a = cli(args);
    const Run b = cli("--workers 3 " + args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(lines(a.out).size() == 7);
    CHECK(lines(a.out)[0] == "r,alpha,C_best,verdict,grid_min,refined_min");
  }

  TEST_CASE("a one-cell sweep matches check") {
    const Run sweep = cli("sweep " + kPlane + " --r 1 --apex 1,0 --vary r=1:1:1");
    const Run check = cli("--json check " + kPlane + " --r 1 --apex 1,0");
    REQUIRE(sweep.code == 0);
    const auto doc = nlohmann::json::parse(check.out);
    const std::string row = lines(sweep.out).at(1);
    CHECK(row.find("," + doc["report"]["verdict"].get<std::string>() + ",") != std::string::npos);
    std::ostringstream c;
    c << "1," << doc["report"]["C_best"].dump() << ",";
    CHECK(row.rfind(c.str(), 0) == 0);
  }

  TEST_CASE("empty sweep grid is a usage error") {
    CHECK(cli("sweep " + kPlane + " --r 1 --vary r=0:1:0").code == 64);
    CHECK(cli("sweep " + kPlane + " --r 1").code == 64);
  }

  TEST_CASE("hmap column increases over [0.5, 1.4] in the plane") {
    const Run r = cli("hmap --space euclidean2 --p 0,0 --r 1 --alpha 0.5 --beta 1.4 --apex 1,0 --m 10");
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == "t1,h");
    double prev = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double h = std::stod(rows[i].substr(rows[i].find(',') + 1));
      CHECK(h > prev);
      prev = h;
    }
  }

  TEST_CASE("bounds and volume") {
    const Run b = cli("bounds --V0 10 --C 1 --alpha 0.9 --beta 1.1 --n 3 --eps 1");
    REQUIRE(b.code == 0);
    CHECK(nlohmann::json::parse(b.out)["packing_bound"] == 250);
    const Run v = cli("volume --space euclidean3 --p 0,0,0 --r 0.5,1 --method analytic --C 1 --alpha 0.9 --beta 1.1");
    CHECK(v.code == 0);
    CHECK(lines(v.out).at(0) == "r,volume,stderr,bound,slack");
    CHECK(lines(v.out).size() == 3);
  }

  TEST_CASE("examples by id") {
    const Run r = cli("examples --id modified_plane_ray");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS modified_plane_ray", 0) == 0);
    CHECK(cli("examples --id nope").code == 64);
  }

  TEST_CASE("example reports match the stored golden files") {
    for (const std::string id : {"rp2_cone", "modified_planes"}) {
      CAPTURE(id);
      const Run r = cli("--seed 42 --json examples --id " + id);
      REQUIRE(r.code == 0);
      std::ifstream golden(std::string(TETRAPROP_REPORTS) + "/" + id + ".json");
      REQUIRE(golden.good());
      std::stringstream want;
      want << golden.rdbuf();
      CHECK(nlohmann::ordered_json::parse(r.out)["reports"][0].dump(2) + "\n" == want.str());
    }
  }
}
