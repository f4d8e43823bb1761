// Copyright 2026 The rsuplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rsuplan/cli.hpp"

namespace fs = std::filesystem;
using rsu::run_cli;

namespace {

const std::string kData = RSUPLAN_DATA_DIR;
const std::string kD = kData + "/table_d.txt";
const std::string kDt = kData + "/table_dt.txt";
const std::string kDis = kData + "/example_dis.txt";
const std::string kMap = kData + "/example_map.txt";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "rsuplan_test_cli";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("spacov prints a JSON plan") {
  const auto r = run({"spacov", "--trajectories", kD, "--minsup", "2/8"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["junctions"] == nlohmann::json::array({3, 6}));
  CHECK(j["strategy"] == "spacov");
  CHECK(j["parameters"]["minsup"] == "2/8");

  const auto dec = run({"spacov", "--trajectories", kD, "--minsup", "0.25", "--format", "text"});
  CHECK(dec.code == 0);
  CHECK(dec.out.find("junctions: 3 6") != std::string::npos);
}

TEST_CASE("other planning subcommands") {
  auto r = run({"spacov-plus", "--trajectories", kD, "--minsup", "2/8", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "junction\n3\n6\n");

  r = run({"hespic", "--trajectories", kD, "--minsup", "2/8", "--distances", kDis, "--k", "2"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["plan"]["junctions"] == nlohmann::json::array({3, 6}));

  r = run({"hespic", "--trajectories", kD, "--minsup", "2/8", "--map", kMap, "--k", "1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("junction,w_mfs,w_mrs", 0) == 0);

  r = run({"mip", "--trajectories", kDt, "--minsup", "1/7", "--minbenefit", "17"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["plan"]["junctions"] == nlohmann::json::array({6}));

  r = run({"mine", "--trajectories", kD, "--minsup", "2/8"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["fs"]["patterns"].size() == 16);
  CHECK(j["mfs"]["patterns"].size() == 5);
  CHECK(j["ap"]["patterns"].size() == 8);

  r = run({"mine", "--trajectories", kD, "--minsup", "2/8", "--kind", "mfs", "--format", "text"});
  CHECK(r.out == "# mfs (5)\n<3 6> 2/8\n<6 3> 2/8\n<6 5> 2/8\n<2 6 7> 2/8\n<5 3 7> 2/8\n");
}

TEST_CASE("eval and sweep emit CSV") {
  const auto dir = scratch();
  const auto plan = (dir / "plan.json").string();
  auto r = run({"spacov", "--trajectories", kD, "--minsup", "2/8", "--out", plan});
  REQUIRE(r.code == 0);
  CHECK(r.out == "spacov: junctions 3 6 -> " + plan + "\n");

  r = run({"eval", "--plan", plan, "--map", kMap, "--trajectories", kD, "--range", "300"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("strategy,junctions,range,coverage_ratio", 0) == 0);
  CHECK(r.out.find("spacov,3 6,300,1,8,8,") != std::string::npos);

  r = run({"eval", "--plan", plan, "--map", kMap, "--trajectories", kD, "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["report"]["cost"] == 2);

  r = run({"sweep", "--map", kMap, "--trajectories", kD, "--minsup", "2/8", "--axis", "range", "--values",
           "0,100,300"});
  REQUIRE(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);

  r = run({"sweep", "--map", kMap, "--trajectories", kD, "--strategy", "hespic", "--distances", kDis, "--minsup",
           "2/8", "--axis", "k", "--values", "1,2,3", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).size() == 3);
}

TEST_CASE("re-running writes identical bytes") {
  const auto out = (scratch() / "hespic.json").string();
  const std::vector<std::string> args{"hespic", "--trajectories", kD, "--minsup", "2/8", "--distances", kDis,
                                      "--k", "3", "--out", out};
  REQUIRE(run(args).code == 0);
  const auto first = slurp(out);
  REQUIRE(run(args).code == 0);
  CHECK(slurp(out) == first);
  CHECK_FALSE(first.empty());
}

TEST_CASE("config file supplies defaults that flags override") {
  const auto cfg = scratch() / "run.cfg";
  std::ofstream(cfg) << "# defaults\ntrajectories = " << kD << "\nminsup = 1/8\nformat = text\n";
  auto r = run({"spacov", "--config", cfg.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("junctions:") != std::string::npos);
  r = run({"spacov", "--config", cfg.string(), "--minsup", "2/8"});
  CHECK(r.out.find("junctions: 3 6") != std::string::npos);

  const auto bad = scratch() / "bad.cfg";
  std::ofstream(bad) << "colour = red\n";
  CHECK(run({"spacov", "--config", bad.string(), "--trajectories", kD, "--minsup", "2/8"}).code == 2);
  CHECK(run({"spacov", "--config", (scratch() / "absent.cfg").string()}).code == 1);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"spacov", "--trajectories", kD}).code == 2);
  CHECK(run({"spacov", "--trajectories", kD, "--minsup", "2/8", "--unknown", "1"}).code == 2);
  CHECK(run({"spacov", "--trajectories", kD, "--minsup", "5/4"}).code == 2);

  const auto k0 = run({"hespic", "--trajectories", kD, "--minsup", "2/8", "--distances", kDis, "--k", "0"});
  CHECK(k0.code == 2);
  CHECK(k0.err.find("k must be") != std::string::npos);
  CHECK(std::count(k0.err.begin(), k0.err.end(), '\n') == 1);
  CHECK(run({"hespic", "--trajectories", kD, "--minsup", "2/8", "--k", "2"}).code == 2);

  CHECK(run({"spacov", "--trajectories", "/nonexistent/d.txt", "--minsup", "2/8"}).code == 1);

  const auto broken = scratch() / "broken.txt";
  std::ofstream(broken) << "v1: 1 2\nv2 3 4\n";
  const auto p = run({"spacov", "--trajectories", broken.string(), "--minsup", "1/2"});
  CHECK(p.code == 3);
  CHECK(p.err.find("line 2") != std::string::npos);

  CHECK(run({"mip", "--trajectories", kDt, "--minsup", "1/7", "--minbenefit", "1000"}).code == 2);
  CHECK(run({"eval", "--plan", kD, "--map", kMap, "--trajectories", kD}).code == 3);
}

TEST_CASE("help documents every flag") {
  const auto r = run({"hespic", "--help"});
  CHECK(r.code == 0);
  for (const char* flag : {"--trajectories", "--minsup", "--k", "--alpha", "--beta", "--delta", "--poisson-m",
                           "--distances", "--map", "--out", "--format", "--config", "--max-len"})
    CHECK(r.out.find(flag) != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
