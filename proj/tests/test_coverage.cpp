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

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rsuplan/coverage.hpp"
#include "rsuplan/errors.hpp"

using namespace rsu;

namespace {

std::set<JunctionSet> as_set(const std::vector<JunctionSet>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("hypergraph normalises edges") {
  const Hypergraph h({{6, 5}, {5, 6}, {2, 6, 7}, {3, 3}});
  CHECK(h.edges() == std::vector<JunctionSet>{{3}, {5, 6}, {2, 6, 7}});
  CHECK(h.vertices() == std::vector<JunctionId>{2, 3, 5, 6, 7});
  CHECK(h.is_transversal({3, 6}));
  CHECK_FALSE(h.is_transversal({6}));
  CHECK_THROWS_AS(Hypergraph({}), ValidationError);
  CHECK_THROWS_AS(Hypergraph({{1}, {}}), ValidationError);
}

TEST_CASE("minimal transversals of the example maximal frequent set") {
  const auto h = build_hypergraph(fixtures::to_pattern_set(fixtures::d_maximal_frequent(), PatternKind::MFS));
  const auto mt = minimal_transversals(h);
  // Three of cardinality two, plus two of cardinality three.
  CHECK(as_set(mt) == std::set<JunctionSet>{{3, 6}, {5, 6}, {6, 7}, {2, 3, 5}, {3, 5, 7}});
  CHECK(mt.front() == JunctionSet{3, 6});
  CHECK(select_cover(mt).rsu_junctions == JunctionSet{3, 6});
  CHECK_THROWS_AS(select_cover({}), ValidationError);
}

TEST_CASE("single-edge and singleton hypergraphs") {
  CHECK(as_set(minimal_transversals(Hypergraph({{4, 2}}))) == std::set<JunctionSet>{{2}, {4}});
  CHECK(as_set(minimal_transversals(Hypergraph({{1}, {2}}))) == std::set<JunctionSet>{{1, 2}});
}

TEST_CASE("enumeration limits") {
  // Five disjoint pairs have 2^5 minimal transversals.
  const Hypergraph h({{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}});
  CHECK(minimal_transversals(h).size() == 32);
  TransversalLimits tight;
  tight.max_transversals = 10;
  CHECK_THROWS_AS(minimal_transversals(h, tight), ResourceLimitError);

  std::vector<JunctionSequence> many;
  for (JunctionId i = 0; i < 20; ++i) many.push_back({2 * i, 2 * i + 1});
  TransversalLimits instant;
  instant.time_budget = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(minimal_transversals(Hypergraph(many), instant), ResourceLimitError);
}

TEST_CASE("placement pipelines on the example") {
  const auto db = fixtures::table_d();
  const auto sc = spacov(db, MinSup(2, 8));
  CHECK(sc.rsu_junctions == JunctionSet{3, 6});
  CHECK(sc.strategy == Strategy::SpaCov);
  CHECK(sc.parameters.at("minsup") == "2/8");
  CHECK(sc.pattern_digest.size() == 16);

  const auto sp = spacov_plus(db, MinSup(2, 8), default_max_len(db));
  CHECK(sp.rsu_junctions == JunctionSet{3, 6});
  CHECK(sp.strategy == Strategy::SpaCovPlus);
  CHECK(sp.pattern_digest != sc.pattern_digest);
}

TEST_CASE("strategy labels") {
  for (auto s : {Strategy::SpaCov, Strategy::SpaCovPlus, Strategy::HeSPiC, Strategy::Mip})
    CHECK(parse_strategy(to_string(s)) == s);
  CHECK(parse_strategy("spacov-plus") == Strategy::SpaCovPlus);
  CHECK_THROWS_AS(parse_strategy("greedy"), ValidationError);
}

TEST_CASE("plan json round trip") {
  const auto plan = spacov(fixtures::table_d(), MinSup(2, 8));
  const auto j = plan_to_json(plan);
  CHECK(j["junctions"] == nlohmann::json::array({3, 6}));
  CHECK(j["strategy"] == "spacov");
  const auto back = plan_from_json(j);
  CHECK(back.rsu_junctions == plan.rsu_junctions);
  CHECK(back.parameters == plan.parameters);
  CHECK(back.pattern_digest == plan.pattern_digest);
  CHECK_THROWS_AS(plan_from_json(nlohmann::json{{"strategy", "spacov"}}), ParseError);

  const auto dir = std::filesystem::temp_directory_path() / "rsuplan_test_coverage";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "wrapped.json") << nlohmann::json{{"plan", j}, {"extra", 1}}.dump();
  CHECK(load_plan_file(dir / "wrapped.json").rsu_junctions == JunctionSet{3, 6});
  std::ofstream(dir / "broken.json") << "{ nope";
  CHECK_THROWS_AS(load_plan_file(dir / "broken.json"), ParseError);
  CHECK_THROWS_AS(load_plan_file(dir / "missing.json"), IoError);
}

TEST_CASE("minimal transversals agree with the power-set oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> nv(1, 10), ne(1, 8);
  for (int iter = 0; iter < 1000; ++iter) {
    const int n = nv(rng);
    std::uniform_int_distribution<JunctionId> pick(1, static_cast<JunctionId>(n));
    std::uniform_int_distribution<int> width(1, n);
    std::vector<JunctionSequence> edges(static_cast<std::size_t>(ne(rng)));
    for (auto& e : edges) {
      const int w = width(rng);
      for (int i = 0; i < w; ++i) e.push_back(pick(rng));
    }
    const Hypergraph h(edges);
    const auto mt = minimal_transversals(h);
    std::vector<std::vector<std::uint32_t>> oedges(h.edges().begin(), h.edges().end());
    REQUIRE(as_set(mt) == oracle::minimal_transversals(h.vertices(), oedges));
    REQUIRE(mt.size() == as_set(mt).size());
    for (const auto& t : mt) {
      REQUIRE(h.is_transversal(t));
      for (std::size_t i = 0; i < t.size(); ++i) {
        JunctionSet smaller = t;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        REQUIRE_FALSE(h.is_transversal(smaller));
      }
    }
  }
}
