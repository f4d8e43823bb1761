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

#ifndef RSUPLAN_COVERAGE_HPP_
#define RSUPLAN_COVERAGE_HPP_

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rsuplan/pattern_mining.hpp"
#include "rsuplan/trajectory_db.hpp"

namespace rsu {

/// Sorted, duplicate-free junction set.
using JunctionSet = std::vector<JunctionId>;

/// Pattern sequences viewed as unordered hyperedges over junctions.
class Hypergraph {
 public:
  /// Each edge is normalised to a sorted set; identical edges collapse.
  /// Throws ValidationError on an empty edge list or an empty edge.
  explicit Hypergraph(const std::vector<JunctionSequence>& edges);

  const std::vector<JunctionId>& vertices() const noexcept { return vertices_; }
  const std::vector<JunctionSet>& edges() const noexcept { return edges_; }

  /// True iff `t` intersects every edge.
  bool is_transversal(const JunctionSet& t) const;

 private:
  std::vector<JunctionId> vertices_;
  std::vector<JunctionSet> edges_;
};

Hypergraph build_hypergraph(const PatternSet& patterns);

/// Bounds for exact transversal enumeration. Exceeding either raises
/// ResourceLimitError instead of returning a partial answer.
struct TransversalLimits {
  std::size_t max_transversals = 1'000'000;
  std::chrono::milliseconds time_budget{60'000};
};

/// All inclusion-minimal transversals (MMCS: branch on the uncovered edge
/// with fewest candidates, prune any vertex that would leave a chosen vertex
/// without a critical edge). Sorted by cardinality, then lexicographically.
std::vector<JunctionSet> minimal_transversals(const Hypergraph& h, const TransversalLimits& limits = {});

enum class Strategy { SpaCov, SpaCovPlus, HeSPiC, Mip };

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view s);

struct PlacementPlan {
  std::vector<JunctionId> rsu_junctions;
  Strategy strategy = Strategy::SpaCov;
  std::map<std::string, std::string> parameters;
  /// FNV-1a of the covered pattern set's text form; empty when not applicable.
  std::string pattern_digest;

  std::size_t size() const noexcept { return rsu_junctions.size(); }
};

/// Smallest transversal, ties broken by the lexicographically smallest set.
/// Throws ValidationError on an empty collection.
PlacementPlan select_cover(const std::vector<JunctionSet>& transversals);

PlacementPlan spacov(const SequentialDatabase& db, const MinSup& minsup, const TransversalLimits& limits = {});
PlacementPlan spacov_plus(const SequentialDatabase& db, const MinSup& minsup, std::size_t max_len,
                          const TransversalLimits& limits = {});

/// Covers an arbitrary pattern set: hypergraph, transversals, select_cover.
PlacementPlan cover_patterns(const PatternSet& patterns, Strategy strategy, const TransversalLimits& limits = {});

std::string pattern_digest(const PatternSet& patterns);

nlohmann::json plan_to_json(const PlacementPlan& plan);
PlacementPlan plan_from_json(const nlohmann::json& j);
PlacementPlan load_plan_file(const std::filesystem::path& path);

}  // namespace rsu

#endif  // RSUPLAN_COVERAGE_HPP_
