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

// Desk-scale placement evaluation. Vehicles are only observed at junctions,
// so contact is decided between junction coordinates.

#ifndef RSUPLAN_EVALUATOR_HPP_
#define RSUPLAN_EVALUATOR_HPP_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rsuplan/coverage.hpp"
#include "rsuplan/distance_matrix.hpp"
#include "rsuplan/hespic.hpp"
#include "rsuplan/pattern_mining.hpp"
#include "rsuplan/trajectory_db.hpp"

namespace rsu {

struct Point {
  double x = 0;
  double y = 0;
};

struct RoadEdge {
  JunctionId from = 0;
  JunctionId to = 0;
  double length = 0;
  bool directed = false;
};

struct RoadMap {
  std::map<JunctionId, Point> junctions;
  std::vector<RoadEdge> edges;

  bool contains(JunctionId j) const { return junctions.count(j) != 0; }
  /// Throws ValidationError on a dangling endpoint, a non-positive or
  /// non-finite length, or a non-finite coordinate.
  void validate() const;
};

/// Sections `[junctions]` (`id x y`), `[edges]` (`a b length`, two-way) and
/// `[arcs]` (`a b length`, one-way). `#` starts a comment line.
RoadMap load_map(std::istream& in);
RoadMap load_map_file(const std::filesystem::path& path);
void write_map(std::ostream& out, const RoadMap& map);

/// All-pairs shortest path lengths; unreachable pairs are kUnreachable.
DistanceMatrix shortest_path_matrix(const RoadMap& map);

struct SimConfig {
  double communication_range = 300.0;  // meters
  std::size_t message_size = 2312;     // bytes, recorded only
  double message_frequency = 0.5;      // Hz, recorded only
  std::size_t runs = 1;

  /// Range must be finite and >= 0 (0 means co-location), frequency > 0,
  /// message size and runs >= 1.
  void validate() const;
};

struct CoverageReport {
  double coverage_ratio = 0;
  std::size_t informed_vehicles = 0;
  std::size_t total_vehicles = 0;
  /// Mean 0-based path index of first contact over informed vehicles; 0 when
  /// none is informed.
  double avg_latency = 0;
  /// One message per (vehicle, in-range junction visit).
  std::size_t overhead = 0;
  std::size_t cost = 0;

  friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

/// Throws ValidationError when a plan or trajectory junction is not on the map.
CoverageReport simulate(const RoadMap& map, const PlacementPlan& plan, const SequentialDatabase& db,
                        const SimConfig& cfg);

nlohmann::json report_to_json(const CoverageReport& r);

/// Everything needed to recompute a plan at a sweep point.
struct StrategyConfig {
  Strategy strategy = Strategy::SpaCov;
  MinSup minsup{1, 2};
  std::size_t max_len = 0;  // 0: default_max_len(db)
  double minbenefit = 0;
  HespicParams hespic;
  std::optional<DistanceMatrix> distances;  // HeSPiC; derived from the map when absent
  TransversalLimits limits;
};

/// Throws ValidationError when a MIP run selects no pattern.
PlacementPlan compute_plan(const SequentialDatabase& db, const RoadMap& map, const StrategyConfig& cfg);

enum class SweepAxis { K, MinSup, Range, Vehicles };
std::string_view to_string(SweepAxis a);
SweepAxis parse_sweep_axis(std::string_view s);

struct SweepPoint {
  SweepAxis axis = SweepAxis::Range;
  std::string value;
  PlacementPlan plan;
  CoverageReport report;
};

/// One point per value. `vehicles` keeps the first n trajectories and
/// re-plans on them; `k` requires the HeSPiC strategy.
std::vector<SweepPoint> sweep(const RoadMap& map, const SequentialDatabase& db, const StrategyConfig& strategy,
                              const SimConfig& sim, SweepAxis axis, const std::vector<std::string>& values);

void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& points);
nlohmann::json sweep_to_json(const std::vector<SweepPoint>& points);

}  // namespace rsu

#endif  // RSUPLAN_EVALUATOR_HPP_
