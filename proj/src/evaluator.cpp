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

#include "rsuplan/evaluator.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/dijkstra_shortest_paths.hpp>
#include <nlohmann/json.hpp>

#include "rsuplan/errors.hpp"
#include "rsuplan/mip.hpp"
#include "text_util.hpp"

namespace rsu {

// ---------------------------------------------------------------------------
// Road maps

void RoadMap::validate() const {
  for (const auto& [id, p] : junctions) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw ValidationError("junction " + std::to_string(id) + " has a non-finite coordinate");
  }
  for (const auto& e : edges) {
    if (!contains(e.from) || !contains(e.to))
      throw ValidationError("edge " + std::to_string(e.from) + "-" + std::to_string(e.to) +
                            " references an unknown junction");
    if (!std::isfinite(e.length) || e.length <= 0)
      throw ValidationError("edge " + std::to_string(e.from) + "-" + std::to_string(e.to) +
                            " must have a positive length");
  }
}

RoadMap load_map(std::istream& in) {
  enum class Section { None, Junctions, Edges, Arcs };
  Section section = Section::None;
  RoadMap map;
  std::string line;
  std::size_t lineno = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    any = true;
    if (body.front() == '[') {
      if (body == "[junctions]") section = Section::Junctions;
      else if (body == "[edges]") section = Section::Edges;
      else if (body == "[arcs]") section = Section::Arcs;
      else throw ParseError("unknown section " + std::string(body), lineno);
      continue;
    }
    const auto toks = detail::split_ws(body);
    if (section == Section::None) throw ParseError("data before any section header", lineno);
    if (toks.size() != 3) throw ParseError("expected 3 fields, got " + std::to_string(toks.size()), lineno);
    if (section == Section::Junctions) {
      JunctionId id = 0;
      Point p;
      if (!detail::parse_uint(toks[0], id)) throw ParseError("invalid junction id '" + std::string(toks[0]) + "'", lineno);
      if (!detail::parse_real(toks[1], p.x) || !detail::parse_real(toks[2], p.y) || !std::isfinite(p.x) ||
          !std::isfinite(p.y))
        throw ParseError("invalid coordinates", lineno);
      if (!map.junctions.emplace(id, p).second) throw ParseError("duplicate junction " + std::to_string(id), lineno);
    } else {
      RoadEdge e;
      e.directed = section == Section::Arcs;
      if (!detail::parse_uint(toks[0], e.from) || !detail::parse_uint(toks[1], e.to))
        throw ParseError("invalid edge endpoint", lineno);
      if (!detail::parse_real(toks[2], e.length)) throw ParseError("invalid length '" + std::string(toks[2]) + "'", lineno);
      if (!std::isfinite(e.length) || e.length <= 0) throw ParseError("edge length must be positive", lineno);
      map.edges.push_back(e);
    }
  }
  if (!any) throw ParseError("empty map");
  if (map.junctions.empty()) throw ParseError("map has no junctions");
  try {
    map.validate();
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  return map;
}

RoadMap load_map_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open map " + path.string());
  return load_map(in);
}

void write_map(std::ostream& out, const RoadMap& map) {
  out << "[junctions]\n";
  for (const auto& [id, p] : map.junctions) out << id << ' ' << p.x << ' ' << p.y << '\n';
  out << "[edges]\n";
  for (const auto& e : map.edges) {
    if (!e.directed) out << e.from << ' ' << e.to << ' ' << e.length << '\n';
  }
  out << "[arcs]\n";
  for (const auto& e : map.edges) {
    if (e.directed) out << e.from << ' ' << e.to << ' ' << e.length << '\n';
  }
}

DistanceMatrix shortest_path_matrix(const RoadMap& map) {
  map.validate();
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS, boost::no_property,
                                      boost::property<boost::edge_weight_t, double>>;
  std::vector<JunctionId> ids;
  std::map<JunctionId, std::size_t> index;
  for (const auto& [id, p] : map.junctions) {
    index[id] = ids.size();
    ids.push_back(id);
  }
  const std::size_t n = ids.size();
  Graph g(n);
  for (const auto& e : map.edges) {
    boost::add_edge(index.at(e.from), index.at(e.to), e.length, g);
    if (!e.directed) boost::add_edge(index.at(e.to), index.at(e.from), e.length, g);
  }
  std::vector<double> values(n * n);
  std::vector<double> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    boost::dijkstra_shortest_paths(g, s, boost::distance_map(dist.data()).distance_inf(kUnreachable));
    std::copy(dist.begin(), dist.end(), values.begin() + static_cast<std::ptrdiff_t>(s * n));
  }
  return DistanceMatrix(std::move(ids), std::move(values));
}

// ---------------------------------------------------------------------------
// Simulation

void SimConfig::validate() const {
  if (!std::isfinite(communication_range) || communication_range < 0)
    throw ValidationError("communication range must be finite and non-negative");
  if (!std::isfinite(message_frequency) || message_frequency <= 0)
    throw ValidationError("message frequency must be positive");
  if (message_size == 0) throw ValidationError("message size must be positive");
  if (runs == 0) throw ValidationError("runs must be at least 1");
}

CoverageReport simulate(const RoadMap& map, const PlacementPlan& plan, const SequentialDatabase& db,
                        const SimConfig& cfg) {
  cfg.validate();
  std::vector<Point> rsus;
  for (JunctionId j : plan.rsu_junctions) {
    const auto it = map.junctions.find(j);
    if (it == map.junctions.end()) throw ValidationError("plan junction " + std::to_string(j) + " is not on the map");
    rsus.push_back(it->second);
  }
  // Contact is a property of the junction, so decide it once per junction.
  std::map<JunctionId, bool> in_range;
  for (const auto& t : db.trajectories()) {
    for (JunctionId j : t.path) {
      if (in_range.count(j)) continue;
      const auto it = map.junctions.find(j);
      if (it == map.junctions.end())
        throw ValidationError("trajectory " + t.vehicle_id + " visits junction " + std::to_string(j) +
                              " which is not on the map");
      bool hit = false;
      for (const auto& r : rsus) {
        if (std::hypot(it->second.x - r.x, it->second.y - r.y) <= cfg.communication_range) {
          hit = true;
          break;
        }
      }
      in_range[j] = hit;
    }
  }

  CoverageReport rep;
  rep.total_vehicles = db.size();
  rep.cost = plan.size();
  std::size_t latency_sum = 0;
  for (const auto& t : db.trajectories()) {
    bool informed = false;
    for (std::size_t i = 0; i < t.path.size(); ++i) {
      if (!in_range.at(t.path[i])) continue;
      ++rep.overhead;
      if (!informed) {
        informed = true;
        latency_sum += i;
      }
    }
    if (informed) ++rep.informed_vehicles;
  }
  rep.coverage_ratio = static_cast<double>(rep.informed_vehicles) / static_cast<double>(rep.total_vehicles);
  if (rep.informed_vehicles > 0)
    rep.avg_latency = static_cast<double>(latency_sum) / static_cast<double>(rep.informed_vehicles);
  return rep;
}

nlohmann::json report_to_json(const CoverageReport& r) {
  return {{"coverage_ratio", r.coverage_ratio},
          {"informed_vehicles", r.informed_vehicles},
          {"total_vehicles", r.total_vehicles},
          {"avg_latency_proxy", r.avg_latency},
          {"overhead_proxy", r.overhead},
          {"cost", r.cost}};
}

// ---------------------------------------------------------------------------
// Sweeps

PlacementPlan compute_plan(const SequentialDatabase& db, const RoadMap& map, const StrategyConfig& cfg) {
  const std::size_t max_len = cfg.max_len == 0 ? default_max_len(db) : cfg.max_len;
  switch (cfg.strategy) {
    case Strategy::SpaCov:
      return spacov(db, cfg.minsup, cfg.limits);
    case Strategy::SpaCovPlus:
      return spacov_plus(db, cfg.minsup, max_len, cfg.limits);
    case Strategy::HeSPiC: {
      HespicParams p = cfg.hespic;
      p.max_len = max_len;
      if (cfg.distances) return hespic_top_k(db, cfg.minsup, *cfg.distances, p).plan;
      return hespic_top_k(db, cfg.minsup, shortest_path_matrix(map), p).plan;
    }
    case Strategy::Mip: {
      MipResult r = mip_placement(db, cfg.minsup, cfg.minbenefit, cfg.limits);
      if (!r.plan) throw ValidationError("no pattern reaches minbenefit; MIP is empty");
      return *r.plan;
    }
  }
  throw InvariantError("unhandled strategy");
}

std::string_view to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::K: return "k";
    case SweepAxis::MinSup: return "minsup";
    case SweepAxis::Range: return "range";
    case SweepAxis::Vehicles: return "vehicles";
  }
  return "?";
}

SweepAxis parse_sweep_axis(std::string_view s) {
  if (s == "k") return SweepAxis::K;
  if (s == "minsup") return SweepAxis::MinSup;
  if (s == "range") return SweepAxis::Range;
  if (s == "vehicles") return SweepAxis::Vehicles;
  throw ValidationError("unknown sweep axis '" + std::string(s) + "' (expected k, minsup, range or vehicles)");
}

std::vector<SweepPoint> sweep(const RoadMap& map, const SequentialDatabase& db, const StrategyConfig& strategy,
                              const SimConfig& sim, SweepAxis axis, const std::vector<std::string>& values) {
  if (values.empty()) throw ValidationError("sweep needs at least one axis value");
  if (axis == SweepAxis::K && strategy.strategy != Strategy::HeSPiC)
    throw ValidationError("sweeping k requires the hespic strategy");

  std::vector<SweepPoint> out;
  std::optional<PlacementPlan> fixed;
  for (const auto& v : values) {
    StrategyConfig sc = strategy;
    SimConfig cfg = sim;
    std::optional<SequentialDatabase> subset;
    switch (axis) {
      case SweepAxis::K:
        if (!detail::parse_uint(v, sc.hespic.k)) throw ValidationError("invalid k '" + v + "'");
        break;
      case SweepAxis::MinSup:
        sc.minsup = MinSup::parse(v);
        break;
      case SweepAxis::Range:
        if (!detail::parse_real(v, cfg.communication_range)) throw ValidationError("invalid range '" + v + "'");
        cfg.validate();
        break;
      case SweepAxis::Vehicles: {
        std::size_t n = 0;
        if (!detail::parse_uint(v, n) || n == 0 || n > db.size())
          throw ValidationError("vehicle count must be in [1, " + std::to_string(db.size()) + "], got '" + v + "'");
        subset.emplace(std::vector<Trajectory>(db.trajectories().begin(),
                                               db.trajectories().begin() + static_cast<std::ptrdiff_t>(n)));
        break;
      }
    }
    const SequentialDatabase& active = subset ? *subset : db;
    SweepPoint pt{axis, v, {}, {}};
    // The plan does not depend on the range, so compute it once.
    if (axis == SweepAxis::Range) {
      if (!fixed) fixed = compute_plan(active, map, sc);
      pt.plan = *fixed;
    } else {
      pt.plan = compute_plan(active, map, sc);
    }
    pt.report = simulate(map, pt.plan, active, cfg);
    out.push_back(std::move(pt));
  }
  return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& points) {
  out << "axis,value,strategy,junctions,cost,informed_vehicles,total_vehicles,coverage_ratio,avg_latency_proxy,"
         "overhead_proxy\n";
  for (const auto& p : points) {
    out << to_string(p.axis) << ',' << p.value << ',' << to_string(p.plan.strategy) << ',';
    for (std::size_t i = 0; i < p.plan.rsu_junctions.size(); ++i) out << (i ? " " : "") << p.plan.rsu_junctions[i];
    out << ',' << p.report.cost << ',' << p.report.informed_vehicles << ',' << p.report.total_vehicles << ','
        << p.report.coverage_ratio << ',' << p.report.avg_latency << ',' << p.report.overhead << '\n';
  }
}

nlohmann::json sweep_to_json(const std::vector<SweepPoint>& points) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& p : points) {
    rows.push_back({{"axis", std::string(to_string(p.axis))},
                    {"value", p.value},
                    {"plan", plan_to_json(p.plan)},
                    {"report", report_to_json(p.report)}});
  }
  return rows;
}

}  // namespace rsu
