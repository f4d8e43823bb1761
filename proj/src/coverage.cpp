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

#include "rsuplan/coverage.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rsuplan/errors.hpp"

namespace rsu {

// ---------------------------------------------------------------------------
// Hypergraph

Hypergraph::Hypergraph(const std::vector<JunctionSequence>& edges) {
  if (edges.empty()) throw ValidationError("cannot build a hypergraph from an empty pattern set");
  for (const auto& e : edges) {
    if (e.empty()) throw ValidationError("hypergraph edges must be non-empty");
    JunctionSet set(e.begin(), e.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    vertices_.insert(vertices_.end(), set.begin(), set.end());
    edges_.push_back(std::move(set));
  }
  std::sort(edges_.begin(), edges_.end(), [](const JunctionSet& a, const JunctionSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Hypergraph::is_transversal(const JunctionSet& t) const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const JunctionSet& e) {
    return std::any_of(e.begin(), e.end(), [&](JunctionId j) { return std::binary_search(t.begin(), t.end(), j); });
  });
}

Hypergraph build_hypergraph(const PatternSet& patterns) { return Hypergraph(patterns.sequences()); }

// ---------------------------------------------------------------------------
// MMCS

namespace {

class Mmcs {
 public:
  Mmcs(const Hypergraph& h, const TransversalLimits& limits)
      : ids_(h.vertices()), limits_(limits), start_(std::chrono::steady_clock::now()) {
    const std::size_t n = ids_.size();
    incidence_.resize(n);
    for (const auto& e : h.edges()) {
      std::vector<std::uint32_t> idx;
      idx.reserve(e.size());
      for (JunctionId j : e) {
        idx.push_back(static_cast<std::uint32_t>(std::lower_bound(ids_.begin(), ids_.end(), j) - ids_.begin()));
      }
      for (auto v : idx) incidence_[v].push_back(static_cast<std::uint32_t>(edges_.size()));
      edges_.push_back(std::move(idx));
    }
    hits_.assign(edges_.size(), 0);
    uncovered_ = edges_.size();
    cand_.assign(n, 1);
  }

  std::vector<JunctionSet> run() {
    recurse();
    std::sort(out_.begin(), out_.end(), [](const JunctionSet& a, const JunctionSet& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return std::move(out_);
  }

 private:
  bool edge_contains(std::uint32_t e, std::uint32_t v) const {
    return std::binary_search(edges_[e].begin(), edges_[e].end(), v);
  }

  // Every member of S ∪ {v} keeps an edge it alone hits.
  bool keeps_minimal(std::uint32_t v) const {
    for (auto u : chosen_) {
      bool critical = false;
      for (auto e : incidence_[u]) {
        if (hits_[e] == 1 && !edge_contains(e, v)) {
          critical = true;
          break;
        }
      }
      if (!critical) return false;
    }
    return true;
  }

  void add(std::uint32_t v) {
    chosen_.push_back(v);
    for (auto e : incidence_[v]) {
      if (hits_[e]++ == 0) --uncovered_;
    }
  }

  void remove(std::uint32_t v) {
    chosen_.pop_back();
    for (auto e : incidence_[v]) {
      if (--hits_[e] == 0) ++uncovered_;
    }
  }

  void check_budget() {
    if (++nodes_ % 1024 != 0) return;
    if (std::chrono::steady_clock::now() - start_ > limits_.time_budget)
      throw ResourceLimitError("minimal transversal enumeration exceeded its time budget of " +
                               std::to_string(limits_.time_budget.count()) + " ms");
  }

  void recurse() {
    check_budget();
    if (uncovered_ == 0) {
      if (out_.size() >= limits_.max_transversals)
        throw ResourceLimitError("more than " + std::to_string(limits_.max_transversals) + " minimal transversals");
      JunctionSet t;
      t.reserve(chosen_.size());
      for (auto v : chosen_) t.push_back(ids_[v]);
      std::sort(t.begin(), t.end());
      out_.push_back(std::move(t));
      return;
    }

    // Uncovered edge with the fewest candidates.
    std::size_t best = SIZE_MAX;
    std::uint32_t best_edge = 0;
    for (std::uint32_t e = 0; e < edges_.size(); ++e) {
      if (hits_[e] != 0) continue;
      std::size_t c = 0;
      for (auto v : edges_[e]) c += cand_[v];
      if (c < best) {
        best = c;
        best_edge = e;
        if (c == 0) break;
      }
    }
    if (best == 0) return;

    std::vector<std::uint32_t> branch;
    for (auto v : edges_[best_edge]) {
      if (cand_[v]) branch.push_back(v);
    }
    for (auto v : branch) cand_[v] = 0;
    for (auto v : branch) {
      if (keeps_minimal(v)) {
        add(v);
        recurse();
        remove(v);
      }
      cand_[v] = 1;
    }
  }

  const std::vector<JunctionId>& ids_;
  const TransversalLimits& limits_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::vector<std::uint32_t>> edges_;
  std::vector<std::vector<std::uint32_t>> incidence_;
  std::vector<std::uint32_t> hits_;
  std::size_t uncovered_ = 0;
  std::vector<char> cand_;
  std::vector<std::uint32_t> chosen_;
  std::vector<JunctionSet> out_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<JunctionSet> minimal_transversals(const Hypergraph& h, const TransversalLimits& limits) {
  return Mmcs(h, limits).run();
}

// ---------------------------------------------------------------------------
// Plans

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::SpaCov: return "spacov";
    case Strategy::SpaCovPlus: return "spacov+";
    case Strategy::HeSPiC: return "hespic";
    case Strategy::Mip: return "mip";
  }
  return "?";
}

Strategy parse_strategy(std::string_view s) {
  if (s == "spacov") return Strategy::SpaCov;
  if (s == "spacov+" || s == "spacov-plus") return Strategy::SpaCovPlus;
  if (s == "hespic") return Strategy::HeSPiC;
  if (s == "mip") return Strategy::Mip;
  throw ValidationError("unknown strategy '" + std::string(s) + "'");
}

PlacementPlan select_cover(const std::vector<JunctionSet>& transversals) {
  if (transversals.empty()) throw ValidationError("select_cover: no transversal to choose from");
  const auto best = std::min_element(transversals.begin(), transversals.end(), [](const JunctionSet& a, const JunctionSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  PlacementPlan plan;
  plan.rsu_junctions = *best;
  return plan;
}

std::string pattern_digest(const PatternSet& patterns) {
  std::ostringstream text;
  write_patterns(text, patterns);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

PlacementPlan cover_patterns(const PatternSet& patterns, Strategy strategy, const TransversalLimits& limits) {
  const Hypergraph h = build_hypergraph(patterns);
  PlacementPlan plan = select_cover(minimal_transversals(h, limits));
  plan.strategy = strategy;
  plan.pattern_digest = pattern_digest(patterns);
  plan.parameters["patterns"] = std::to_string(patterns.size());
  return plan;
}

PlacementPlan spacov(const SequentialDatabase& db, const MinSup& minsup, const TransversalLimits& limits) {
  const PatternSet mfs = maximal_frequent(mine_frequent(db, minsup));
  PlacementPlan plan = cover_patterns(mfs, Strategy::SpaCov, limits);
  plan.parameters["minsup"] = minsup.str();
  return plan;
}

PlacementPlan spacov_plus(const SequentialDatabase& db, const MinSup& minsup, std::size_t max_len,
                          const TransversalLimits& limits) {
  PlacementPlan plan = cover_patterns(amp(db, minsup, max_len), Strategy::SpaCovPlus, limits);
  plan.parameters["minsup"] = minsup.str();
  plan.parameters["max_len"] = std::to_string(max_len);
  return plan;
}

nlohmann::json plan_to_json(const PlacementPlan& plan) {
  return {{"strategy", std::string(to_string(plan.strategy))},
          {"parameters", plan.parameters},
          {"junctions", plan.rsu_junctions},
          {"pattern_set_digest", plan.pattern_digest}};
}

PlacementPlan plan_from_json(const nlohmann::json& j) {
  try {
    PlacementPlan plan;
    plan.strategy = parse_strategy(j.at("strategy").get<std::string>());
    plan.rsu_junctions = j.at("junctions").get<std::vector<JunctionId>>();
    if (j.contains("parameters")) plan.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    if (j.contains("pattern_set_digest")) plan.pattern_digest = j.at("pattern_set_digest").get<std::string>();
    return plan;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid plan: ") + e.what());
  }
}

PlacementPlan load_plan_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open plan file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("plan file " + path.string() + ": " + e.what());
  }
  // CLI reports may wrap the plan next to other data.
  if (j.contains("plan")) return plan_from_json(j.at("plan"));
  return plan_from_json(j);
}

}  // namespace rsu
