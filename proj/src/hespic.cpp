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

#include "rsuplan/hespic.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "rsuplan/errors.hpp"

namespace rsu {

void ScoreWeights::validate() const {
  for (double c : {alpha, beta, delta}) {
    if (!std::isfinite(c) || c < 0) throw ValidationError("score weights must be finite and non-negative");
  }
  if (alpha + beta + delta <= 0) throw ValidationError("score weights must not all be zero");
}

WeightMap junction_weights(const PatternSet& mfs, const PatternSet& mrs, const std::vector<JunctionId>& universe) {
  WeightMap w;
  for (JunctionId j : universe) w[j] = {};
  auto tally = [&](const PatternSet& set, std::size_t WeightPair::*field) {
    for (const auto& p : set.patterns) {
      JunctionSequence members = p.sequence;
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      for (JunctionId j : members) {
        auto it = w.find(j);
        if (it == w.end())
          throw ValidationError("junction " + std::to_string(j) + " appears in a pattern but not in the universe");
        ++(it->second.*field);
      }
    }
  };
  tally(mfs, &WeightPair::mfs);
  tally(mrs, &WeightPair::mrs);
  return w;
}

namespace {

template <typename Value>
RankVector ascending_ranks(const std::map<JunctionId, Value>& values) {
  std::vector<std::pair<JunctionId, Value>> v(values.begin(), values.end());
  // Map iteration is id-ascending; a stable sort keeps that as the tie-break.
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  RankVector ranks;
  for (std::size_t i = 0; i < v.size(); ++i) ranks[v[i].first] = i + 1;
  return ranks;
}

}  // namespace

RankVector sort_by_weight(const WeightMap& weights) { return ascending_ranks(weights); }

double crossing_probability(std::uint64_t lambda, int truncation_m) {
  if (truncation_m < 1) throw ValidationError("Poisson truncation M must be at least 1");
  if (lambda == 0) return 0.0;
  const double l = static_cast<double>(lambda);
  const double log_l = std::log(l);
  // log of e^-l l^m / m!, advanced by log(l/m) each step.
  double log_term = -l;
  double sum = 0.0;
  for (int m = 1; m <= truncation_m; ++m) {
    log_term += log_l - std::log(static_cast<double>(m));
    sum += std::exp(log_term);
  }
  return sum;
}

RankVector sort_by_probability(const std::map<JunctionId, double>& probabilities) {
  return ascending_ranks(probabilities);
}

std::vector<JunctionId> greedy_longest_path(const std::vector<JunctionId>& junctions, JunctionId start,
                                            const DistanceMatrix& dis) {
  std::vector<JunctionId> remaining(junctions.begin(), junctions.end());
  std::sort(remaining.begin(), remaining.end());
  remaining.erase(std::unique(remaining.begin(), remaining.end()), remaining.end());
  for (JunctionId j : remaining) {
    if (!dis.contains(j)) throw ValidationError("distance matrix has no row for junction " + std::to_string(j));
  }
  const auto s = std::lower_bound(remaining.begin(), remaining.end(), start);
  if (s == remaining.end() || *s != start)
    throw ValidationError("start junction " + std::to_string(start) + " is not in the junction set");
  remaining.erase(s);

  std::vector<JunctionId> path{start};
  JunctionId current = start;
  while (!remaining.empty()) {
    // `remaining` is id-sorted, so strict > keeps the smallest id on ties.
    auto far = remaining.begin();
    double best = dis.at(current, *far);
    for (auto it = std::next(remaining.begin()); it != remaining.end(); ++it) {
      const double d = dis.at(current, *it);
      if (d > best) {
        best = d;
        far = it;
      }
    }
    current = *far;
    path.push_back(current);
    remaining.erase(far);
  }
  return path;
}

RankVector path_ranks(const std::vector<JunctionId>& path) {
  RankVector r;
  for (std::size_t i = 0; i < path.size(); ++i) r[path[i]] = path.size() - i;
  return r;
}

std::map<JunctionId, double> rank_junctions(const RankVector& w_ranks, const RankVector& p_ranks,
                                            const std::vector<JunctionId>& path, const ScoreWeights& weights) {
  weights.validate();
  const RankVector l_ranks = path_ranks(path);
  if (w_ranks.size() != p_ranks.size() || w_ranks.size() != l_ranks.size())
    throw ValidationError("rank vectors must cover the same junctions");
  const double norm = weights.alpha + weights.beta + weights.delta;
  std::map<JunctionId, double> scores;
  for (const auto& [j, w] : w_ranks) {
    const auto p = p_ranks.find(j);
    const auto l = l_ranks.find(j);
    if (p == p_ranks.end() || l == l_ranks.end())
      throw ValidationError("junction " + std::to_string(j) + " is missing from a rank vector");
    scores[j] = (weights.alpha * static_cast<double>(w) + weights.beta * static_cast<double>(p->second) +
                 weights.delta * static_cast<double>(l->second)) /
                norm;
  }
  return scores;
}

std::vector<JunctionId> top_k(const std::map<JunctionId, double>& scores, std::size_t k) {
  std::vector<std::pair<JunctionId, double>> v(scores.begin(), scores.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<JunctionId> out;
  for (std::size_t i = 0; i < std::min(k, v.size()); ++i) out.push_back(v[i].first);
  return out;
}

HespicResult hespic_top_k(const SequentialDatabase& db, const MinSup& minsup, const DistanceMatrix& dis,
                          const HespicParams& params) {
  params.weights.validate();
  const auto& universe = db.universe();
  if (params.k < 1 || params.k > universe.size())
    throw ValidationError("k must be in [1, " + std::to_string(universe.size()) + "], got " + std::to_string(params.k));
  for (JunctionId j : universe) {
    if (!dis.contains(j)) throw ValidationError("distance matrix has no row for junction " + std::to_string(j));
  }

  const std::size_t max_len = params.max_len == 0 ? default_max_len(db) : params.max_len;
  const AmpResult patterns = run_amp(db, minsup, max_len);
  const WeightMap weights = junction_weights(patterns.mfs, patterns.mrs, universe);
  const RankVector w_ranks = sort_by_weight(weights);

  std::map<JunctionId, std::size_t> lambda;
  std::map<JunctionId, double> prob;
  for (JunctionId j : universe) {
    lambda[j] = db.support(std::vector<JunctionId>{j}).count;
    prob[j] = crossing_probability(lambda[j], params.poisson_m);
  }
  const RankVector p_ranks = sort_by_probability(prob);

  const JunctionId heaviest =
      std::max_element(w_ranks.begin(), w_ranks.end(), [](const auto& a, const auto& b) { return a.second < b.second; })
          ->first;
  HespicResult r;
  r.path = greedy_longest_path(universe, heaviest, dis);
  const RankVector l_ranks = path_ranks(r.path);
  const auto scores = rank_junctions(w_ranks, p_ranks, r.path, params.weights);

  for (JunctionId j : universe) {
    r.table.push_back({j, weights.at(j), lambda.at(j), prob.at(j), w_ranks.at(j), p_ranks.at(j), l_ranks.at(j),
                       scores.at(j)});
  }
  r.plan.strategy = Strategy::HeSPiC;
  r.plan.rsu_junctions = top_k(scores, params.k);
  r.plan.pattern_digest = pattern_digest(patterns.ap);
  r.plan.parameters = {{"minsup", minsup.str()},
                       {"k", std::to_string(params.k)},
                       {"alpha", std::to_string(params.weights.alpha)},
                       {"beta", std::to_string(params.weights.beta)},
                       {"delta", std::to_string(params.weights.delta)},
                       {"poisson_m", std::to_string(params.poisson_m)},
                       {"max_len", std::to_string(max_len)}};
  return r;
}

nlohmann::json hespic_to_json(const HespicResult& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : r.table) {
    rows.push_back({{"junction", s.junction},
                    {"weight", {s.weight.mfs, s.weight.mrs}},
                    {"lambda", s.lambda},
                    {"probability", s.probability},
                    {"weight_rank", s.weight_rank},
                    {"probability_rank", s.probability_rank},
                    {"path_rank", s.path_rank},
                    {"score", s.score}});
  }
  return {{"plan", plan_to_json(r.plan)}, {"path", r.path}, {"junctions", std::move(rows)}};
}

}  // namespace rsu
