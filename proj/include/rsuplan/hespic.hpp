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

// Budget-constrained placement: rank every junction by a weighted blend of
// pattern membership, Poisson crossing probability and position on a greedy
// dispersion path, then keep the k best.

#ifndef RSUPLAN_HESPIC_HPP_
#define RSUPLAN_HESPIC_HPP_

#include <compare>
#include <map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rsuplan/coverage.hpp"
#include "rsuplan/distance_matrix.hpp"
#include "rsuplan/pattern_mining.hpp"

namespace rsu {

/// Number of maximal-frequent and minimal-rare patterns a junction belongs to.
/// Ordered lexicographically: MFS membership first, MRS membership on ties.
struct WeightPair {
  std::size_t mfs = 0;
  std::size_t mrs = 0;

  friend auto operator<=>(const WeightPair&, const WeightPair&) = default;
};

using WeightMap = std::map<JunctionId, WeightPair>;

/// Rank position per junction, 1..n, higher is more important.
using RankVector = std::map<JunctionId, std::size_t>;

struct ScoreWeights {
  double alpha = 1.0;  // weight rank
  double beta = 1.0;   // probability rank
  double delta = 1.0;  // dispersion-path rank

  /// Throws ValidationError on a negative or non-finite coefficient or an
  /// all-zero triple.
  void validate() const;
};

inline constexpr int kDefaultPoissonTruncation = 7;

WeightMap junction_weights(const PatternSet& mfs, const PatternSet& mrs, const std::vector<JunctionId>& universe);

/// Ascending importance; equal weights rank the smaller id lower.
RankVector sort_by_weight(const WeightMap& weights);

/// sum_{m=1..M} e^-lambda lambda^m / m!, accumulated term by term.
double crossing_probability(std::uint64_t lambda, int truncation_m);

/// Ascending probability; equal probabilities rank the smaller id lower.
RankVector sort_by_probability(const std::map<JunctionId, double>& probabilities);

/// Starts at `start` and repeatedly appends the unvisited junction farthest
/// from the current one (row lookup), breaking distance ties by smallest id.
std::vector<JunctionId> greedy_longest_path(const std::vector<JunctionId>& junctions, JunctionId start,
                                            const DistanceMatrix& dis);

/// First path element gets rank n, the last gets 1.
RankVector path_ranks(const std::vector<JunctionId>& path);

/// (alpha*W + beta*P + delta*L) / (alpha + beta + delta) per junction.
std::map<JunctionId, double> rank_junctions(const RankVector& w_ranks, const RankVector& p_ranks,
                                            const std::vector<JunctionId>& path, const ScoreWeights& weights);

/// Junctions ordered by descending score, ties by ascending id, first k kept.
std::vector<JunctionId> top_k(const std::map<JunctionId, double>& scores, std::size_t k);

struct HespicParams {
  std::size_t k = 1;
  ScoreWeights weights;
  int poisson_m = kDefaultPoissonTruncation;
  std::size_t max_len = 0;  // 0: default_max_len(db)
};

struct JunctionScore {
  JunctionId junction = 0;
  WeightPair weight;
  std::size_t lambda = 0;
  double probability = 0;
  std::size_t weight_rank = 0;
  std::size_t probability_rank = 0;
  std::size_t path_rank = 0;
  double score = 0;
};

struct HespicResult {
  PlacementPlan plan;
  std::vector<JunctionId> path;
  std::vector<JunctionScore> table;  // by junction id
};

/// Full pipeline over the database's junction universe; the unpruned
/// minimal-rare set feeds the weights. Throws ValidationError when k is
/// outside [1, |universe|] or `dis` lacks a universe junction.
HespicResult hespic_top_k(const SequentialDatabase& db, const MinSup& minsup, const DistanceMatrix& dis,
                          const HespicParams& params);

nlohmann::json hespic_to_json(const HespicResult& r);

}  // namespace rsu

#endif  // RSUPLAN_HESPIC_HPP_
