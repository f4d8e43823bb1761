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

// Utility-driven pattern selection. All supports here are absolute counts.

#ifndef RSUPLAN_MIP_HPP_
#define RSUPLAN_MIP_HPP_

#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rsuplan/coverage.hpp"
#include "rsuplan/pattern_mining.hpp"
#include "rsuplan/trajectory_db.hpp"

namespace rsu {

/// Sum over the positions of `s` of each junction's support count;
/// repeated junctions count once per occurrence.
std::uint64_t sequence_utility(const SequentialDatabase& db, std::span<const JunctionId> s);

class UtilityAnnotatedDb {
 public:
  explicit UtilityAnnotatedDb(SequentialDatabase db);

  const SequentialDatabase& base() const noexcept { return db_; }
  /// Utility of trajectory i, in database order.
  std::uint64_t trajectory_utility(std::size_t i) const { return utility_.at(i); }
  const std::vector<std::uint64_t>& utilities() const noexcept { return utility_; }
  /// Support count of a single junction, 0 if absent.
  std::uint64_t junction_count(JunctionId j) const;
  std::uint64_t utility(std::span<const JunctionId> s) const;

 private:
  SequentialDatabase db_;
  std::map<JunctionId, std::uint64_t> counts_;
  std::vector<std::uint64_t> utility_;
};

UtilityAnnotatedDb trajectory_utilities(const SequentialDatabase& db);

/// U(t) of trajectory `traj`. Throws ValidationError unless s ≲ t.
std::uint64_t density(const UtilityAnnotatedDb& udb, std::span<const JunctionId> s, std::size_t traj);

struct BenefitReport {
  JunctionSequence sequence;
  std::size_t support = 0;
  std::uint64_t utility = 0;
  std::map<std::size_t, std::uint64_t> densities;  // trajectory index -> U(t)
  double benefit = 0;
  double ratio = 0;
};

/// Sum of densities over the support count, plus the sum of U(s)/d_t(s).
/// Throws ValidationError when `s` has zero support.
BenefitReport benefit_report(const UtilityAnnotatedDb& udb, std::span<const JunctionId> s);
double benefit(const UtilityAnnotatedDb& udb, std::span<const JunctionId> s);

/// |s| / Bf(s). Throws ValidationError when Bf(s) < minbenefit.
double ratio(const UtilityAnnotatedDb& udb, std::span<const JunctionId> s, double minbenefit);

/// Members of `fs` with benefit >= minbenefit, ascending by ratio, then
/// length, then lexicographically.
std::vector<BenefitReport> mipa(const UtilityAnnotatedDb& udb, const PatternSet& fs, double minbenefit);

struct MipResult {
  MinSup minsup;
  double minbenefit = 0;
  std::vector<BenefitReport> mip;
  std::optional<PlacementPlan> plan;  // absent when `mip` is empty
};

MipResult mip_placement(const SequentialDatabase& db, const MinSup& minsup, double minbenefit,
                        const TransversalLimits& limits = {});

nlohmann::json mip_to_json(const MipResult& r);

}  // namespace rsu

#endif  // RSUPLAN_MIP_HPP_
