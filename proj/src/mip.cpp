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

#include "rsuplan/mip.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rsuplan/errors.hpp"

namespace rsu {

std::uint64_t sequence_utility(const SequentialDatabase& db, std::span<const JunctionId> s) {
  std::uint64_t u = 0;
  for (JunctionId j : s) u += db.support(std::span<const JunctionId>(&j, 1)).count;
  return u;
}

UtilityAnnotatedDb::UtilityAnnotatedDb(SequentialDatabase db) : db_(std::move(db)) {
  for (const auto& t : db_.trajectories()) {
    JunctionSequence seen = t.path;
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (JunctionId j : seen) ++counts_[j];
  }
  utility_.reserve(db_.size());
  for (const auto& t : db_.trajectories()) utility_.push_back(utility(t.path));
}

std::uint64_t UtilityAnnotatedDb::junction_count(JunctionId j) const {
  const auto it = counts_.find(j);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t UtilityAnnotatedDb::utility(std::span<const JunctionId> s) const {
  std::uint64_t u = 0;
  for (JunctionId j : s) u += junction_count(j);
  return u;
}

UtilityAnnotatedDb trajectory_utilities(const SequentialDatabase& db) { return UtilityAnnotatedDb(db); }

std::uint64_t density(const UtilityAnnotatedDb& udb, std::span<const JunctionId> s, std::size_t traj) {
  const auto& ts = udb.base().trajectories();
  if (traj >= ts.size()) throw ValidationError("trajectory index out of range");
  if (!is_ordered_subsequence(s, ts[traj].path))
    throw ValidationError(format_sequence(s) + " is not contained in trajectory " + ts[traj].vehicle_id);
  return udb.trajectory_utility(traj);
}

BenefitReport benefit_report(const UtilityAnnotatedDb& udb, std::span<const JunctionId> s) {
  if (s.empty()) throw ValidationError("benefit of an empty sequence");
  BenefitReport r;
  r.sequence.assign(s.begin(), s.end());
  r.utility = udb.utility(s);
  const auto& ts = udb.base().trajectories();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (is_ordered_subsequence(s, ts[i].path)) r.densities[i] = udb.trajectory_utility(i);
  }
  r.support = r.densities.size();
  if (r.support == 0) throw ValidationError("benefit undefined for " + format_sequence(s) + ": zero support");
  double dens = 0, inv = 0;
  for (const auto& [i, d] : r.densities) {
    dens += static_cast<double>(d);
    inv += static_cast<double>(r.utility) / static_cast<double>(d);
  }
  r.benefit = dens / static_cast<double>(r.support) + inv;
  r.ratio = static_cast<double>(s.size()) / r.benefit;
  return r;
}

double benefit(const UtilityAnnotatedDb& udb, std::span<const JunctionId> s) { return benefit_report(udb, s).benefit; }

double ratio(const UtilityAnnotatedDb& udb, std::span<const JunctionId> s, double minbenefit) {
  const BenefitReport r = benefit_report(udb, s);
  if (r.benefit < minbenefit)
    throw ValidationError("benefit of " + format_sequence(s) + " is below minbenefit");
  return r.ratio;
}

std::vector<BenefitReport> mipa(const UtilityAnnotatedDb& udb, const PatternSet& fs, double minbenefit) {
  if (std::isnan(minbenefit)) throw ValidationError("minbenefit must be a number");
  std::vector<BenefitReport> out;
  for (const auto& p : fs.patterns) {
    BenefitReport r = benefit_report(udb, p.sequence);
    if (r.benefit >= minbenefit) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const BenefitReport& a, const BenefitReport& b) {
    if (a.ratio != b.ratio) return a.ratio < b.ratio;
    return canonical_less(a.sequence, b.sequence);
  });
  return out;
}

MipResult mip_placement(const SequentialDatabase& db, const MinSup& minsup, double minbenefit,
                        const TransversalLimits& limits) {
  const UtilityAnnotatedDb udb(db);
  MipResult r{minsup, minbenefit, mipa(udb, mine_frequent(db, minsup), minbenefit), std::nullopt};
  if (r.mip.empty()) return r;

  PatternSet covered{PatternKind::FS, {}};
  for (const auto& b : r.mip) covered.patterns.push_back({b.sequence, {b.support, db.size()}});
  PlacementPlan plan = cover_patterns(covered, Strategy::Mip, limits);
  plan.parameters["minsup"] = minsup.str();
  std::ostringstream mb;
  mb << minbenefit;
  plan.parameters["minbenefit"] = mb.str();
  r.plan = std::move(plan);
  return r;
}

nlohmann::json mip_to_json(const MipResult& r) {
  nlohmann::json patterns = nlohmann::json::array();
  for (const auto& b : r.mip) {
    nlohmann::json dens = nlohmann::json::object();
    for (const auto& [i, d] : b.densities) dens[std::to_string(i)] = d;
    patterns.push_back({{"sequence", b.sequence},
                        {"support", b.support},
                        {"utility", b.utility},
                        {"densities", std::move(dens)},
                        {"benefit", b.benefit},
                        {"ratio", b.ratio}});
  }
  nlohmann::json j = {{"minsup", r.minsup.str()}, {"minbenefit", r.minbenefit}, {"mip", std::move(patterns)}};
  j["plan"] = r.plan ? plan_to_json(*r.plan) : nlohmann::json(nullptr);
  return j;
}

}  // namespace rsu
