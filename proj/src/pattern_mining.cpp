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

#include "rsuplan/pattern_mining.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include <nlohmann/json.hpp>

#include "rsuplan/errors.hpp"
#include "text_util.hpp"

namespace rsu {

// ---------------------------------------------------------------------------
// MinSup

MinSup::MinSup(std::uint64_t numerator, std::uint64_t denominator)
    : num_(numerator), den_(denominator) {
  if (den_ == 0 || num_ == 0 || num_ > den_)
    throw ValidationError("minsup must satisfy 0 < a/b <= 1, got " + std::to_string(num_) + "/" +
                          std::to_string(den_));
}

MinSup MinSup::parse(std::string_view text) {
  text = detail::trim(text);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    std::uint64_t a = 0, b = 0;
    if (!detail::parse_uint(detail::trim(text.substr(0, slash)), a) ||
        !detail::parse_uint(detail::trim(text.substr(slash + 1)), b))
      throw ValidationError("invalid minsup '" + std::string(text) + "'");
    return MinSup(a, b);
  }
  // Decimal: "1", "0.25", ".5"
  const auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || frac.size() > 9)
    throw ValidationError("invalid minsup '" + std::string(text) + "'");
  std::uint64_t w = 0, f = 0;
  if ((!whole.empty() && !detail::parse_uint(whole, w)) || (!frac.empty() && !detail::parse_uint(frac, f)))
    throw ValidationError("invalid minsup '" + std::string(text) + "'");
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  if (w > 1) throw ValidationError("minsup must not exceed 1, got '" + std::string(text) + "'");
  std::uint64_t num = w * den + f;
  const std::uint64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return MinSup(num, den);
}

bool MinSup::admits(const SupportValue& s) const noexcept {
  // count/total >= num/den  <=>  count*den >= num*total
  return static_cast<unsigned __int128>(s.count) * den_ >= static_cast<unsigned __int128>(num_) * s.total;
}

std::string MinSup::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

// ---------------------------------------------------------------------------
// PatternSet helpers

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::FS: return "FS";
    case PatternKind::MFS: return "MFS";
    case PatternKind::RS: return "RS";
    case PatternKind::MRS: return "MRS";
    case PatternKind::AP: return "AP";
  }
  return "?";
}

bool PatternSet::contains(std::span<const JunctionId> s) const {
  return std::any_of(patterns.begin(), patterns.end(),
                     [&](const Pattern& p) { return std::equal(p.sequence.begin(), p.sequence.end(), s.begin(), s.end()); });
}

std::vector<JunctionSequence> PatternSet::sequences() const {
  std::vector<JunctionSequence> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) out.push_back(p.sequence);
  return out;
}

bool canonical_less(std::span<const JunctionId> a, std::span<const JunctionId> b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void canonical_sort(std::vector<Pattern>& patterns) {
  std::sort(patterns.begin(), patterns.end(),
            [](const Pattern& x, const Pattern& y) { return canonical_less(x.sequence, y.sequence); });
}

namespace {

void require_sorted_by_length(const PatternSet& set, const char* who) {
  for (std::size_t i = 1; i < set.patterns.size(); ++i) {
    if (set.patterns[i - 1].sequence.size() > set.patterns[i].sequence.size())
      throw ValidationError(std::string(who) + ": input must be sorted by sequence length");
  }
}

// Pseudo-projected suffix: trajectory index and the first position still
// available for matching.
struct Projection {
  std::uint32_t traj;
  std::uint32_t start;
};

// Depth-first growth of single-junction sequences. Trajectories are recoded
// to dense universe indices so per-level counting is a flat array.
class PrefixGrowth {
 public:
  PrefixGrowth(const SequentialDatabase& db, const MinSup& minsup)
      : db_(db), minsup_(minsup), universe_(db.universe()) {
    coded_.reserve(db.size());
    for (const auto& t : db.trajectories()) {
      std::vector<std::uint32_t> row;
      row.reserve(t.path.size());
      for (JunctionId j : t.path) {
        const auto it = std::lower_bound(universe_.begin(), universe_.end(), j);
        row.push_back(static_cast<std::uint32_t>(it - universe_.begin()));
      }
      coded_.push_back(std::move(row));
    }
  }

  // `rare_max_len == 0` disables rare emission.
  void run(std::vector<Pattern>* frequent, std::vector<Pattern>* rare, std::size_t rare_max_len) {
    frequent_ = frequent;
    rare_ = rare;
    rare_max_len_ = rare_max_len;
    std::vector<Projection> root;
    root.reserve(coded_.size());
    for (std::uint32_t t = 0; t < coded_.size(); ++t) root.push_back({t, 0});
    JunctionSequence prefix;
    grow(prefix, root);
  }

 private:
  void grow(JunctionSequence& prefix, const std::vector<Projection>& proj) {
    const std::size_t n = universe_.size();
    std::vector<std::size_t> counts(n, 0);
    std::vector<std::uint32_t> stamp(n, UINT32_MAX);
    for (std::uint32_t e = 0; e < proj.size(); ++e) {
      const auto& row = coded_[proj[e].traj];
      for (std::size_t k = proj[e].start; k < row.size(); ++k) {
        if (stamp[row[k]] != e) {
          stamp[row[k]] = e;
          ++counts[row[k]];
        }
      }
    }

    const std::size_t child_len = prefix.size() + 1;
    for (std::uint32_t u = 0; u < n; ++u) {
      const SupportValue sv{counts[u], db_.size()};
      prefix.push_back(universe_[u]);
      if (minsup_.admits(sv)) {
        if (frequent_) frequent_->push_back({prefix, sv});
        // Rare-only runs stop growing once children would exceed the bound.
        if (frequent_ || child_len < rare_max_len_) grow(prefix, project(proj, u));
      } else if (rare_ && child_len <= rare_max_len_) {
        rare_->push_back({prefix, sv});
      }
      prefix.pop_back();
    }
  }

  std::vector<Projection> project(const std::vector<Projection>& proj, std::uint32_t u) const {
    std::vector<Projection> next;
    for (const auto& p : proj) {
      const auto& row = coded_[p.traj];
      for (std::size_t k = p.start; k < row.size(); ++k) {
        if (row[k] == u) {
          next.push_back({p.traj, static_cast<std::uint32_t>(k + 1)});
          break;
        }
      }
    }
    return next;
  }

  const SequentialDatabase& db_;
  const MinSup& minsup_;
  const std::vector<JunctionId>& universe_;
  std::vector<std::vector<std::uint32_t>> coded_;
  std::vector<Pattern>* frequent_ = nullptr;
  std::vector<Pattern>* rare_ = nullptr;
  std::size_t rare_max_len_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// Mining

PatternSet mine_frequent(const SequentialDatabase& db, const MinSup& minsup) {
  PatternSet out{PatternKind::FS, {}};
  PrefixGrowth(db, minsup).run(&out.patterns, nullptr, 0);
  canonical_sort(out.patterns);
  return out;
}

PatternSet maximal_frequent(const PatternSet& fs) {
  require_sorted_by_length(fs, "maximal_frequent");
  PatternSet mfs{PatternKind::MFS, {}};
  for (const auto& e : fs.patterns) {
    std::erase_if(mfs.patterns, [&](const Pattern& m) { return is_ordered_subsequence(m.sequence, e.sequence); });
    mfs.patterns.push_back(e);
  }
  canonical_sort(mfs.patterns);
  return mfs;
}

PatternSet mine_rare(const SequentialDatabase& db, const MinSup& minsup, std::size_t max_len) {
  if (max_len == 0) throw ValidationError("max_len must be positive");
  PatternSet out{PatternKind::RS, {}};
  PrefixGrowth(db, minsup).run(nullptr, &out.patterns, max_len);
  canonical_sort(out.patterns);
  return out;
}

PatternSet minimal_rare(const PatternSet& rs) {
  require_sorted_by_length(rs, "minimal_rare");
  PatternSet mrs{PatternKind::MRS, {}};
  for (const auto& e : rs.patterns) {
    const bool dominated = std::any_of(mrs.patterns.begin(), mrs.patterns.end(), [&](const Pattern& m) {
      return is_ordered_subsequence(m.sequence, e.sequence);
    });
    if (!dominated) mrs.patterns.push_back(e);
  }
  canonical_sort(mrs.patterns);
  return mrs;
}

PatternSet prune_amp(const PatternSet& mrs) {
  PatternSet out{mrs.kind, {}};
  for (const auto& p : mrs.patterns) {
    if (p.support.count > 0 && p.sequence.size() > 1) out.patterns.push_back(p);
  }
  return out;
}

std::size_t default_max_len(const SequentialDatabase& db) noexcept { return db.longest_path() + 1; }

AmpResult run_amp(const SequentialDatabase& db, const MinSup& minsup, std::size_t max_len) {
  AmpResult r;
  r.fs = mine_frequent(db, minsup);
  r.mfs = maximal_frequent(r.fs);
  r.rs = mine_rare(db, minsup, max_len);
  r.mrs = minimal_rare(r.rs);
  r.mrs_pruned = prune_amp(r.mrs);
  r.ap.kind = PatternKind::AP;
  r.ap.patterns = r.mfs.patterns;
  for (const auto& p : r.mrs_pruned.patterns) {
    if (!r.ap.contains(p.sequence)) r.ap.patterns.push_back(p);
  }
  canonical_sort(r.ap.patterns);
  return r;
}

PatternSet amp(const SequentialDatabase& db, const MinSup& minsup, std::size_t max_len) {
  return run_amp(db, minsup, max_len).ap;
}

// ---------------------------------------------------------------------------
// Serialization

void write_patterns(std::ostream& out, const PatternSet& set) {
  for (const auto& p : set.patterns) {
    out << format_sequence(p.sequence) << ' ' << p.support.count << '/' << p.support.total << '\n';
  }
}

nlohmann::json patterns_to_json(const PatternSet& set) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : set.patterns) {
    arr.push_back({{"sequence", p.sequence}, {"count", p.support.count}, {"total", p.support.total}});
  }
  return {{"kind", std::string(to_string(set.kind))}, {"patterns", std::move(arr)}};
}

}  // namespace rsu
