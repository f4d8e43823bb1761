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

#ifndef RSUPLAN_PATTERN_MINING_HPP_
#define RSUPLAN_PATTERN_MINING_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rsuplan/trajectory_db.hpp"

namespace rsu {

/// Support threshold as an exact fraction of the database size.
class MinSup {
 public:
  /// Throws ValidationError unless 0 < numerator/denominator <= 1.
  MinSup(std::uint64_t numerator, std::uint64_t denominator);

  /// Accepts `a/b` or a decimal in (0, 1]. Decimals are converted to the
  /// nearest fraction with denominator 10^k for k up to 9.
  static MinSup parse(std::string_view text);

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }

  /// count/total >= numerator/denominator, compared on integers.
  bool admits(const SupportValue& s) const noexcept;

  std::string str() const;

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

struct Pattern {
  JunctionSequence sequence;
  SupportValue support;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

enum class PatternKind { FS, MFS, RS, MRS, AP };

std::string_view to_string(PatternKind kind);

struct PatternSet {
  PatternKind kind = PatternKind::FS;
  std::vector<Pattern> patterns;

  std::size_t size() const noexcept { return patterns.size(); }
  bool empty() const noexcept { return patterns.empty(); }
  bool contains(std::span<const JunctionId> s) const;
  std::vector<JunctionSequence> sequences() const;
};

/// Canonical order: shorter first, then lexicographic on junction ids.
bool canonical_less(std::span<const JunctionId> a, std::span<const JunctionId> b) noexcept;
void canonical_sort(std::vector<Pattern>& patterns);

/// Every non-empty sequence whose support reaches `minsup`, each once, in
/// canonical order. Single-item PrefixSpan over pseudo-projected suffixes.
PatternSet mine_frequent(const SequentialDatabase& db, const MinSup& minsup);

/// Keeps the members of `fs` that are not an ordered subsequence of another
/// member. `fs` must be sorted by non-decreasing length.
PatternSet maximal_frequent(const PatternSet& fs);

/// The rare border: every sequence of length <= `max_len` whose support is
/// below `minsup` and whose prefix without the last junction is frequent
/// (for length 1, every junction of the universe). Zero-support children
/// are included but never grown. Canonical order.
PatternSet mine_rare(const SequentialDatabase& db, const MinSup& minsup, std::size_t max_len);

/// Keeps the members of `rs` that contain no previously kept member as an
/// ordered subsequence. `rs` must be sorted by non-decreasing length.
PatternSet minimal_rare(const PatternSet& rs);

/// Drops zero-support and single-junction members.
PatternSet prune_amp(const PatternSet& mrs);

/// Default rare-enumeration depth: one past the longest trajectory, which is
/// the deepest level a minimal rare sequence can reach.
std::size_t default_max_len(const SequentialDatabase& db) noexcept;

/// Every intermediate set of the all-mobility-patterns pipeline.
struct AmpResult {
  PatternSet fs;
  PatternSet mfs;
  PatternSet rs;
  PatternSet mrs;         // unpruned
  PatternSet mrs_pruned;  // prune_amp(mrs)
  PatternSet ap;          // mfs ∪ mrs_pruned
};

AmpResult run_amp(const SequentialDatabase& db, const MinSup& minsup, std::size_t max_len);

/// mfs ∪ pruned mrs, duplicates removed, canonical order.
PatternSet amp(const SequentialDatabase& db, const MinSup& minsup, std::size_t max_len);

/// One pattern per line: `<j1 j2 ...> count/total`.
void write_patterns(std::ostream& out, const PatternSet& set);
nlohmann::json patterns_to_json(const PatternSet& set);

}  // namespace rsu

#endif  // RSUPLAN_PATTERN_MINING_HPP_
