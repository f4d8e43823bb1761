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

#ifndef RSUPLAN_TRAJECTORY_DB_HPP_
#define RSUPLAN_TRAJECTORY_DB_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rsu {

using JunctionId = std::uint32_t;

/// Ordered junction list. Order matters and repeats are allowed.
using JunctionSequence = std::vector<JunctionId>;

/// Absolute support count together with the database size it refers to.
/// Threshold comparisons are done on integers, see MinSup::admits().
struct SupportValue {
  std::size_t count = 0;
  std::size_t total = 0;

  double fraction() const noexcept {
    return total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total);
  }

  friend bool operator==(const SupportValue&, const SupportValue&) = default;
};

struct Trajectory {
  std::string vehicle_id;
  JunctionSequence path;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// True iff the elements of `needle` occur in `haystack` in the same relative
/// order, not necessarily contiguously.
bool is_ordered_subsequence(std::span<const JunctionId> needle,
                            std::span<const JunctionId> haystack) noexcept;

/// Immutable collection of trajectories. Every query is const and may be
/// issued from several threads at once.
class SequentialDatabase {
 public:
  /// Throws ValidationError on an empty collection, an empty path, or a
  /// repeated vehicle id.
  explicit SequentialDatabase(std::vector<Trajectory> trajectories);

  const std::vector<Trajectory>& trajectories() const noexcept { return trajectories_; }
  /// Sorted, duplicate-free union of every path.
  const std::vector<JunctionId>& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return trajectories_.size(); }
  std::size_t longest_path() const noexcept { return longest_; }
  bool contains_junction(JunctionId j) const noexcept;

  /// Number of trajectories containing `s` as an ordered subsequence.
  /// Throws ValidationError when `s` is empty.
  SupportValue support(std::span<const JunctionId> s) const;

  /// Writes the database back in the trajectory file dialect.
  void write(std::ostream& out) const;

 private:
  std::vector<Trajectory> trajectories_;
  std::vector<JunctionId> universe_;
  std::size_t longest_ = 0;
};

/// Parses `<vehicle_id>:<junction ids...>` lines. `#` starts a comment line
/// and blank lines are skipped. Errors carry the offending line number.
SequentialDatabase load_trajectories(std::istream& in);
SequentialDatabase load_trajectories_file(const std::filesystem::path& path);

/// Formats a sequence as `<a b c>`.
std::string format_sequence(std::span<const JunctionId> s);

}  // namespace rsu

#endif  // RSUPLAN_TRAJECTORY_DB_HPP_
