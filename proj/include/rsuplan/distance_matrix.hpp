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

#ifndef RSUPLAN_DISTANCE_MATRIX_HPP_
#define RSUPLAN_DISTANCE_MATRIX_HPP_

#include <filesystem>
#include <iosfwd>
#include <limits>
#include <vector>

#include "rsuplan/trajectory_db.hpp"

namespace rsu {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Square matrix of shortest-path distances in meters, rows and columns
/// labelled by junction id. Symmetry is not required.
class DistanceMatrix {
 public:
  /// `values` is row-major, ids.size()^2 long. Throws ValidationError on a
  /// size mismatch, repeated id, non-zero diagonal, negative or NaN entry.
  DistanceMatrix(std::vector<JunctionId> ids, std::vector<double> values);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<JunctionId>& ids() const noexcept { return ids_; }
  bool contains(JunctionId j) const noexcept;

  /// Row `from`, column `to`. Throws ValidationError for unknown ids.
  double at(JunctionId from, JunctionId to) const;

  /// Header line `n` (ids 1..n) or `n id_1 ... id_n`, then n rows of n reals.
  /// `inf` marks unreachable pairs.
  void write(std::ostream& out) const;

 private:
  std::size_t index_of(JunctionId j) const;

  std::vector<JunctionId> ids_;
  std::vector<JunctionId> sorted_ids_;
  std::vector<std::size_t> sorted_pos_;
  std::vector<double> values_;
};

DistanceMatrix load_distance_matrix(std::istream& in);
DistanceMatrix load_distance_matrix_file(const std::filesystem::path& path);

}  // namespace rsu

#endif  // RSUPLAN_DISTANCE_MATRIX_HPP_
