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

// Worked-example inputs shared by the test binaries.

#ifndef RSUPLAN_TESTS_FIXTURES_HPP_
#define RSUPLAN_TESTS_FIXTURES_HPP_

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rsuplan/distance_matrix.hpp"
#include "rsuplan/evaluator.hpp"
#include "rsuplan/pattern_mining.hpp"
#include "rsuplan/trajectory_db.hpp"

namespace fixtures {

using rsu::JunctionSequence;
using SeqSet = std::set<JunctionSequence>;

inline rsu::SequentialDatabase db_from(const std::vector<JunctionSequence>& paths, const std::string& prefix = "v",
                                       int first = 1) {
  std::vector<rsu::Trajectory> ts;
  for (std::size_t i = 0; i < paths.size(); ++i)
    ts.push_back({prefix + std::to_string(first + static_cast<int>(i)), paths[i]});
  return rsu::SequentialDatabase(std::move(ts));
}

// Eight vehicles over junctions 1..7.
inline rsu::SequentialDatabase table_d() {
  return db_from({{2, 6, 7, 1}, {3, 6, 4}, {5, 3, 7}, {6, 5}, {2, 6, 7}, {3, 6}, {6, 5, 3, 7}, {6, 3}});
}

// Seven trajectories t0..t6 used by the utility examples.
inline rsu::SequentialDatabase table_dt() {
  return db_from({{6, 5, 3}, {6, 5, 3, 7}, {5, 3, 7}, {3, 6}, {3, 6, 4}, {2, 6, 7}, {2, 6, 7, 1}}, "t", 0);
}

inline const SeqSet& d_frequent() {
  static const SeqSet s{{2}, {3}, {5}, {6}, {7}, {2, 6}, {2, 7}, {3, 6}, {3, 7}, {5, 3},
                        {5, 7}, {6, 3}, {6, 5}, {6, 7}, {2, 6, 7}, {5, 3, 7}};
  return s;
}

inline const SeqSet& d_maximal_frequent() {
  static const SeqSet s{{6, 5}, {3, 6}, {6, 3}, {2, 6, 7}, {5, 3, 7}};
  return s;
}

// The minimal rare set as listed for the budget-constrained example.
inline const SeqSet& ch4_minimal_rare() {
  static const SeqSet s{{1},    {4},    {2, 3}, {2, 5}, {3, 2},    {3, 5},    {5, 6},    {5, 2},
                        {6, 2}, {7, 6}, {7, 5}, {7, 3}, {3, 6, 7}, {6, 5, 7}, {6, 5, 3}, {6, 3, 7}};
  return s;
}

inline rsu::PatternSet to_pattern_set(const SeqSet& s, rsu::PatternKind kind) {
  rsu::PatternSet out{kind, {}};
  for (const auto& seq : s) out.patterns.push_back({seq, {}});
  rsu::canonical_sort(out.patterns);
  return out;
}

inline SeqSet as_set(const rsu::PatternSet& p) {
  SeqSet s;
  for (const auto& x : p.patterns) s.insert(x.sequence);
  return s;
}

inline rsu::DistanceMatrix example_dis() {
  std::vector<rsu::JunctionId> ids{1, 2, 3, 4, 5, 6, 7};
  std::vector<double> v{0,   110, 170, 40, 50, 60,  20,  110, 0,  70, 95, 95, 45, 115, 170, 70, 0,
                        190, 110, 90,  150, 40, 95, 190, 0,   90, 90, 60, 60, 95, 110, 90,  0,  50,
                        50,  60,  45,  90,  40, 50, 0,   80,  20, 115, 150, 60, 50, 80, 0};
  return rsu::DistanceMatrix(ids, v);
}

inline rsu::RoadMap example_map() {
  std::istringstream in(R"([junctions]
1 0 0
2 110 -40
3 160 -110
4 -40 -20
5 50 50
6 40 -40
7 20 10
[edges]
1 7 20
2 6 45
2 3 70
3 5 110
3 6 90
4 6 40
5 6 50
6 7 80
3 7 150
)");
  return rsu::load_map(in);
}

}  // namespace fixtures

#endif  // RSUPLAN_TESTS_FIXTURES_HPP_
