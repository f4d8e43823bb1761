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

#include "rsuplan/trajectory_db.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "rsuplan/errors.hpp"
#include "text_util.hpp"

namespace rsu {

bool is_ordered_subsequence(std::span<const JunctionId> needle,
                            std::span<const JunctionId> haystack) noexcept {
  std::size_t i = 0;
  for (std::size_t k = 0; k < haystack.size() && i < needle.size(); ++k) {
    if (haystack[k] == needle[i]) ++i;
  }
  return i == needle.size();
}

SequentialDatabase::SequentialDatabase(std::vector<Trajectory> trajectories)
    : trajectories_(std::move(trajectories)) {
  if (trajectories_.empty()) throw ValidationError("empty database");
  std::unordered_set<std::string> ids;
  for (const auto& t : trajectories_) {
    if (t.path.empty()) throw ValidationError("trajectory '" + t.vehicle_id + "' has an empty path");
    if (!ids.insert(t.vehicle_id).second)
      throw ValidationError("duplicate vehicle id '" + t.vehicle_id + "'");
    universe_.insert(universe_.end(), t.path.begin(), t.path.end());
    longest_ = std::max(longest_, t.path.size());
  }
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
}

bool SequentialDatabase::contains_junction(JunctionId j) const noexcept {
  return std::binary_search(universe_.begin(), universe_.end(), j);
}

SupportValue SequentialDatabase::support(std::span<const JunctionId> s) const {
  if (s.empty()) throw ValidationError("support of the empty sequence is undefined");
  SupportValue v{0, trajectories_.size()};
  for (const auto& t : trajectories_) {
    if (is_ordered_subsequence(s, t.path)) ++v.count;
  }
  return v;
}

void SequentialDatabase::write(std::ostream& out) const {
  for (const auto& t : trajectories_) {
    out << t.vehicle_id << ':';
    for (JunctionId j : t.path) out << ' ' << j;
    out << '\n';
  }
}

SequentialDatabase load_trajectories(std::istream& in) {
  std::vector<Trajectory> out;
  std::unordered_map<std::string, std::size_t> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;

    const auto colon = body.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected '<vehicle_id>: <junctions>'", lineno);
    Trajectory t;
    t.vehicle_id = std::string(detail::trim(body.substr(0, colon)));
    if (t.vehicle_id.empty()) throw ParseError("missing vehicle id", lineno);
    for (std::string_view tok : detail::split_ws(body.substr(colon + 1))) {
      JunctionId j = 0;
      if (!detail::parse_uint(tok, j)) throw ParseError("invalid junction id '" + std::string(tok) + "'", lineno);
      t.path.push_back(j);
    }
    if (t.path.empty()) throw ParseError("trajectory '" + t.vehicle_id + "' has no junctions", lineno);
    if (auto [it, fresh] = seen.emplace(t.vehicle_id, lineno); !fresh) {
      throw ParseError("duplicate vehicle id '" + t.vehicle_id + "' (first seen on line " +
                           std::to_string(it->second) + ")",
                       lineno);
    }
    out.push_back(std::move(t));
  }
  if (in.bad()) throw IoError("read failure while loading trajectories");
  if (out.empty()) throw ParseError("empty database");
  return SequentialDatabase(std::move(out));
}

SequentialDatabase load_trajectories_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open trajectory file " + path.string());
  return load_trajectories(in);
}

std::string format_sequence(std::span<const JunctionId> s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  out += '>';
  return out;
}

}  // namespace rsu
