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

#include "rsuplan/distance_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "rsuplan/errors.hpp"
#include "text_util.hpp"

namespace rsu {

DistanceMatrix::DistanceMatrix(std::vector<JunctionId> ids, std::vector<double> values)
    : ids_(std::move(ids)), values_(std::move(values)) {
  const std::size_t n = ids_.size();
  if (values_.size() != n * n)
    throw ValidationError("distance matrix: expected " + std::to_string(n * n) + " entries, got " +
                          std::to_string(values_.size()));
  sorted_pos_.resize(n);
  std::iota(sorted_pos_.begin(), sorted_pos_.end(), std::size_t{0});
  std::sort(sorted_pos_.begin(), sorted_pos_.end(), [&](std::size_t a, std::size_t b) { return ids_[a] < ids_[b]; });
  for (auto p : sorted_pos_) sorted_ids_.push_back(ids_[p]);
  if (std::adjacent_find(sorted_ids_.begin(), sorted_ids_.end()) != sorted_ids_.end())
    throw ValidationError("distance matrix: repeated junction id");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double v = values_[i * n + k];
      if (std::isnan(v) || v < 0) throw ValidationError("distance matrix: entries must be non-negative");
      if (i == k && v != 0) throw ValidationError("distance matrix: diagonal must be zero");
    }
  }
}

bool DistanceMatrix::contains(JunctionId j) const noexcept {
  return std::binary_search(sorted_ids_.begin(), sorted_ids_.end(), j);
}

std::size_t DistanceMatrix::index_of(JunctionId j) const {
  const auto it = std::lower_bound(sorted_ids_.begin(), sorted_ids_.end(), j);
  if (it == sorted_ids_.end() || *it != j)
    throw ValidationError("distance matrix has no row for junction " + std::to_string(j));
  return sorted_pos_[static_cast<std::size_t>(it - sorted_ids_.begin())];
}

double DistanceMatrix::at(JunctionId from, JunctionId to) const {
  return values_[index_of(from) * ids_.size() + index_of(to)];
}

void DistanceMatrix::write(std::ostream& out) const {
  const std::size_t n = ids_.size();
  out << n;
  for (JunctionId j : ids_) out << ' ' << j;
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k) out << ' ';
      const double v = values_[i * n + k];
      if (std::isinf(v)) {
        out << "inf";
      } else {
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof buf, v);
        out.write(buf, res.ptr - buf);
      }
    }
    out << '\n';
  }
}

DistanceMatrix load_distance_matrix(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<JunctionId> ids;
  std::vector<double> values;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto toks = detail::split_ws(body);
    if (!have_header) {
      if (!detail::parse_uint(toks[0], n) || n == 0) throw ParseError("expected matrix size", lineno);
      if (toks.size() == 1) {
        for (std::size_t i = 1; i <= n; ++i) ids.push_back(static_cast<JunctionId>(i));
      } else if (toks.size() == n + 1) {
        for (std::size_t i = 1; i <= n; ++i) {
          JunctionId j = 0;
          if (!detail::parse_uint(toks[i], j)) throw ParseError("invalid junction id '" + std::string(toks[i]) + "'", lineno);
          ids.push_back(j);
        }
      } else {
        throw ParseError("header must be 'n' or 'n' followed by n junction ids", lineno);
      }
      have_header = true;
      continue;
    }
    if (values.size() == n * n) throw ParseError("more than " + std::to_string(n) + " rows", lineno);
    if (toks.size() != n)
      throw ParseError("expected " + std::to_string(n) + " entries, got " + std::to_string(toks.size()), lineno);
    for (auto tok : toks) {
      double v = 0;
      if (!detail::parse_real(tok, v)) throw ParseError("invalid distance '" + std::string(tok) + "'", lineno);
      values.push_back(v);
    }
  }
  if (!have_header) throw ParseError("empty distance matrix");
  if (values.size() != n * n) throw ParseError("expected " + std::to_string(n) + " rows");
  try {
    return DistanceMatrix(std::move(ids), std::move(values));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

DistanceMatrix load_distance_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open distance matrix " + path.string());
  return load_distance_matrix(in);
}

}  // namespace rsu
