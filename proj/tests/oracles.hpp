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

// Exhaustive reference implementations. Deliberately naive and independent of
// the library code they check.

#ifndef RSUPLAN_TESTS_ORACLES_HPP_
#define RSUPLAN_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Seq = std::vector<std::uint32_t>;
using Db = std::vector<Seq>;

// Recursive containment: try every position for the first needle element.
inline bool contains(const Seq& hay, const Seq& needle, std::size_t h = 0, std::size_t n = 0) {
  if (n == needle.size()) return true;
  for (std::size_t i = h; i < hay.size(); ++i) {
    if (hay[i] == needle[n] && contains(hay, needle, i + 1, n + 1)) return true;
  }
  return false;
}

inline std::size_t support(const Db& db, const Seq& s) {
  std::size_t c = 0;
  for (const auto& t : db) c += contains(t, s) ? 1 : 0;
  return c;
}

inline bool frequent(std::size_t count, std::size_t total, std::uint64_t num, std::uint64_t den) {
  return static_cast<unsigned __int128>(count) * den >= static_cast<unsigned __int128>(num) * total;
}

// Every non-empty subsequence of `s`, via bitmasks.
inline std::set<Seq> subsequences(const Seq& s) {
  std::set<Seq> out;
  for (std::uint32_t m = 1; m < (1u << s.size()); ++m) {
    Seq x;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (m & (1u << i)) x.push_back(s[i]);
    }
    out.insert(x);
  }
  return out;
}

inline std::set<Seq> strict_subsequences(const Seq& s) {
  auto all = subsequences(s);
  all.erase(s);
  return all;
}

inline std::vector<std::uint32_t> universe(const Db& db) {
  std::set<std::uint32_t> u;
  for (const auto& t : db) u.insert(t.begin(), t.end());
  return {u.begin(), u.end()};
}

// A frequent sequence is a subsequence of at least one trajectory.
inline std::map<Seq, std::size_t> frequent_set(const Db& db, std::uint64_t num, std::uint64_t den) {
  std::set<Seq> cand;
  for (const auto& t : db) {
    auto s = subsequences(t);
    cand.insert(s.begin(), s.end());
  }
  std::map<Seq, std::size_t> out;
  for (const auto& c : cand) {
    const auto sup = support(db, c);
    if (frequent(sup, db.size(), num, den)) out[c] = sup;
  }
  return out;
}

inline std::set<Seq> maximal(const std::map<Seq, std::size_t>& fs) {
  std::set<Seq> out;
  for (const auto& [a, sa] : fs) {
    bool dominated = false;
    for (const auto& [b, sb] : fs) {
      if (a != b && contains(b, a)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(a);
  }
  return out;
}

// Rare sequences up to max_len whose last-junction-dropped prefix is frequent
// (every universe junction at length 1).
inline std::map<Seq, std::size_t> rare_border(const Db& db, std::uint64_t num, std::uint64_t den,
                                              std::size_t max_len) {
  const auto fs = frequent_set(db, num, den);
  const auto u = universe(db);
  std::map<Seq, std::size_t> out;
  for (auto j : u) {
    const auto sup = support(db, {j});
    if (!frequent(sup, db.size(), num, den)) out[{j}] = sup;
  }
  for (const auto& [f, sf] : fs) {
    if (f.size() + 1 > max_len) continue;
    for (auto j : u) {
      Seq c = f;
      c.push_back(j);
      const auto sup = support(db, c);
      if (!frequent(sup, db.size(), num, den)) out[c] = sup;
    }
  }
  return out;
}

// Rare sequences whose every strict subsequence is frequent. Any such
// sequence longer than one extends a frequent sequence by one junction.
inline std::set<Seq> minimal_rare(const Db& db, std::uint64_t num, std::uint64_t den) {
  const auto fs = frequent_set(db, num, den);
  const auto u = universe(db);
  std::set<Seq> cand;
  for (auto j : u) cand.insert({j});
  for (const auto& [f, sf] : fs) {
    for (auto j : u) {
      Seq c = f;
      c.push_back(j);
      cand.insert(c);
    }
  }
  std::set<Seq> out;
  for (const auto& c : cand) {
    if (frequent(support(db, c), db.size(), num, den)) continue;
    const auto subs = strict_subsequences(c);
    if (std::all_of(subs.begin(), subs.end(), [&](const Seq& s) { return fs.count(s) != 0; })) out.insert(c);
  }
  return out;
}

// Closed frequent sequences: no frequent strict super-sequence with equal support.
inline std::set<Seq> closed_frequent(const Db& db, std::uint64_t num, std::uint64_t den) {
  const auto fs = frequent_set(db, num, den);
  std::set<Seq> out;
  for (const auto& [a, sa] : fs) {
    bool closed = true;
    for (const auto& [b, sb] : fs) {
      if (a != b && sa == sb && contains(b, a)) {
        closed = false;
        break;
      }
    }
    if (closed) out.insert(a);
  }
  return out;
}

// Minimal hitting sets by scanning the whole power set of `vertices`.
inline std::set<std::vector<std::uint32_t>> minimal_transversals(const std::vector<std::uint32_t>& vertices,
                                                                 const std::vector<std::vector<std::uint32_t>>& edges) {
  const std::size_t n = vertices.size();
  std::vector<std::uint32_t> edge_masks;
  for (const auto& e : edges) {
    std::uint32_t m = 0;
    for (auto v : e) m |= 1u << (std::find(vertices.begin(), vertices.end(), v) - vertices.begin());
    edge_masks.push_back(m);
  }
  auto hits = [&](std::uint32_t t) {
    return std::all_of(edge_masks.begin(), edge_masks.end(), [&](std::uint32_t e) { return (e & t) != 0; });
  };
  std::set<std::vector<std::uint32_t>> out;
  for (std::uint32_t t = 0; t < (1u << n); ++t) {
    if (!hits(t)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      if ((t & (1u << i)) && hits(t & ~(1u << i))) minimal = false;
    }
    if (!minimal) continue;
    std::vector<std::uint32_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (t & (1u << i)) s.push_back(vertices[i]);
    }
    std::sort(s.begin(), s.end());
    out.insert(s);
  }
  return out;
}

struct Arc {
  std::size_t from, to;
  double length;
};

// Shortest walk length by enumerating every simple path from `src`.
inline std::vector<double> all_simple_path_minima(std::size_t n, const std::vector<Arc>& arcs, std::size_t src) {
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<bool> on(n, false);
  std::function<void(std::size_t, double)> dfs = [&](std::size_t v, double d) {
    best[v] = std::min(best[v], d);
    on[v] = true;
    for (const auto& a : arcs) {
      if (a.from == v && !on[a.to]) dfs(a.to, d + a.length);
    }
    on[v] = false;
  };
  dfs(src, 0);
  return best;
}

inline Db random_db(std::mt19937& rng, std::size_t max_junctions, std::size_t max_trajectories, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> nj(1, max_junctions), nt(1, max_trajectories), nl(1, max_len);
  const std::size_t junctions = nj(rng);
  std::uniform_int_distribution<std::uint32_t> pick(1, static_cast<std::uint32_t>(junctions));
  Db db(nt(rng));
  for (auto& t : db) {
    t.resize(nl(rng));
    for (auto& j : t) j = pick(rng);
  }
  return db;
}

}  // namespace oracle

#endif  // RSUPLAN_TESTS_ORACLES_HPP_
