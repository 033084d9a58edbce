// Copyright 2026 The antimagic Authors
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


#ifndef ANTIMAGIC_TESTS_ORACLES_HPP_
#define ANTIMAGIC_TESTS_ORACLES_HPP_

// Slow, obviously-correct reference implementations. They share nothing with
// the library beyond its plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/liang.hpp"
#include "antimagic/trails.hpp"

namespace oracle {

using antimagic::EdgeId;
using antimagic::Graph;
using antimagic::NodeId;

inline std::vector<std::int64_t> vertex_sums(const Graph& g,
                                             const std::vector<std::int64_t>& f) {
  std::vector<std::int64_t> sums(g.node_count(), 0);
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    sums[edges[e].u] += f[e];
    sums[edges[e].v] += f[e];
  }
  return sums;
}

inline bool is_antimagic(const Graph& g, const std::vector<std::int64_t>& f) {
  const std::size_t m = g.edge_count();
  if (f.size() != m) return false;
  std::vector<std::int64_t> sorted = f;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < m; ++i) {
    if (sorted[i] != static_cast<std::int64_t>(i + 1)) return false;
  }
  const auto sums = vertex_sums(g, f);
  for (std::size_t a = 0; a < sums.size(); ++a) {
    for (std::size_t b = a + 1; b < sums.size(); ++b) {
      if (sums[a] == sums[b]) return false;
    }
  }
  return true;
}

// Distances by repeated relaxation over the edge list until nothing changes.
inline std::vector<std::size_t> distances(const Graph& g, NodeId root) {
  const std::size_t inf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> d(g.node_count(), inf);
  d[root] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : g.edges()) {
      for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        if (d[a] != inf && d[a] + 1 < d[b]) {
          d[b] = d[a] + 1;
          changed = true;
        }
      }
    }
  }
  return d;
}

// First antimagic labeling in lexicographic order, by recursive extension.
inline std::optional<std::vector<std::int64_t>> first_antimagic(const Graph& g) {
  const std::size_t m = g.edge_count();
  std::vector<std::int64_t> f(m, 0);
  std::vector<bool> used(m + 1, false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == m) return is_antimagic(g, f);
    for (std::int64_t x = 1; x <= static_cast<std::int64_t>(m); ++x) {
      if (used[x]) continue;
      used[x] = true;
      f[i] = x;
      if (go(i + 1)) return true;
      used[x] = false;
    }
    return false;
  };
  if (go(0)) return f;
  return std::nullopt;
}

// Brute-force check that `trails` are open, edge-disjoint, cover `edges`
// exactly, and use consecutive edges that really meet.
inline bool is_open_trail_partition(const std::vector<antimagic::TrailEdge>& edges,
                                    const std::vector<antimagic::Trail>& trails) {
  std::map<EdgeId, std::pair<NodeId, NodeId>> by_id;
  for (const auto& e : edges) by_id[e.id] = {e.u, e.v};
  std::multiset<EdgeId> used;
  for (const auto& t : trails) {
    if (t.edges.empty() || t.nodes.size() != t.edges.size() + 1) return false;
    if (t.nodes.front() == t.nodes.back()) return false;
    for (std::size_t j = 0; j < t.edges.size(); ++j) {
      auto it = by_id.find(t.edges[j]);
      if (it == by_id.end()) return false;
      const auto [a, b] = it->second;
      const NodeId x = t.nodes[j], y = t.nodes[j + 1];
      if (!((a == x && b == y) || (a == y && b == x))) return false;
      used.insert(t.edges[j]);
    }
  }
  if (used.size() != edges.size()) return false;
  for (const auto& e : edges) {
    if (used.count(e.id) != 1) return false;
  }
  return true;
}

// Exhaustive Liang check. Enumerates every node-disjoint link family; the
// degree-3 T nodes left uncovered must then be saturated by some matching,
// which is found by trying every injective assignment to S neighbors.
inline bool liang_exists(const antimagic::LiangInstance& inst, bool strict) {
  struct Link { std::uint32_t u, v, w; };
  std::vector<Link> all;
  for (std::uint32_t v = 0; v < inst.t_count(); ++v) {
    const auto& nb = inst.t_neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) all.push_back({nb[a], v, nb[b]});
    }
  }
  std::vector<std::uint32_t> targets;
  for (std::uint32_t t = 0; t < inst.t_count(); ++t) {
    if (inst.t_neighbors(t).size() == 3) targets.push_back(t);
  }
  std::vector<bool> s_on_link(inst.s_count(), false), t_on_link(inst.t_count(), false);

  const auto matchable = [&]() {
    std::vector<std::uint32_t> need;
    for (auto t : targets) {
      if (!t_on_link[t]) need.push_back(t);
    }
    std::vector<bool> s_used(inst.s_count(), false);
    std::function<bool(std::size_t)> assign = [&](std::size_t i) {
      if (i == need.size()) return true;
      for (auto s : inst.t_neighbors(need[i])) {
        if (s_used[s] || (strict && s_on_link[s])) continue;
        s_used[s] = true;
        if (assign(i + 1)) return true;
        s_used[s] = false;
      }
      return false;
    };
    return assign(0);
  };

  std::function<bool(std::size_t)> choose = [&](std::size_t i) {
    if (i == all.size()) return matchable();
    if (choose(i + 1)) return true;
    const Link& l = all[i];
    if (s_on_link[l.u] || s_on_link[l.w] || t_on_link[l.v]) return false;
    s_on_link[l.u] = s_on_link[l.w] = t_on_link[l.v] = true;
    const bool ok = choose(i + 1);
    s_on_link[l.u] = s_on_link[l.w] = t_on_link[l.v] = false;
    return ok;
  };
  return choose(0);
}

}  // namespace oracle

#endif  // ANTIMAGIC_TESTS_ORACLES_HPP_
