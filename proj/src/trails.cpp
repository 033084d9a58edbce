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

#include "antimagic/trails.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "antimagic/error.hpp"

namespace antimagic {

namespace {

// Dense renumbering of the nodes touched by an edge list, ascending by id.
class LocalIndex {
 public:
  LocalIndex(std::span<const TrailEdge> edges,
             std::span<const NodeId> extra = {}) {
    for (const auto& e : edges) {
      ids_.push_back(e.u);
      ids_.push_back(e.v);
    }
    ids_.insert(ids_.end(), extra.begin(), extra.end());
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::size_t size() const { return ids_.size(); }
  NodeId id(std::size_t local) const { return ids_[local]; }

  std::optional<std::size_t> find(NodeId v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
  }

  std::size_t at(NodeId v) const { return *find(v); }

 private:
  std::vector<NodeId> ids_;
};

}  // namespace

Trail Trail::reversed() const {
  Trail out{nodes, edges};
  std::reverse(out.nodes.begin(), out.nodes.end());
  std::reverse(out.edges.begin(), out.edges.end());
  return out;
}

Trail eulerian_trail(std::span<const TrailEdge> edges, NodeId start) {
  const NodeId start_arr[] = {start};
  const LocalIndex index(edges, start_arr);
  const std::size_t n = index.size();

  // Adjacency per node: positions into `edges`, by ascending edge id.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return edges[a].id < edges[b].id;
  });
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t pos : order) {
    adj[index.at(edges[pos].u)].push_back(pos);
    adj[index.at(edges[pos].v)].push_back(pos);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() % 2 != 0) {
      throw Error(ErrorCode::kOddDegree,
                  "node " + std::to_string(index.id(v)) + " has odd degree");
    }
  }

  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> cursor(n, 0);
  struct Frame {
    std::size_t node;
    std::optional<std::size_t> via;
  };
  std::vector<Frame> stack{{index.at(start), std::nullopt}};
  std::vector<Frame> popped;
  popped.reserve(edges.size() + 1);
  while (!stack.empty()) {
    const std::size_t v = stack.back().node;
    auto& cur = cursor[v];
    while (cur < adj[v].size() && used[adj[v][cur]]) ++cur;
    if (cur == adj[v].size()) {
      popped.push_back(stack.back());
      stack.pop_back();
      continue;
    }
    const std::size_t pos = adj[v][cur];
    used[pos] = true;
    const std::size_t a = index.at(edges[pos].u);
    const std::size_t b = index.at(edges[pos].v);
    stack.push_back({a == v ? b : a, pos});
  }
  if (popped.size() != edges.size() + 1) {
    throw Error(ErrorCode::kDisconnected,
                "edge set is not connected from node " + std::to_string(start));
  }

  Trail out;
  out.nodes.reserve(popped.size());
  out.edges.reserve(edges.size());
  for (auto it = popped.rbegin(); it != popped.rend(); ++it) {
    out.nodes.push_back(index.id(it->node));
    if (it->via) out.edges.push_back(edges[*it->via].id);
  }
  return out;
}

std::vector<Trail> partition_open_trails(std::span<const TrailEdge> edges,
                                         std::span<const NodeId> odd_nodes) {
  if (odd_nodes.empty()) {
    throw Error(ErrorCode::kEvenEverywhere,
                "edge set has no odd-degree nodes");
  }
  const LocalIndex index(edges);
  std::vector<std::size_t> degree(index.size(), 0);
  EdgeId max_id = 0;
  for (const auto& e : edges) {
    ++degree[index.at(e.u)];
    ++degree[index.at(e.v)];
    max_id = std::max(max_id, e.id);
  }
  std::vector<NodeId> odd;
  for (std::size_t v = 0; v < index.size(); ++v) {
    if (degree[v] % 2 == 1) odd.push_back(index.id(v));
  }
  std::vector<NodeId> given(odd_nodes.begin(), odd_nodes.end());
  std::sort(given.begin(), given.end());
  if (given != odd) {
    throw Error(ErrorCode::kOddSetMismatch,
                "given node set is not the odd-degree set of the edges");
  }

  std::vector<TrailEdge> augmented(edges.begin(), edges.end());
  const EdgeId first_virtual = max_id + 1;
  for (std::size_t j = 0; j + 1 < odd.size(); j += 2) {
    augmented.push_back(
        {static_cast<EdgeId>(first_virtual + j / 2), odd[j], odd[j + 1]});
  }
  const Trail circuit = eulerian_trail(augmented, odd.front());
  const auto is_virtual = [&](EdgeId id) { return id >= first_virtual; };

  const std::size_t m = circuit.edges.size();
  std::size_t anchor = 0;
  while (!is_virtual(circuit.edges[anchor])) ++anchor;

  std::vector<Trail> trails;
  Trail current{{circuit.nodes[anchor + 1]}, {}};
  for (std::size_t step = 1; step <= m; ++step) {
    const std::size_t p = (anchor + step) % m;
    if (is_virtual(circuit.edges[p])) {
      trails.push_back(std::move(current));
      current = Trail{{circuit.nodes[p + 1]}, {}};
    } else {
      current.edges.push_back(circuit.edges[p]);
      current.nodes.push_back(circuit.nodes[p + 1]);
    }
  }
  return trails;
}

LevelGraph level_graph(const Graph& g, const Layering& layering,
                       const LevelEdges& levels, std::size_t level) {
  LevelGraph out;
  out.level = level;
  out.upper = layering.layers.at(level);
  out.lower = layering.layers.at(level - 1);
  for (EdgeId e : levels.cross.at(level)) {
    auto [u, v] = g.edge(e);
    if (layering.dist[u] != level) std::swap(u, v);
    out.edges.push_back({e, u, v});
  }
  return out;
}

namespace {

struct RemainderShape {
  std::vector<std::vector<std::size_t>> members;  // local nodes, nontrivial
  std::vector<bool> all_even;
  std::size_t odd_count = 0;

  std::size_t even_count() const {
    return static_cast<std::size_t>(
        std::count(all_even.begin(), all_even.end(), true));
  }
};

}  // namespace

LevelDecomposition helpful_decomposition(const LevelGraph& lg) {
  std::vector<TrailEdge> edges = lg.edges;
  std::sort(edges.begin(), edges.end(),
            [](const TrailEdge& a, const TrailEdge& b) { return a.id < b.id; });
  std::vector<NodeId> all_nodes = lg.upper;
  all_nodes.insert(all_nodes.end(), lg.lower.begin(), lg.lower.end());
  const LocalIndex index(edges, all_nodes);
  const std::size_t n = index.size();

  std::vector<std::vector<std::size_t>> adj(n);  // positions into `edges`
  for (std::size_t pos = 0; pos < edges.size(); ++pos) {
    adj[index.at(edges[pos].u)].push_back(pos);
    adj[index.at(edges[pos].v)].push_back(pos);
  }

  // sigma_of[u] is the position of u's sigma edge; in_sigma marks positions.
  std::vector<std::size_t> sigma_of(n, 0);
  std::vector<bool> in_sigma(edges.size(), false);
  for (NodeId u : lg.upper) {
    const std::size_t lu = index.at(u);
    if (adj[lu].empty()) {
      throw Error(ErrorCode::kIsolatedUNode,
                  "upper node " + std::to_string(u) + " has no cross edge");
    }
    std::size_t best = adj[lu].front();
    for (std::size_t pos : adj[lu]) {
      if (edges[pos].v < edges[best].v) best = pos;
    }
    sigma_of[lu] = best;
    in_sigma[best] = true;
  }

  const auto shape = [&]() {
    RemainderShape s;
    std::vector<std::size_t> deg(n, 0);
    for (std::size_t pos = 0; pos < edges.size(); ++pos) {
      if (in_sigma[pos]) continue;
      ++deg[index.at(edges[pos].u)];
      ++deg[index.at(edges[pos].v)];
    }
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < n; ++start) {
      if (deg[start] % 2 == 1) ++s.odd_count;
      if (seen[start] || deg[start] == 0) continue;
      std::vector<std::size_t> comp;
      bool even = true;
      seen[start] = true;
      stack.push_back(start);
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        even = even && deg[v] % 2 == 0;
        for (std::size_t pos : adj[v]) {
          if (in_sigma[pos]) continue;
          const std::size_t a = index.at(edges[pos].u);
          const std::size_t w = a == v ? index.at(edges[pos].v) : a;
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      s.members.push_back(std::move(comp));
      s.all_even.push_back(even);
    }
    return s;
  };

  LevelDecomposition out;
  out.level = lg.level;
  const std::size_t budget = n * n;
  RemainderShape current = shape();
  while (true) {
    const auto target = std::find(current.all_even.begin(),
                                  current.all_even.end(), true);
    if (target == current.all_even.end()) break;
    if (out.swaps.size() >= budget) {
      throw Error(ErrorCode::kSwapLoopOverrun,
                  "sigma repair exceeded node_count^2 swaps at level " +
                      std::to_string(lg.level));
    }
    const auto& comp =
        current.members[static_cast<std::size_t>(target - current.all_even.begin())];
    // Smallest-id remainder edge inside the component.
    std::optional<std::size_t> pick;
    for (std::size_t v : comp) {
      for (std::size_t pos : adj[v]) {
        if (!in_sigma[pos] && (!pick || pos < *pick)) pick = pos;
      }
    }
    const std::size_t lu = index.at(edges[*pick].u);
    SwapStep step;
    step.node = edges[*pick].u;
    step.into_sigma = edges[*pick].id;
    step.out_of_sigma = edges[sigma_of[lu]].id;
    step.odd_before = current.odd_count;
    step.even_components_before = current.even_count();
    in_sigma[sigma_of[lu]] = false;
    in_sigma[*pick] = true;
    sigma_of[lu] = *pick;
    current = shape();
    step.odd_after = current.odd_count;
    step.even_components_after = current.even_count();
    const bool gained_odd = step.odd_after == step.odd_before + 2;
    const bool fewer_even = step.odd_after == step.odd_before &&
                            step.even_components_after <
                                step.even_components_before;
    if (!gained_odd && !fewer_even) {
      throw Error(ErrorCode::kInternalInvariant,
                  "sigma swap at node " + std::to_string(step.node) +
                      " moved neither potential");
    }
    out.swaps.push_back(step);
  }

  for (NodeId u : lg.upper) {
    out.sigma.emplace(u, edges[sigma_of[index.at(u)]].id);
  }
  std::vector<std::size_t> comp_of(n, 0);
  for (std::size_t c = 0; c < current.members.size(); ++c) {
    for (std::size_t v : current.members[c]) comp_of[v] = c;
  }
  std::vector<std::vector<TrailEdge>> comp_edges(current.members.size());
  for (std::size_t pos = 0; pos < edges.size(); ++pos) {
    if (in_sigma[pos]) continue;
    comp_edges[comp_of[index.at(edges[pos].u)]].push_back(edges[pos]);
  }
  std::vector<std::size_t> deg(n, 0);
  for (const auto& ce : comp_edges) {
    for (const auto& e : ce) {
      ++deg[index.at(e.u)];
      ++deg[index.at(e.v)];
    }
  }
  for (std::size_t c = 0; c < current.members.size(); ++c) {
    std::vector<NodeId> odd;
    for (std::size_t v : current.members[c]) {
      if (deg[v] % 2 == 1) odd.push_back(index.id(v));
    }
    auto trails = partition_open_trails(comp_edges[c], odd);
    for (auto& t : trails) out.trails.push_back(std::move(t));
  }
  return out;
}

}  // namespace antimagic
