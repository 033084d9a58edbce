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

#include "antimagic/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "antimagic/error.hpp"

namespace antimagic {

namespace {

std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

Graph::Graph(std::size_t node_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), incidence_(node_count) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto [u, v] = edges_[id];
    if (u >= node_count || v >= node_count) {
      throw Error(ErrorCode::kNodeOutOfRange,
                  "edge " + std::to_string(id) + " (" + std::to_string(u) +
                      "," + std::to_string(v) + ") leaves node range [0," +
                      std::to_string(node_count) + ")");
    }
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop at node " + std::to_string(u));
    }
    if (!seen.insert(pair_key(u, v)).second) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge (" + std::to_string(u) + "," +
                      std::to_string(v) + ")");
    }
    incidence_[u].push_back({id, v});
    incidence_[v].push_back({id, u});
  }
}

std::vector<std::vector<NodeId>> components(const Graph& g) {
  std::vector<std::vector<NodeId>> result;
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < g.node_count(); ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> comp;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const auto& inc : g.incident(v)) {
        if (!seen[inc.other]) {
          seen[inc.other] = true;
          stack.push_back(inc.other);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

std::optional<std::size_t> regularity(const Graph& g) {
  if (g.node_count() == 0) return std::nullopt;
  const std::size_t k = g.degree(0);
  for (NodeId v = 1; v < g.node_count(); ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  return k;
}

Layering bfs_layering(const Graph& g, std::span<const NodeId> component,
                      NodeId root) {
  if (root >= g.node_count() ||
      std::find(component.begin(), component.end(), root) == component.end()) {
    throw Error(ErrorCode::kRootNotInComponent,
                "root " + std::to_string(root) + " is not in the component");
  }
  Layering out;
  out.root = root;
  out.dist.assign(g.node_count(), kUnreached);
  out.dist[root] = 0;
  std::deque<NodeId> queue{root};
  std::vector<NodeId> neighbors;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    neighbors.clear();
    for (const auto& inc : g.incident(v)) neighbors.push_back(inc.other);
    std::sort(neighbors.begin(), neighbors.end());
    for (NodeId w : neighbors) {
      if (out.dist[w] == kUnreached) {
        out.dist[w] = out.dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  std::size_t depth = 0;
  for (NodeId v : component) {
    if (out.dist[v] == kUnreached) {
      throw Error(ErrorCode::kInternalInvariant,
                  "component is not connected: node " + std::to_string(v) +
                      " unreachable from root");
    }
    depth = std::max(depth, out.dist[v]);
  }
  out.layers.resize(depth + 1);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (out.dist[v] != kUnreached) out.layers[out.dist[v]].push_back(v);
  }
  return out;
}

LevelEdges classify_edges(const Graph& g, const Layering& layering) {
  LevelEdges out;
  const std::size_t levels = layering.layers.size();
  out.intra.resize(levels);
  out.cross.resize(levels);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    if (!layering.contains(u) || !layering.contains(v)) continue;
    const std::size_t du = layering.dist[u];
    const std::size_t dv = layering.dist[v];
    if (du == dv) {
      out.intra[du].push_back(e);
    } else if (du + 1 == dv || dv + 1 == du) {
      out.cross[std::max(du, dv)].push_back(e);
    } else {
      throw Error(ErrorCode::kInternalInvariant,
                  "edge " + std::to_string(e) + " spans layers " +
                      std::to_string(du) + " and " + std::to_string(dv));
    }
  }
  for (std::size_t i = 1; i < levels; ++i) {
    if (out.cross[i].empty()) {
      throw Error(ErrorCode::kInternalInvariant,
                  "level " + std::to_string(i) + " has no cross edges");
    }
  }
  return out;
}

}  // namespace antimagic
