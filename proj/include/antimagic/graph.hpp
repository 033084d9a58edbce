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

#ifndef ANTIMAGIC_GRAPH_HPP_
#define ANTIMAGIC_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace antimagic {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  EdgeId edge = 0;
  NodeId other = 0;
};

// Simple undirected graph. Edge ids are indices into the input edge list and
// never change; incidence lists are ordered by ascending edge id.
class Graph {
 public:
  Graph() = default;

  // Throws Error{kSelfLoop, kDuplicateEdge, kNodeOutOfRange}.
  Graph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const { return incidence_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Incidence> incident(NodeId v) const { return incidence_[v]; }
  std::size_t degree(NodeId v) const { return incidence_[v].size(); }

  NodeId other_end(EdgeId e, NodeId v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count() == b.node_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

inline Graph build_graph(std::size_t node_count, std::vector<Edge> edges) {
  return Graph(node_count, std::move(edges));
}

// Connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<NodeId>> components(const Graph& g);

// Common degree if every node has it; nullopt otherwise (and for the graph
// with no nodes).
std::optional<std::size_t> regularity(const Graph& g);

inline constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

// Breadth-first distance classes from a root.
struct Layering {
  NodeId root = 0;
  std::vector<std::size_t> dist;               // kUnreached outside component
  std::vector<std::vector<NodeId>> layers;     // layers[i] ascending

  std::size_t depth() const { return layers.empty() ? 0 : layers.size() - 1; }
  bool contains(NodeId v) const { return dist[v] != kUnreached; }
};

// Neighbors are visited in ascending node id. Throws kRootNotInComponent.
Layering bfs_layering(const Graph& g, std::span<const NodeId> component,
                      NodeId root);

// Per level i: intra[i] holds the edges inside layer i, cross[i] the edges
// between layers i-1 and i. Index 0 of cross is always empty (and so is
// intra[0]). Edge lists are ascending.
struct LevelEdges {
  std::vector<std::vector<EdgeId>> intra;
  std::vector<std::vector<EdgeId>> cross;

  std::size_t depth() const { return cross.empty() ? 0 : cross.size() - 1; }
};

// Only edges inside the layered component are classified. Throws
// kInternalInvariant if an edge spans two or more layers.
LevelEdges classify_edges(const Graph& g, const Layering& layering);

}  // namespace antimagic

#endif  // ANTIMAGIC_GRAPH_HPP_
