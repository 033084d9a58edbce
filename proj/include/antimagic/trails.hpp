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

#ifndef ANTIMAGIC_TRAILS_HPP_
#define ANTIMAGIC_TRAILS_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// An edge of a (multi)graph handed to the trail routines. Ids must be
// distinct; parallel edges are allowed.
struct TrailEdge {
  EdgeId id = 0;
  NodeId u = 0;
  NodeId v = 0;
};

// nodes[j] and nodes[j+1] are joined by edges[j].
struct Trail {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  NodeId front() const { return nodes.front(); }
  NodeId back() const { return nodes.back(); }
  bool is_open() const { return !edges.empty() && front() != back(); }
  Trail reversed() const;
};

// Closed trail through every edge, built by cycle splicing and always
// leaving a node along its smallest-id unused edge.
// Throws kOddDegree, kDisconnected.
Trail eulerian_trail(std::span<const TrailEdge> edges, NodeId start);

// Splits a connected edge set with odd-degree nodes `odd_nodes` into
// |odd_nodes|/2 open trails. Odd nodes are paired consecutively in
// ascending id and joined by virtual edges before the Eulerian pass.
// Throws kEvenEverywhere, kDisconnected, kOddSetMismatch.
std::vector<Trail> partition_open_trails(std::span<const TrailEdge> edges,
                                         std::span<const NodeId> odd_nodes);

// Bipartite graph between layer `level` (upper side, U) and layer
// `level - 1` (lower side, W). Each edge is stored with u in U and v in W.
struct LevelGraph {
  std::size_t level = 0;
  std::vector<NodeId> upper;
  std::vector<NodeId> lower;
  std::vector<TrailEdge> edges;
};

LevelGraph level_graph(const Graph& g, const Layering& layering,
                       const LevelEdges& levels, std::size_t level);

// One exchange step of the sigma repair loop, with the potential it moved.
struct SwapStep {
  NodeId node = 0;
  EdgeId into_sigma = 0;
  EdgeId out_of_sigma = 0;
  std::size_t odd_before = 0;
  std::size_t odd_after = 0;
  std::size_t even_components_before = 0;
  std::size_t even_components_after = 0;
};

struct LevelDecomposition {
  std::size_t level = 0;
  std::map<NodeId, EdgeId> sigma;  // one cross edge per upper node
  std::vector<Trail> trails;       // open trails over the other cross edges
  std::vector<SwapStep> swaps;
};

// Throws kIsolatedUNode, kSwapLoopOverrun, kInternalInvariant.
LevelDecomposition helpful_decomposition(const LevelGraph& level_graph);

}  // namespace antimagic

#endif  // ANTIMAGIC_TRAILS_HPP_
