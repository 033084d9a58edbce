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


#include <gtest/gtest.h>

#include <map>
#include <set>

#include "antimagic/error.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/trails.hpp"
#include "oracles.hpp"

namespace antimagic {
namespace {

using Nodes = std::vector<NodeId>;
using Edges = std::vector<EdgeId>;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternalInvariant;
}

std::vector<TrailEdge> as_trail_edges(const Graph& g) {
  std::vector<TrailEdge> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.push_back({e, g.edge(e).u, g.edge(e).v});
  return out;
}

Nodes odd_nodes_of(const std::vector<TrailEdge>& edges) {
  std::map<NodeId, int> deg;
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  Nodes odd;
  for (const auto& [v, d] : deg) {
    if (d % 2) odd.push_back(v);
  }
  return odd;
}

TEST(EulerianTrail, C4FromZero) {
  const auto edges = as_trail_edges(cycle(4));
  const Trail t = eulerian_trail(edges, 0);
  EXPECT_EQ(t.nodes, (Nodes{0, 1, 2, 3, 0}));
  EXPECT_EQ(t.edges, (Edges{0, 1, 2, 3}));
}

TEST(EulerianTrail, BowtieCoversAllSixEdges) {
  const Graph g = build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  const auto edges = as_trail_edges(g);
  const Trail t = eulerian_trail(edges, 0);
  ASSERT_EQ(t.length(), 6u);
  EXPECT_EQ(t.front(), 0u);
  EXPECT_EQ(t.back(), 0u);
  EXPECT_EQ(std::set<EdgeId>(t.edges.begin(), t.edges.end()).size(), 6u);
  for (std::size_t j = 0; j < t.length(); ++j) {
    const Edge& e = g.edge(t.edges[j]);
    EXPECT_TRUE((e.u == t.nodes[j] && e.v == t.nodes[j + 1]) ||
                (e.v == t.nodes[j] && e.u == t.nodes[j + 1]));
  }
}

TEST(EulerianTrail, Errors) {
  const std::vector<TrailEdge> single = {{0, 0, 1}};
  EXPECT_EQ(code_of([&] { eulerian_trail(single, 0); }), ErrorCode::kOddDegree);
  const auto two = as_trail_edges(disjoint_union({cycle(3), cycle(3)}));
  EXPECT_EQ(code_of([&] { eulerian_trail(two, 0); }), ErrorCode::kDisconnected);
}

TEST(EulerianTrail, ParallelEdgesAllowed) {
  const std::vector<TrailEdge> doubled = {{0, 0, 1}, {7, 1, 0}};
  const Trail t = eulerian_trail(doubled, 0);
  EXPECT_EQ(t.nodes, (Nodes{0, 1, 0}));
  EXPECT_EQ(t.edges, (Edges{0, 7}));
}

TEST(PartitionOpenTrails, PathIsOneTrail) {
  const std::vector<TrailEdge> p3 = {{0, 0, 1}, {1, 1, 2}};
  const auto trails = partition_open_trails(p3, Nodes{0, 2});
  ASSERT_EQ(trails.size(), 1u);
  EXPECT_EQ(trails[0].nodes, (Nodes{0, 1, 2}));
}

// Hand trace: pairs (0,1) and (2,3) get virtual edges 3 and 4; the circuit
// from 0 is 0 e0 1 v3 0 e1 2 v4 3 e2 0, split at the virtual edges.
TEST(PartitionOpenTrails, StarUnderConsecutivePairing) {
  const std::vector<TrailEdge> star = {{0, 0, 1}, {1, 0, 2}, {2, 0, 3}};
  const auto trails = partition_open_trails(star, Nodes{0, 1, 2, 3});
  ASSERT_EQ(trails.size(), 2u);
  EXPECT_EQ(trails[0].nodes, (Nodes{0, 2}));
  EXPECT_EQ(trails[1].nodes, (Nodes{3, 0, 1}));
  EXPECT_EQ(trails[1].edges, (Edges{2, 0}));
}

TEST(PartitionOpenTrails, Errors) {
  const auto c4 = as_trail_edges(cycle(4));
  EXPECT_EQ(code_of([&] { partition_open_trails(c4, Nodes{}); }),
            ErrorCode::kEvenEverywhere);
  const std::vector<TrailEdge> p3 = {{0, 0, 1}, {1, 1, 2}};
  EXPECT_EQ(code_of([&] { partition_open_trails(p3, Nodes{0, 1}); }),
            ErrorCode::kOddSetMismatch);
  const std::vector<TrailEdge> split = {{0, 0, 1}, {1, 2, 3}};
  EXPECT_EQ(code_of([&] { partition_open_trails(split, Nodes{0, 1, 2, 3}); }),
            ErrorCode::kDisconnected);
}

TEST(PartitionOpenTrailsProperty, RandomConnectedGraphs) {
  std::size_t tested = 0;
  for (std::uint64_t seed = 1; tested < 300; ++seed) {
    const Graph g = random_connected(2 + seed % 40, 1, 6, seed);
    const auto edges = as_trail_edges(g);
    const Nodes odd = odd_nodes_of(edges);
    if (odd.empty()) continue;
    ++tested;
    const auto trails = partition_open_trails(edges, odd);
    ASSERT_EQ(trails.size(), odd.size() / 2);
    EXPECT_TRUE(oracle::is_open_trail_partition(edges, trails)) << "seed " << seed;
    Nodes ends;
    for (const auto& t : trails) {
      ends.push_back(t.front());
      ends.push_back(t.back());
    }
    std::sort(ends.begin(), ends.end());
    EXPECT_EQ(ends, odd);
  }
}

// U = {2, 3}, W = {0, 1}.
LevelGraph k22() {
  return {1, {2, 3}, {0, 1}, {{0, 2, 0}, {1, 2, 1}, {2, 3, 0}, {3, 3, 1}}};
}

// U = {3, 4}, W = {0, 1, 2}.
LevelGraph k23() {
  return {1, {3, 4}, {0, 1, 2},
          {{0, 3, 0}, {1, 3, 1}, {2, 3, 2}, {3, 4, 0}, {4, 4, 1}, {5, 4, 2}}};
}

TEST(HelpfulDecomposition, K22NeedsNoSwap) {
  const LevelDecomposition d = helpful_decomposition(k22());
  EXPECT_EQ(d.sigma, (std::map<NodeId, EdgeId>{{2, 0}, {3, 2}}));
  ASSERT_EQ(d.trails.size(), 1u);
  EXPECT_EQ(d.trails[0].nodes, (Nodes{2, 1, 3}));
  EXPECT_TRUE(d.swaps.empty());
}

// Initial sigma {3:e0, 4:e3} leaves the all-even cycle 3-1-4-2; the smallest
// edge there at an upper node is e1, so sigma(3) moves from e0 to e1. The odd
// nodes 0 and 1 then end the single trail 0-3-2-4-1.
TEST(HelpfulDecomposition, K23SwapsOnce) {
  const LevelDecomposition d = helpful_decomposition(k23());
  EXPECT_EQ(d.sigma, (std::map<NodeId, EdgeId>{{3, 1}, {4, 3}}));
  ASSERT_EQ(d.swaps.size(), 1u);
  EXPECT_EQ(d.swaps[0].node, 3u);
  EXPECT_EQ(d.swaps[0].into_sigma, 1u);
  EXPECT_EQ(d.swaps[0].out_of_sigma, 0u);
  EXPECT_EQ(d.swaps[0].odd_before, 0u);
  EXPECT_EQ(d.swaps[0].odd_after, 2u);
  ASSERT_EQ(d.trails.size(), 1u);
  EXPECT_EQ(d.trails[0].nodes, (Nodes{0, 3, 2, 4, 1}));
  EXPECT_EQ(d.trails[0].edges, (Edges{0, 2, 5, 4}));
}

TEST(HelpfulDecomposition, SingleEdge) {
  const LevelDecomposition d = helpful_decomposition({1, {1}, {0}, {{0, 1, 0}}});
  EXPECT_EQ(d.sigma, (std::map<NodeId, EdgeId>{{1, 0}}));
  EXPECT_TRUE(d.trails.empty());
}

TEST(HelpfulDecomposition, IsolatedUpperNode) {
  EXPECT_EQ(code_of([] { helpful_decomposition({1, {1, 2}, {0}, {{0, 1, 0}}}); }),
            ErrorCode::kIsolatedUNode);
}

// Odd-degree count and all-even nontrivial component count of the
// remainder, recomputed from scratch.
std::pair<std::size_t, std::size_t> remainder_stats(
    const LevelGraph& lg, const std::map<NodeId, EdgeId>& sigma) {
  std::set<EdgeId> in_sigma;
  for (const auto& [u, e] : sigma) in_sigma.insert(e);
  std::map<NodeId, std::size_t> deg;
  std::map<NodeId, NodeId> parent;
  std::function<NodeId(NodeId)> find = [&](NodeId x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : lg.edges) {
    if (in_sigma.count(e.id)) continue;
    ++deg[e.u];
    ++deg[e.v];
    parent.try_emplace(e.u, e.u);
    parent.try_emplace(e.v, e.v);
  }
  for (const auto& e : lg.edges) {
    if (!in_sigma.count(e.id)) parent[find(e.u)] = find(e.v);
  }
  std::size_t odd = 0;
  std::map<NodeId, bool> comp_has_odd;
  for (const auto& [v, d] : deg) {
    odd += d % 2;
    comp_has_odd[find(v)] |= (d % 2 == 1);
  }
  std::size_t even = 0;
  for (const auto& [root, has_odd] : comp_has_odd) even += !has_odd;
  return {odd, even};
}

TEST(HelpfulDecompositionProperty, RandomLevelGraphs) {
  std::size_t swaps_seen = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const LevelGraph lg = random_level_graph(1 + seed % 9, 1 + (seed / 9) % 9, 1, 3, seed);
    const LevelDecomposition d = helpful_decomposition(lg);
    ASSERT_EQ(d.sigma.size(), lg.upper.size());

    // Replay the swaps from the smallest-neighbour start.
    std::map<NodeId, EdgeId> sigma;
    std::map<NodeId, NodeId> best;
    for (const auto& e : lg.edges) {
      auto it = best.find(e.u);
      if (it == best.end() || e.v < it->second) {
        best[e.u] = e.v;
        sigma[e.u] = e.id;
      }
    }
    for (const auto& s : d.swaps) {
      const auto before = remainder_stats(lg, sigma);
      ASSERT_EQ(sigma[s.node], s.out_of_sigma);
      sigma[s.node] = s.into_sigma;
      const auto after = remainder_stats(lg, sigma);
      EXPECT_EQ(before.first, s.odd_before);
      EXPECT_EQ(after.first, s.odd_after);
      EXPECT_TRUE(after.first == before.first + 2 ||
                  (after.first == before.first && after.second < before.second));
      ++swaps_seen;
    }
    EXPECT_EQ(sigma, d.sigma);
    EXPECT_EQ(remainder_stats(lg, d.sigma).second, 0u);
    const std::size_t n = lg.upper.size() + lg.lower.size();
    EXPECT_LE(d.swaps.size(), n * n);

    std::vector<TrailEdge> rest;
    for (const auto& e : lg.edges) {
      if (d.sigma.at(e.u) != e.id) rest.push_back(e);
    }
    EXPECT_TRUE(oracle::is_open_trail_partition(rest, d.trails));
    Nodes ends;
    for (const auto& t : d.trails) {
      ends.push_back(t.front());
      ends.push_back(t.back());
    }
    std::sort(ends.begin(), ends.end());
    EXPECT_EQ(std::adjacent_find(ends.begin(), ends.end()), ends.end());
  }
  EXPECT_GT(swaps_seen, 0u);
}

}  // namespace
}  // namespace antimagic
