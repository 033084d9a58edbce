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

#include "antimagic/error.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/labeler.hpp"
#include "antimagic/verify.hpp"
#include "oracles.hpp"

namespace antimagic {
namespace {

using Labels = std::vector<Label>;
using Nodes = std::vector<NodeId>;

Graph triangle() { return build_graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

TEST(VerifyLabeling, TriangleIsAntimagic) {
  const VertexSumReport r = verify_labeling(triangle(), Labels{2, 3, 1});
  EXPECT_EQ(r.sums, (Labels{5, 3, 4}));
  EXPECT_TRUE(r.antimagic);
  EXPECT_TRUE(r.collisions.empty());
}

TEST(VerifyLabeling, K2Collides) {
  const VertexSumReport r = verify_labeling(build_graph(2, {{0, 1}}), Labels{1});
  EXPECT_EQ(r.sums, (Labels{1, 1}));
  EXPECT_FALSE(r.antimagic);
  EXPECT_EQ(r.collisions, (std::vector<std::pair<NodeId, NodeId>>{{0, 1}}));
}

TEST(VerifyLabeling, C4AroundTheCycle) {
  const VertexSumReport r = verify_labeling(cycle(4), Labels{1, 2, 3, 4});
  EXPECT_EQ(r.sums, (Labels{5, 3, 5, 7}));
  EXPECT_FALSE(r.antimagic);
  EXPECT_EQ(r.collisions, (std::vector<std::pair<NodeId, NodeId>>{{0, 2}}));
}

TEST(VerifyLabeling, RangeAndInjectivity) {
  const VertexSumReport dup = verify_labeling(triangle(), Labels{1, 1, 3});
  EXPECT_FALSE(dup.injective);
  EXPECT_FALSE(dup.antimagic);
  const VertexSumReport out = verify_labeling(triangle(), Labels{1, 2, 4});
  EXPECT_TRUE(out.injective);
  EXPECT_FALSE(out.in_range);
  EXPECT_FALSE(out.antimagic);
  EXPECT_THROW(verify_labeling(triangle(), Labels{1, 2}), Error);
}

// A lone level-1 trail: lower 0, upper 10, lower 1, upper 11, lower 2.
struct TrailFixture {
  LevelDecomposition d;
  Layering layering;
  TrailFixture() {
    d.level = 1;
    d.trails = {{{0, 10, 1, 11, 2}, {0, 1, 2, 3}}};
    layering.dist.assign(12, kUnreached);
    for (NodeId v : {0, 1, 2}) layering.dist[v] = 0;
    for (NodeId v : {10, 11}) layering.dist[v] = 1;
  }
};

TEST(CheckSuccessiveSums, CaseALabelsPass) {
  TrailFixture f;
  const BoundReport r = check_successive_sums(f.d, f.layering, Labels{1, 4, 2, 3}, {1, 4});
  EXPECT_TRUE(r.certified());
}

TEST(CheckSuccessiveSums, SwappedLabelsFailAtLowerNode) {
  TrailFixture f;
  const BoundReport r = check_successive_sums(f.d, f.layering, Labels{4, 1, 3, 2}, {1, 4});
  ASSERT_FALSE(r.successive.empty());
  bool lower_hit = false;
  for (const auto& v : r.successive) {
    if (v.node == 1) {
      lower_hit = true;
      EXPECT_EQ(v.side, Side::kLower);
      EXPECT_EQ(v.first + v.second, 4);
    }
  }
  EXPECT_TRUE(lower_hit);
}

TEST(CheckSuccessiveSums, SingleEdgeTrailIsVacuous) {
  LevelDecomposition d;
  d.level = 1;
  d.trails = {{{0, 10}, {0}}};
  Layering l;
  l.dist.assign(11, 0);
  l.dist[10] = 1;
  EXPECT_TRUE(check_successive_sums(d, l, Labels{1}, {1, 1}).certified());
}

TEST(CheckPBounds, EvenKTwoReducesToSAndL) {
  const std::vector<LevelPValues> lv = {{2, {3, 6}, {{7, 6}, {8, 7}}, {{4, 3}, {5, 2}}}};
  const BoundReport r = check_p_bounds(2, lv);
  ASSERT_EQ(r.p_bounds.size(), 2u);
  EXPECT_EQ(r.p_bounds[0].node, 8u);
  EXPECT_EQ(r.p_bounds[0].bound, 6);  // l
  EXPECT_EQ(r.p_bounds[1].node, 5u);
  EXPECT_EQ(r.p_bounds[1].bound, 3);  // s
}

TEST(CheckPBounds, OddKThreeComparesAgainstSPlusL) {
  const std::vector<LevelPValues> lv = {{2, {1, 4}, {{7, 5}, {8, 6}}, {{4, 5}, {5, 4}}}};
  const BoundReport r = check_p_bounds(3, lv);
  ASSERT_EQ(r.p_bounds.size(), 2u);
  for (const auto& v : r.p_bounds) EXPECT_EQ(v.bound, 5);
  EXPECT_EQ(r.p_bounds[0].node, 8u);
  EXPECT_EQ(r.p_bounds[1].node, 5u);
}

// C_4 from root 0: level 2 trail block is [2, 2]. Node 2 has p = 2 <= l and
// node 3 (on the trail) has p = 2 >= s. Node 1 carries sigma(1) = e0 only
// besides sigma(2), so p(1) = 1 < s.
TEST(CheckPBounds, C4Trace) {
  const Graph g = cycle(4);
  const AntimagicResult r = antimagic_label(g);
  const auto& run = r.components[0];
  const auto pv = level_p_values(g, run.layering, run.decompositions, r.labeling.label);
  ASSERT_EQ(pv.size(), 1u);
  EXPECT_EQ(pv[0].trail, (Interval{2, 2}));
  EXPECT_EQ(pv[0].upper, (std::vector<std::pair<NodeId, Label>>{{2, 2}}));
  EXPECT_EQ(pv[0].lower, (std::vector<std::pair<NodeId, Label>>{{1, 1}, {3, 2}}));
  const BoundReport b = check_p_bounds(2, pv);
  ASSERT_EQ(b.p_bounds.size(), 1u);
  EXPECT_EQ(b.p_bounds[0].node, 1u);
  EXPECT_EQ(b.p_bounds[0].side, Side::kLower);
}

TEST(CheckCrossLayer, C4) {
  const Graph g = cycle(4);
  const AntimagicResult r = antimagic_label(g);
  const MonotonicityReport m =
      check_cross_layer(g, r.components[0].layering, r.labeling.label);
  EXPECT_TRUE(m.root_unique_max);
  EXPECT_TRUE(m.ok());
  // The same layering with labels that break the order.
  const MonotonicityReport bad =
      check_cross_layer(g, r.components[0].layering, Labels{1, 4, 3, 2});
  EXPECT_FALSE(bad.ok());
}

TEST(BruteForce, Examples) {
  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(exists_antimagic_bruteforce(p3), (Labels{1, 2}));
  EXPECT_EQ(exists_antimagic_bruteforce(build_graph(2, {{0, 1}})), std::nullopt);
  const auto tri = exists_antimagic_bruteforce(triangle());
  ASSERT_TRUE(tri);
  EXPECT_TRUE(oracle::is_antimagic(triangle(), *tri));
  EXPECT_THROW(exists_antimagic_bruteforce(complete(5)), Error);
}

// Property: agrees with the recursive oracle on small graphs.
TEST(BruteForceProperty, AgreesWithOracle) {
  std::vector<Graph> corpus = {cycle(3), cycle(5), cycle(8), complete(4),
                               build_graph(2, {{0, 1}}),
                               build_graph(4, {{0, 1}, {0, 2}, {0, 3}}),
                               disjoint_union({build_graph(2, {{0, 1}}), cycle(3)})};
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    corpus.push_back(random_connected(2 + seed % 6, 1, 4, seed));
  }
  for (const auto& g : corpus) {
    if (g.edge_count() > 7) continue;
    EXPECT_EQ(exists_antimagic_bruteforce(g), oracle::first_antimagic(g));
  }
}

}  // namespace
}  // namespace antimagic
