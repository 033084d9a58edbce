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

#ifndef ANTIMAGIC_VERIFY_HPP_
#define ANTIMAGIC_VERIFY_HPP_

// Checks that only look at (graph, edge -> label) plus, for the bound
// certificates, the layering and level decompositions. Nothing here reads an
// interval plan; trail intervals are recovered from the labels themselves.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labeler.hpp"
#include "antimagic/trails.hpp"

namespace antimagic {

struct VertexSumReport {
  std::vector<Label> sums;
  std::vector<std::pair<NodeId, NodeId>> collisions;
  bool injective = false;
  bool in_range = false;
  bool antimagic = false;
};

VertexSumReport verify_labeling(const Graph& g, std::span<const Label> labels);

enum class Side { kUpper, kLower };  // layer i / layer i-1 of a level

struct SuccessiveViolation {
  std::size_t level = 0;
  NodeId node = 0;
  Label first = 0;
  Label second = 0;
  Side side = Side::kUpper;
};

struct PBoundViolation {
  std::size_t level = 0;
  NodeId node = 0;
  Label p = 0;
  Label bound = 0;
  Side side = Side::kUpper;
};

// f(sigma(v_i)) < s on the upper side, f(sigma(v_{i-1})) > l on the lower.
struct SigmaViolation {
  std::size_t level = 0;
  NodeId node = 0;
  Label label = 0;
  Side side = Side::kUpper;
};

struct LevelBounds {
  std::size_t level = 0;
  Interval trail;  // [s, l] as read off the trail labels
};

struct BoundReport {
  std::vector<LevelBounds> levels;
  std::vector<SuccessiveViolation> successive;
  std::vector<PBoundViolation> p_bounds;
  std::vector<SigmaViolation> sigma;
  std::vector<std::size_t> noncontiguous_levels;

  bool certified() const {
    return successive.empty() && p_bounds.empty() && sigma.empty() &&
           noncontiguous_levels.empty();
  }
  void merge(BoundReport other);
};

// The interval [s, l] occupied by a level's trail labels. With no trail
// edges it is the empty interval starting just above the level's sigma
// labels. nullopt if the trail labels are not one contiguous run.
std::optional<Interval> trail_interval(const LevelDecomposition& decomposition,
                                       std::span<const Label> labels);

// Consecutive trail labels must sum to <= s + l at upper nodes and >= s + l
// at lower nodes.
BoundReport check_successive_sums(const LevelDecomposition& decomposition,
                                  const Layering& layering,
                                  std::span<const Label> labels,
                                  Interval trail);

// p(v) = f(E(v)) - f(sigma(v)) for the two layers of one level.
struct LevelPValues {
  std::size_t level = 0;
  Interval trail;
  std::vector<std::pair<NodeId, Label>> upper;
  std::vector<std::pair<NodeId, Label>> lower;
};

// Even k: p(v_i) <= (k-2)/2 (s+l) + l and p(v_{i-1}) >= (k-2)/2 (s+l) + s.
// Odd k:  p(v_i) <= (k-1)/2 (s+l)     and p(v_{i-1}) >= (k-1)/2 (s+l).
BoundReport check_p_bounds(std::size_t k, std::span<const LevelPValues> levels);

// Recomputes p from raw vertex sums for levels 2..q.
std::vector<LevelPValues> level_p_values(
    const Graph& g, const Layering& layering,
    std::span<const LevelDecomposition> decompositions,
    std::span<const Label> labels);

// Successive sums on every level, plus (when k is given) p bounds and the
// sigma-label placement on levels >= 2.
BoundReport certify_bounds(const Graph& g, const Layering& layering,
                           std::span<const LevelDecomposition> decompositions,
                           std::span<const Label> labels,
                           std::optional<std::size_t> k);

struct MonotonicityReport {
  bool root_unique_max = false;
  // (deeper node, shallower node) pairs at distance >= 2 with sums out of
  // order; one witness per offending layer pair.
  std::vector<std::pair<NodeId, NodeId>> violations;

  bool ok() const { return root_unique_max && violations.empty(); }
};

// f(E(root)) is the strict maximum over the layered component, and
// f(E(v_i)) < f(E(v_j)) whenever i >= j + 2.
MonotonicityReport check_cross_layer(const Graph& g, const Layering& layering,
                                     std::span<const Label> labels);

inline constexpr std::size_t kDefaultBruteForceCap = 8;

// First antimagic bijection in lexicographic order of (f(e_0), f(e_1), ...).
// Throws kTooLarge when |E| > cap.
std::optional<std::vector<Label>> exists_antimagic_bruteforce(
    const Graph& g, std::size_t cap = kDefaultBruteForceCap);

}  // namespace antimagic

#endif  // ANTIMAGIC_VERIFY_HPP_
