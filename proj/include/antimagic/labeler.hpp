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

#ifndef ANTIMAGIC_LABELER_HPP_
#define ANTIMAGIC_LABELER_HPP_

// Constructive antimagic labeling of regular graphs, and of connected graphs
// whose BFS layers from some maximum-degree root have non-increasing degrees.
//
// Per connected component the edges are sorted into blocks by BFS level,
// deepest level first. Inside a level the intra-layer edges come first, then
// one "sigma" cross edge per node of the layer, then the remaining cross
// edges, which are split into endpoint-disjoint open trails and labeled from
// both ends of their interval so consecutive labels balance around s + l.
// Sigma edges are labeled last, in order of the partial sums p(v) of their
// upper endpoints.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/trails.hpp"

namespace antimagic {

using Label = std::int64_t;

// Closed integer interval [lo, hi]; empty when hi < lo.
struct Interval {
  Label lo = 1;
  Label hi = 0;

  std::size_t size() const {
    return hi < lo ? 0 : static_cast<std::size_t>(hi - lo + 1);
  }
  bool empty() const { return hi < lo; }
  bool contains(Label x) const { return lo <= x && x <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class BlockKind { kIntra, kSigma, kTrail };

std::string_view block_kind_name(BlockKind kind);

struct Block {
  std::size_t component = 0;
  std::size_t level = 0;
  BlockKind kind = BlockKind::kIntra;
  Interval interval;
};

// Blocks in ascending label order; consecutive, covering 1..|E| exactly.
struct IntervalPlan {
  std::vector<Block> blocks;

  const Block& find(std::size_t component, std::size_t level,
                    BlockKind kind) const;
};

struct LevelSizes {
  std::size_t intra = 0;
  std::size_t sigma = 0;
  std::size_t trail = 0;
};

// sizes[i] describes level i; sizes[0] must be all zero. Blocks are laid out
// from level q down to 1 as intra, sigma, trail, starting at `first_label`.
// Throws kSizeMismatch unless the sizes add up to `edge_count`.
IntervalPlan reserve_intervals(std::span<const LevelSizes> sizes,
                               std::size_t edge_count, Label first_label = 1,
                               std::size_t component = 0);

// Unlabeled edges carry 0.
using PartialLabeling = std::vector<Label>;

// Ascending edge id gets ascending label. Throws kSizeMismatch.
void label_intra(std::span<const EdgeId> edges, Interval interval,
                 PartialLabeling& labels);

// Labels the trails of one level from [s, l] so that consecutive labels sum
// to at most s + l at upper-layer nodes and at least s + l at lower-layer
// nodes. Throws kSizeMismatch, kSharedEndpoint.
void label_trails(std::span<const Trail> trails,
                  const std::function<bool(NodeId)>& is_upper,
                  Interval interval, PartialLabeling& labels);

// Labels the sigma edges of levels q..1 of one component, ordering each
// layer by (p(v), v). All other edges of the component must be labeled.
void sigma_pass(const Graph& g, const Layering& layering,
                std::span<const LevelDecomposition> decompositions,
                const IntervalPlan& plan, std::size_t component,
                PartialLabeling& labels);

struct Labeling {
  std::vector<Label> label;          // per edge id
  IntervalPlan plan;
  std::vector<std::size_t> block;    // per edge id, index into plan.blocks
};

enum class Mode { kRegular, kGeneral };

std::string_view mode_name(Mode mode);

struct LabelOptions {
  Mode mode = Mode::kRegular;
  // Pins the root of the component containing it; that component is then
  // labeled from this root only. Without it, regular mode tries the nodes of
  // each component in ascending id and general mode tries the valid roots in
  // ascending id, keeping the first labeling with distinct vertex sums.
  std::optional<NodeId> root;
};

// Everything the construction decided for one component; doubles as the
// certificate consumed by the bound checkers.
struct ComponentRun {
  std::vector<NodeId> nodes;
  NodeId root = 0;
  Layering layering;
  LevelEdges levels;
  std::vector<LevelDecomposition> decompositions;  // index = level; [0] unused
  Label first_label = 1;
  // Roots tried before `root` whose labeling had repeated vertex sums.
  std::vector<NodeId> rejected_roots;
};

struct AntimagicResult {
  Labeling labeling;
  std::vector<ComponentRun> components;
  std::optional<std::size_t> k;
  Mode mode = Mode::kRegular;
};

// Components are labeled in ascending order of their smallest node, each on
// the next consecutive label interval. The result is verified before return.
// Throws kNotRegular, kDegreeTooLow, kNoValidRoot, kDisconnectedGeneralMode,
// kTooFewNodes, kRootNotInComponent, kVerificationFailed.
AntimagicResult antimagic_label(const Graph& g, const LabelOptions& options = {});

// True when `root` has maximum degree in its component and every layer's
// minimum degree is at least the maximum degree of every deeper layer.
bool is_valid_root(const Graph& g, std::span<const NodeId> component,
                   NodeId root);

// First valid root among the maximum-degree nodes, scanned by ascending id.
std::optional<NodeId> find_valid_root(const Graph& g);

}  // namespace antimagic

#endif  // ANTIMAGIC_LABELER_HPP_
