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

#include "antimagic/labeler.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "antimagic/error.hpp"
#include "antimagic/verify.hpp"

namespace antimagic {

std::string_view block_kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::kIntra: return "intra";
    case BlockKind::kSigma: return "sigma";
    case BlockKind::kTrail: return "trail";
  }
  return "?";
}

std::string_view mode_name(Mode mode) {
  return mode == Mode::kRegular ? "regular" : "general";
}

const Block& IntervalPlan::find(std::size_t component, std::size_t level,
                                BlockKind kind) const {
  for (const auto& b : blocks) {
    if (b.component == component && b.level == level && b.kind == kind) {
      return b;
    }
  }
  throw Error(ErrorCode::kInternalInvariant,
              "no " + std::string(block_kind_name(kind)) + " block for level " +
                  std::to_string(level));
}

IntervalPlan reserve_intervals(std::span<const LevelSizes> sizes,
                               std::size_t edge_count, Label first_label,
                               std::size_t component) {
  std::size_t total = 0;
  for (const auto& s : sizes) total += s.intra + s.sigma + s.trail;
  if (total != edge_count || (!sizes.empty() &&
                              sizes[0].intra + sizes[0].sigma +
                                      sizes[0].trail != 0)) {
    throw Error(ErrorCode::kSizeMismatch,
                "level sizes add up to " + std::to_string(total) +
                    ", expected " + std::to_string(edge_count));
  }
  IntervalPlan plan;
  Label next = first_label;
  const auto push = [&](std::size_t level, BlockKind kind, std::size_t n) {
    const Interval iv{next, next + static_cast<Label>(n) - 1};
    plan.blocks.push_back({component, level, kind, iv});
    next += static_cast<Label>(n);
  };
  for (std::size_t level = sizes.size(); level-- > 1;) {
    push(level, BlockKind::kIntra, sizes[level].intra);
    push(level, BlockKind::kSigma, sizes[level].sigma);
    push(level, BlockKind::kTrail, sizes[level].trail);
  }
  return plan;
}

void label_intra(std::span<const EdgeId> edges, Interval interval,
                 PartialLabeling& labels) {
  if (edges.size() != interval.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                std::to_string(edges.size()) + " intra edges for an interval of " +
                    std::to_string(interval.size()));
  }
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  Label next = interval.lo;
  for (EdgeId e : sorted) labels[e] = next++;
}

namespace {

// Case A: lo, hi, lo+1, hi-1, ... ; Case B: hi, lo, hi-1, lo+1, ...
void label_alternating(const Trail& trail, bool start_low, Label& lo,
                       Label& hi, PartialLabeling& labels) {
  bool low = start_low;
  for (EdgeId e : trail.edges) {
    labels[e] = low ? lo++ : hi--;
    low = !low;
  }
}

}  // namespace

void label_trails(std::span<const Trail> trails,
                  const std::function<bool(NodeId)>& is_upper,
                  Interval interval, PartialLabeling& labels) {
  std::size_t total = 0;
  std::set<NodeId> endpoints;
  for (const auto& t : trails) {
    total += t.length();
    if (!t.is_open()) {
      throw Error(ErrorCode::kInternalInvariant, "trail is not open");
    }
    if (!endpoints.insert(t.front()).second ||
        !endpoints.insert(t.back()).second) {
      throw Error(ErrorCode::kSharedEndpoint,
                  "trails share an endpoint at level interval [" +
                      std::to_string(interval.lo) + "," +
                      std::to_string(interval.hi) + "]");
    }
  }
  if (total != interval.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                std::to_string(total) + " trail edges for an interval of " +
                    std::to_string(interval.size()));
  }

  // Orients the trail to start on the requested side.
  const auto from_side = [&](const Trail& t, bool upper) {
    if (is_upper(t.front()) == upper) return t;
    if (is_upper(t.back()) != upper) {
      throw Error(ErrorCode::kInternalInvariant,
                  "trail has no endpoint on the requested side");
    }
    return t.reversed();
  };

  Label lo = interval.lo;
  Label hi = interval.hi;
  std::vector<const Trail*> odd;
  for (const auto& t : trails) {
    if (t.length() % 2 == 1) {
      odd.push_back(&t);
      continue;
    }
    if (is_upper(t.front()) != is_upper(t.back())) {
      throw Error(ErrorCode::kInternalInvariant,
                  "even trail with endpoints on both sides");
    }
    if (is_upper(t.front())) {
      label_alternating(t, /*start_low=*/false, lo, hi, labels);  // Case B
    } else {
      label_alternating(t, /*start_low=*/true, lo, hi, labels);   // Case A
    }
  }
  std::size_t j = 0;
  for (; j + 1 < odd.size(); j += 2) {
    label_alternating(from_side(*odd[j], false), true, lo, hi, labels);
    label_alternating(from_side(*odd[j + 1], true), false, lo, hi, labels);
  }
  if (j < odd.size()) {
    label_alternating(from_side(*odd[j], false), true, lo, hi, labels);
  }
}

void sigma_pass(const Graph& g, const Layering& layering,
                std::span<const LevelDecomposition> decompositions,
                const IntervalPlan& plan, std::size_t component,
                PartialLabeling& labels) {
  for (std::size_t level = layering.depth(); level >= 1; --level) {
    const auto& decomposition = decompositions[level];
    std::vector<std::tuple<Label, NodeId, EdgeId>> order;
    for (NodeId v : layering.layers[level]) {
      const EdgeId own = decomposition.sigma.at(v);
      Label p = 0;
      for (const auto& inc : g.incident(v)) {
        if (inc.edge == own) continue;
        if (labels[inc.edge] == 0) {
          throw Error(ErrorCode::kInternalInvariant,
                      "edge " + std::to_string(inc.edge) + " at node " +
                          std::to_string(v) +
                          " is unlabeled during the sigma pass");
        }
        p += labels[inc.edge];
      }
      order.emplace_back(p, v, own);
    }
    std::sort(order.begin(), order.end());
    const Interval iv = plan.find(component, level, BlockKind::kSigma).interval;
    if (iv.size() != order.size()) {
      throw Error(ErrorCode::kSizeMismatch, "sigma block size mismatch");
    }
    Label next = iv.lo;
    for (const auto& [p, v, e] : order) labels[e] = next++;
  }
}

bool is_valid_root(const Graph& g, std::span<const NodeId> component,
                   NodeId root) {
  std::size_t max_degree = 0;
  for (NodeId v : component) max_degree = std::max(max_degree, g.degree(v));
  if (g.degree(root) != max_degree) return false;
  const Layering layering = bfs_layering(g, component, root);
  // Walk from the deepest layer up, tracking the largest degree seen below.
  std::size_t deeper_max = 0;
  for (std::size_t i = layering.layers.size(); i-- > 0;) {
    std::size_t layer_min = static_cast<std::size_t>(-1);
    std::size_t layer_max = 0;
    for (NodeId v : layering.layers[i]) {
      layer_min = std::min(layer_min, g.degree(v));
      layer_max = std::max(layer_max, g.degree(v));
    }
    if (layer_min < deeper_max) return false;
    deeper_max = std::max(deeper_max, layer_max);
  }
  return true;
}

std::optional<NodeId> find_valid_root(const Graph& g) {
  if (g.node_count() == 0) return std::nullopt;
  std::vector<NodeId> all(g.node_count());
  for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
  std::size_t max_degree = 0;
  for (NodeId v : all) max_degree = std::max(max_degree, g.degree(v));
  for (NodeId v : all) {
    if (g.degree(v) == max_degree && is_valid_root(g, all, v)) return v;
  }
  return std::nullopt;
}

namespace {

struct ComponentAttempt {
  ComponentRun run;
  IntervalPlan plan;
};

ComponentAttempt label_component(const Graph& g, const std::vector<NodeId>& nodes,
                                 NodeId root, std::size_t component,
                                 Label first_label, PartialLabeling& labels) {
  ComponentAttempt out;
  ComponentRun& run = out.run;
  run.nodes = nodes;
  run.root = root;
  run.first_label = first_label;
  run.layering = bfs_layering(g, run.nodes, root);
  run.levels = classify_edges(g, run.layering);
  const std::size_t depth = run.layering.depth();

  run.decompositions.resize(depth + 1);
  std::vector<LevelSizes> sizes(depth + 1);
  std::size_t edge_count = 0;
  for (std::size_t level = 1; level <= depth; ++level) {
    run.decompositions[level] =
        helpful_decomposition(level_graph(g, run.layering, run.levels, level));
    sizes[level].intra = run.levels.intra[level].size();
    sizes[level].sigma = run.decompositions[level].sigma.size();
    sizes[level].trail = run.levels.cross[level].size() - sizes[level].sigma;
    edge_count += run.levels.intra[level].size() + run.levels.cross[level].size();
  }
  out.plan = reserve_intervals(sizes, edge_count, first_label, component);

  for (std::size_t level = 1; level <= depth; ++level) {
    label_intra(run.levels.intra[level],
                out.plan.find(component, level, BlockKind::kIntra).interval,
                labels);
    const auto is_upper = [&](NodeId v) {
      return run.layering.dist[v] == level;
    };
    label_trails(run.decompositions[level].trails, is_upper,
                 out.plan.find(component, level, BlockKind::kTrail).interval,
                 labels);
  }
  sigma_pass(g, run.layering, run.decompositions, out.plan, component, labels);
  return out;
}

bool component_sums_distinct(const Graph& g, std::span<const NodeId> nodes,
                             const PartialLabeling& labels) {
  std::vector<Label> sums;
  sums.reserve(nodes.size());
  for (NodeId v : nodes) {
    Label s = 0;
    for (const auto& inc : g.incident(v)) s += labels[inc.edge];
    sums.push_back(s);
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

void commit(const ComponentAttempt& attempt, const PartialLabeling& labels,
            Labeling& out) {
  const ComponentRun& run = attempt.run;
  const std::size_t base = out.plan.blocks.size();
  for (std::size_t b = 0; b < attempt.plan.blocks.size(); ++b) {
    const Block& block = attempt.plan.blocks[b];
    const auto assign = [&](EdgeId e) {
      out.block[e] = base + b;
      out.label[e] = labels[e];
    };
    if (block.kind == BlockKind::kIntra) {
      for (EdgeId e : run.levels.intra[block.level]) assign(e);
    } else if (block.kind == BlockKind::kSigma) {
      for (const auto& [v, e] : run.decompositions[block.level].sigma) assign(e);
    } else {
      for (const auto& t : run.decompositions[block.level].trails) {
        for (EdgeId e : t.edges) assign(e);
      }
    }
    out.plan.blocks.push_back(block);
  }
}

}  // namespace

AntimagicResult antimagic_label(const Graph& g, const LabelOptions& options) {
  AntimagicResult result;
  result.mode = options.mode;
  if (options.root && *options.root >= g.node_count()) {
    throw Error(ErrorCode::kRootNotInComponent,
                "root " + std::to_string(*options.root) + " is not a node");
  }
  const auto comps = components(g);
  // Candidate roots per component, in the order they are tried.
  std::vector<std::vector<NodeId>> candidates;

  if (options.mode == Mode::kRegular) {
    const auto k = regularity(g);
    if (!k) throw Error(ErrorCode::kNotRegular, "graph is not regular");
    if (*k < 2) {
      throw Error(ErrorCode::kDegreeTooLow,
                  "graph is " + std::to_string(*k) +
                      "-regular; 1-regular graphs are trivially not antimagic "
                      "and 0-regular graphs have isolated nodes");
    }
    result.k = k;
    for (const auto& comp : comps) {
      const bool overridden =
          options.root && std::binary_search(comp.begin(), comp.end(),
                                             *options.root);
      candidates.push_back(overridden ? std::vector<NodeId>{*options.root}
                                      : comp);
    }
  } else {
    if (comps.size() != 1) {
      throw Error(ErrorCode::kDisconnectedGeneralMode,
                  "general mode needs a connected graph, got " +
                      std::to_string(comps.size()) + " components");
    }
    if (g.node_count() < 3) {
      throw Error(ErrorCode::kTooFewNodes,
                  "general mode needs at least 3 nodes");
    }
    result.k = regularity(g);
    std::vector<NodeId> valid;
    if (options.root) {
      if (!is_valid_root(g, comps.front(), *options.root)) {
        throw Error(ErrorCode::kNoValidRoot,
                    "node " + std::to_string(*options.root) +
                        " does not have layer-monotone degrees");
      }
      valid.push_back(*options.root);
    } else {
      for (NodeId v : comps.front()) {
        if (is_valid_root(g, comps.front(), v)) valid.push_back(v);
      }
      if (valid.empty()) {
        throw Error(ErrorCode::kNoValidRoot,
                    "no maximum-degree node has layer-monotone degrees");
      }
    }
    candidates.push_back(std::move(valid));
  }

  Labeling& labeling = result.labeling;
  labeling.label.assign(g.edge_count(), 0);
  labeling.block.assign(g.edge_count(), 0);
  Label next = 1;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::vector<NodeId> rejected;
    bool done = false;
    for (NodeId root : candidates[c]) {
      PartialLabeling scratch(g.edge_count(), 0);
      ComponentAttempt attempt =
          label_component(g, comps[c], root, c, next, scratch);
      if (!component_sums_distinct(g, comps[c], scratch)) {
        rejected.push_back(root);
        continue;
      }
      commit(attempt, scratch, labeling);
      attempt.run.rejected_roots = std::move(rejected);
      result.components.push_back(std::move(attempt.run));
      done = true;
      break;
    }
    if (!done) {
      throw Error(ErrorCode::kVerificationFailed,
                  "component " + std::to_string(c) +
                      ": no tried root produced distinct vertex sums (" +
                      std::to_string(rejected.size()) + " roots tried)");
    }
    for (const auto& b : labeling.plan.blocks) {
      if (b.component == c) next = std::max(next, b.interval.hi + 1);
    }
  }

  const VertexSumReport report = verify_labeling(g, labeling.label);
  if (!report.antimagic) {
    throw Error(ErrorCode::kVerificationFailed,
                "constructed labeling is not antimagic (" +
                    std::to_string(report.collisions.size()) +
                    " colliding pairs)");
  }
  return result;
}

}  // namespace antimagic
