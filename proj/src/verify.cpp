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

#include "antimagic/verify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "antimagic/error.hpp"

namespace antimagic {

namespace {

std::vector<Label> vertex_sums(const Graph& g, std::span<const Label> labels) {
  std::vector<Label> sums(g.node_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    sums[g.edge(e).u] += labels[e];
    sums[g.edge(e).v] += labels[e];
  }
  return sums;
}

bool sums_distinct(std::vector<Label> sums) {
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

}  // namespace

VertexSumReport verify_labeling(const Graph& g, std::span<const Label> labels) {
  VertexSumReport report;
  const std::size_t m = g.edge_count();
  if (labels.size() != m) {
    throw Error(ErrorCode::kSizeMismatch,
                std::to_string(labels.size()) + " labels for " +
                    std::to_string(m) + " edges");
  }
  report.in_range = std::all_of(labels.begin(), labels.end(), [&](Label x) {
    return x >= 1 && x <= static_cast<Label>(m);
  });
  std::vector<Label> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  report.injective =
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  report.sums = vertex_sums(g, labels);
  std::vector<NodeId> order(g.node_count());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return report.sums[a] < report.sums[b];
  });
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && report.sums[order[j]] == report.sums[order[i]]) {
      ++j;
    }
    for (std::size_t a = i; a < j; ++a) {
      for (std::size_t b = a + 1; b < j; ++b) {
        report.collisions.emplace_back(order[a], order[b]);
      }
    }
    i = j;
  }
  std::sort(report.collisions.begin(), report.collisions.end());
  report.antimagic =
      report.collisions.empty() && report.injective && report.in_range;
  return report;
}

void BoundReport::merge(BoundReport other) {
  auto append = [](auto& into, auto& from) {
    into.insert(into.end(), std::make_move_iterator(from.begin()),
                std::make_move_iterator(from.end()));
  };
  append(levels, other.levels);
  append(successive, other.successive);
  append(p_bounds, other.p_bounds);
  append(sigma, other.sigma);
  append(noncontiguous_levels, other.noncontiguous_levels);
}

std::optional<Interval> trail_interval(const LevelDecomposition& decomposition,
                                       std::span<const Label> labels) {
  std::vector<Label> trail_labels;
  for (const auto& t : decomposition.trails) {
    for (EdgeId e : t.edges) trail_labels.push_back(labels[e]);
  }
  if (trail_labels.empty()) {
    Label top = 0;
    for (const auto& [v, e] : decomposition.sigma) {
      top = std::max(top, labels[e]);
    }
    return Interval{top + 1, top};
  }
  std::sort(trail_labels.begin(), trail_labels.end());
  const Interval iv{trail_labels.front(), trail_labels.back()};
  if (std::adjacent_find(trail_labels.begin(), trail_labels.end()) !=
          trail_labels.end() ||
      iv.size() != trail_labels.size()) {
    return std::nullopt;
  }
  return iv;
}

BoundReport check_successive_sums(const LevelDecomposition& decomposition,
                                  const Layering& layering,
                                  std::span<const Label> labels,
                                  Interval trail) {
  BoundReport report;
  report.levels.push_back({decomposition.level, trail});
  const Label pivot = trail.lo + trail.hi;
  for (const auto& t : decomposition.trails) {
    for (std::size_t j = 1; j < t.length(); ++j) {
      const NodeId v = t.nodes[j];
      const Label a = labels[t.edges[j - 1]];
      const Label b = labels[t.edges[j]];
      const bool upper = layering.dist[v] == decomposition.level;
      if (upper ? a + b > pivot : a + b < pivot) {
        report.successive.push_back({decomposition.level, v, a, b,
                                     upper ? Side::kUpper : Side::kLower});
      }
    }
  }
  return report;
}

BoundReport check_p_bounds(std::size_t k, std::span<const LevelPValues> levels) {
  BoundReport report;
  const auto ks = static_cast<Label>(k);
  for (const auto& lv : levels) {
    const Label s = lv.trail.lo;
    const Label l = lv.trail.hi;
    Label upper_bound = 0;
    Label lower_bound = 0;
    if (k % 2 == 0) {
      upper_bound = (ks - 2) / 2 * (s + l) + l;
      lower_bound = (ks - 2) / 2 * (s + l) + s;
    } else {
      upper_bound = (ks - 1) / 2 * (s + l);
      lower_bound = upper_bound;
    }
    for (const auto& [v, p] : lv.upper) {
      if (p > upper_bound) {
        report.p_bounds.push_back({lv.level, v, p, upper_bound, Side::kUpper});
      }
    }
    for (const auto& [v, p] : lv.lower) {
      if (p < lower_bound) {
        report.p_bounds.push_back({lv.level, v, p, lower_bound, Side::kLower});
      }
    }
  }
  return report;
}

std::vector<LevelPValues> level_p_values(
    const Graph& g, const Layering& layering,
    std::span<const LevelDecomposition> decompositions,
    std::span<const Label> labels) {
  const std::vector<Label> sums = vertex_sums(g, labels);
  std::vector<LevelPValues> out;
  for (std::size_t level = 2; level <= layering.depth(); ++level) {
    LevelPValues lv;
    lv.level = level;
    const auto iv = trail_interval(decompositions[level], labels);
    if (!iv) continue;
    lv.trail = *iv;
    for (NodeId v : layering.layers[level]) {
      lv.upper.emplace_back(
          v, sums[v] - labels[decompositions[level].sigma.at(v)]);
    }
    for (NodeId v : layering.layers[level - 1]) {
      lv.lower.emplace_back(
          v, sums[v] - labels[decompositions[level - 1].sigma.at(v)]);
    }
    out.push_back(std::move(lv));
  }
  return out;
}

BoundReport certify_bounds(const Graph& g, const Layering& layering,
                           std::span<const LevelDecomposition> decompositions,
                           std::span<const Label> labels,
                           std::optional<std::size_t> k) {
  BoundReport report;
  for (std::size_t level = 1; level <= layering.depth(); ++level) {
    const auto& d = decompositions[level];
    const auto iv = trail_interval(d, labels);
    if (!iv) {
      report.noncontiguous_levels.push_back(level);
      continue;
    }
    report.merge(check_successive_sums(d, layering, labels, *iv));
    if (level < 2 || !k) continue;
    for (const auto& [v, e] : d.sigma) {
      if (labels[e] >= iv->lo) {
        report.sigma.push_back({level, v, labels[e], Side::kUpper});
      }
    }
    for (const auto& [v, e] : decompositions[level - 1].sigma) {
      if (labels[e] <= iv->hi) {
        report.sigma.push_back({level, v, labels[e], Side::kLower});
      }
    }
  }
  if (k) {
    report.merge(
        check_p_bounds(*k, level_p_values(g, layering, decompositions, labels)));
  }
  return report;
}

MonotonicityReport check_cross_layer(const Graph& g, const Layering& layering,
                                     std::span<const Label> labels) {
  MonotonicityReport report;
  const std::vector<Label> sums = vertex_sums(g, labels);
  const std::size_t levels = layering.layers.size();
  std::vector<NodeId> argmin(levels);
  std::vector<NodeId> argmax(levels);
  for (std::size_t i = 0; i < levels; ++i) {
    const auto& layer = layering.layers[i];
    argmin[i] = *std::min_element(layer.begin(), layer.end(), [&](NodeId a, NodeId b) {
      return sums[a] < sums[b];
    });
    argmax[i] = *std::max_element(layer.begin(), layer.end(), [&](NodeId a, NodeId b) {
      return sums[a] < sums[b];
    });
  }
  report.root_unique_max = true;
  for (std::size_t i = 1; i < levels; ++i) {
    for (NodeId v : layering.layers[i]) {
      if (sums[v] >= sums[layering.root]) report.root_unique_max = false;
    }
  }
  for (std::size_t j = 0; j < levels; ++j) {
    for (std::size_t i = j + 2; i < levels; ++i) {
      if (sums[argmax[i]] >= sums[argmin[j]]) {
        report.violations.emplace_back(argmax[i], argmin[j]);
      }
    }
  }
  return report;
}

std::optional<std::vector<Label>> exists_antimagic_bruteforce(
    const Graph& g, std::size_t cap) {
  const std::size_t m = g.edge_count();
  if (m > cap) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(m) + " edges exceed the brute-force cap of " +
                    std::to_string(cap));
  }
  std::vector<Label> labels(m);
  std::iota(labels.begin(), labels.end(), Label{1});
  do {
    if (sums_distinct(vertex_sums(g, labels))) return labels;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return std::nullopt;
}

}  // namespace antimagic
