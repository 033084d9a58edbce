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

#include "antimagic/generators.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "antimagic/error.hpp"
#include "antimagic/labeler.hpp"

namespace antimagic {

std::uint64_t Rng::uniform_below(std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t bound = max / n * n;
  std::uint64_t x = engine_();
  while (x >= bound) x = engine_();
  return x % n;
}

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::kBadParameters, what);
}

NodeId node(std::size_t v) { return static_cast<NodeId>(v); }

}  // namespace

std::string describe(const GenSpec& spec) {
  std::ostringstream out;
  switch (spec.family) {
    case Family::kCycle: out << "cycle(" << spec.n << ")"; break;
    case Family::kComplete: out << "complete(" << spec.n << ")"; break;
    case Family::kCompleteBipartite:
      out << "complete_bipartite(" << spec.a << "," << spec.b << ")";
      break;
    case Family::kCirculant: {
      out << "circulant(" << spec.n;
      for (auto d : spec.offsets) out << "," << d;
      out << ")";
      break;
    }
    case Family::kHypercube: out << "hypercube(" << spec.dimension << ")"; break;
    case Family::kPetersen: out << "petersen"; break;
    case Family::kRandomRegular:
      out << "random_regular(" << spec.n << "," << spec.k
          << ",seed=" << spec.seed << (spec.require_connected ? ",connected" : "")
          << ")";
      break;
  }
  return out.str();
}

Family parse_family(const std::string& name) {
  static const std::map<std::string, Family> kNames = {
      {"cycle", Family::kCycle},
      {"complete", Family::kComplete},
      {"complete_bipartite", Family::kCompleteBipartite},
      {"circulant", Family::kCirculant},
      {"hypercube", Family::kHypercube},
      {"petersen", Family::kPetersen},
      {"random_regular", Family::kRandomRegular},
  };
  auto it = kNames.find(name);
  if (it == kNames.end()) bad("unknown family '" + name + "'");
  return it->second;
}

Graph cycle(std::size_t n) {
  if (n < 3) bad("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({node(i), node((i + 1) % n)});
  return Graph(n, std::move(edges));
}

Graph complete(std::size_t n) {
  if (n < 1) bad("complete needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({node(i), node(j)});
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) bad("complete_bipartite needs both sides >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) edges.push_back({node(i), node(a + j)});
  }
  return Graph(a + b, std::move(edges));
}

Graph circulant(std::size_t n, const std::vector<std::size_t>& offsets) {
  if (n < 3) bad("circulant needs n >= 3");
  if (offsets.empty()) bad("circulant needs at least one offset");
  std::set<std::size_t> normalized;
  for (std::size_t d : offsets) {
    const std::size_t r = d % n;
    if (r == 0) bad("circulant offset " + std::to_string(d) + " is 0 mod n");
    if (!normalized.insert(std::min(r, n - r)).second) {
      bad("circulant offsets repeat modulo n (offset " + std::to_string(d) + ")");
    }
  }
  std::vector<Edge> edges;
  for (std::size_t d : normalized) {
    const std::size_t count = 2 * d == n ? n / 2 : n;
    for (std::size_t i = 0; i < count; ++i) {
      edges.push_back({node(i), node((i + d) % n)});
    }
  }
  return Graph(n, std::move(edges));
}

Graph hypercube(std::size_t dimension) {
  if (dimension < 1 || dimension > 20) bad("hypercube needs 1 <= d <= 20");
  const std::size_t n = std::size_t{1} << dimension;
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t bit = 0; bit < dimension; ++bit) {
      const std::size_t y = x ^ (std::size_t{1} << bit);
      if (x < y) edges.push_back({node(x), node(y)});
    }
  }
  return Graph(n, std::move(edges));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (NodeId i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  for (NodeId i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  return Graph(10, std::move(edges));
}

namespace {

bool is_connected(std::size_t n, const std::set<std::pair<NodeId, NodeId>>& edges) {
  if (n == 0) return true;
  std::vector<std::vector<NodeId>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Graph from_pairs(std::size_t n, const std::set<std::pair<NodeId, NodeId>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

// One pairing attempt; false if the leftover stubs can no longer be joined.
bool pair_stubs(std::size_t n, std::size_t k, Rng& rng,
                std::set<std::pair<NodeId, NodeId>>& edges) {
  std::vector<NodeId> stubs;
  stubs.reserve(n * k);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < k; ++j) stubs.push_back(node(v));
  }
  constexpr std::size_t kMaxRounds = 1000;
  for (std::size_t round = 0; round < kMaxRounds && !stubs.empty(); ++round) {
    rng.shuffle(stubs);
    std::map<NodeId, std::size_t> leftover;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      NodeId a = stubs[i];
      NodeId b = stubs[i + 1];
      if (a > b) std::swap(a, b);
      if (a != b && edges.emplace(a, b).second) continue;
      ++leftover[a];
      ++leftover[b];
    }
    if (leftover.empty()) return true;
    bool joinable = false;
    for (auto i = leftover.begin(); i != leftover.end() && !joinable; ++i) {
      for (auto j = std::next(i); j != leftover.end(); ++j) {
        if (!edges.count({i->first, j->first})) {
          joinable = true;
          break;
        }
      }
    }
    if (!joinable) return false;
    stubs.clear();
    for (const auto& [v, count] : leftover) {
      for (std::size_t j = 0; j < count; ++j) stubs.push_back(v);
    }
  }
  return stubs.empty();
}

}  // namespace

Graph random_regular(std::size_t n, std::size_t k, std::uint64_t seed,
                     bool require_connected) {
  if ((n * k) % 2 != 0 || k >= n) {
    throw Error(ErrorCode::kInfeasibleParameters,
                "no simple " + std::to_string(k) + "-regular graph on " +
                    std::to_string(n) + " nodes");
  }
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < kRandomRegularBudget; ++attempt) {
    std::set<std::pair<NodeId, NodeId>> edges;
    if (!pair_stubs(n, k, rng, edges)) continue;
    if (require_connected && !is_connected(n, edges)) continue;
    return from_pairs(n, edges);
  }
  throw Error(ErrorCode::kRejectionBudgetExhausted,
              "random_regular(" + std::to_string(n) + "," + std::to_string(k) +
                  ") exhausted " + std::to_string(kRandomRegularBudget) +
                  " attempts");
}

Graph make_family(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kCycle: return cycle(spec.n);
    case Family::kComplete: return complete(spec.n);
    case Family::kCompleteBipartite: return complete_bipartite(spec.a, spec.b);
    case Family::kCirculant: return circulant(spec.n, spec.offsets);
    case Family::kHypercube: return hypercube(spec.dimension);
    case Family::kPetersen: return petersen();
    case Family::kRandomRegular:
      return random_regular(spec.n, spec.k, spec.seed, spec.require_connected);
  }
  bad("unknown family");
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  std::vector<Edge> edges;
  std::size_t offset = 0;
  for (const auto& g : parts) {
    for (const auto& e : g.edges()) {
      edges.push_back({node(e.u + offset), node(e.v + offset)});
    }
    offset += g.node_count();
  }
  return Graph(offset, std::move(edges));
}

Graph random_connected(std::size_t n, std::uint64_t extra_num,
                       std::uint64_t extra_den, std::uint64_t seed) {
  if (n < 1 || extra_den == 0) bad("random_connected needs n >= 1");
  Rng rng(seed);
  std::vector<NodeId> perm(n);
  for (std::size_t v = 0; v < n; ++v) perm[v] = node(v);
  rng.shuffle(perm);
  std::set<std::pair<NodeId, NodeId>> pairs;
  const auto add = [&](NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    pairs.emplace(a, b);
  };
  for (std::size_t i = 1; i < n; ++i) {
    add(perm[i], perm[rng.uniform_below(i)]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.chance(extra_num, extra_den)) add(node(i), node(j));
    }
  }
  return from_pairs(n, pairs);
}

LevelGraph random_level_graph(std::size_t upper, std::size_t lower,
                              std::uint64_t extra_num, std::uint64_t extra_den,
                              std::uint64_t seed) {
  if (upper < 1 || lower < 1 || extra_den == 0) {
    bad("random_level_graph needs nonempty sides");
  }
  Rng rng(seed);
  std::vector<NodeId> ids(upper + lower);
  for (std::size_t v = 0; v < ids.size(); ++v) ids[v] = node(v);
  rng.shuffle(ids);
  LevelGraph lg;
  lg.upper.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(upper));
  lg.lower.assign(ids.begin() + static_cast<std::ptrdiff_t>(upper), ids.end());
  std::set<std::pair<std::size_t, std::size_t>> chosen;
  for (std::size_t i = 0; i < upper; ++i) {
    chosen.emplace(i, rng.uniform_below(lower));
    for (std::size_t j = 0; j < lower; ++j) {
      if (rng.chance(extra_num, extra_den)) chosen.emplace(i, j);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> order(chosen.begin(), chosen.end());
  rng.shuffle(order);
  EdgeId id = 0;
  for (const auto& [i, j] : order) lg.edges.push_back({id++, lg.upper[i], lg.lower[j]});
  return lg;
}

Graph layered_monotone(std::size_t n, std::uint64_t seed) {
  if (n < 3) bad("layered_monotone needs n >= 3");
  Rng rng(seed);
  constexpr std::size_t kAttempts = 1000;
  for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
    // Layer sizes: a wide first layer keeps the root's degree on top.
    const std::size_t max_depth = std::min<std::size_t>(5, n - 1);
    const std::size_t depth = 1 + rng.uniform_below(max_depth);
    std::vector<std::size_t> size(depth + 1, 1);
    size[0] = 1;
    std::size_t rest = n - 1 - depth;
    const std::size_t first = rest == 0 ? 0 : rest / 2 + rng.uniform_below(rest / 2 + 1);
    size[1] += first;
    rest -= first;
    while (rest > 0) {
      ++size[1 + rng.uniform_below(depth)];
      --rest;
    }
    std::vector<std::vector<NodeId>> layer(depth + 1);
    NodeId next = 0;
    for (std::size_t i = 0; i <= depth; ++i) {
      for (std::size_t j = 0; j < size[i]; ++j) layer[i].push_back(next++);
    }

    std::set<std::pair<NodeId, NodeId>> pairs;
    std::vector<std::size_t> deg(n, 0);
    const auto add = [&](NodeId a, NodeId b) {
      if (a > b) std::swap(a, b);
      if (pairs.emplace(a, b).second) {
        ++deg[a];
        ++deg[b];
      }
    };
    for (std::size_t i = 1; i <= depth; ++i) {
      for (NodeId v : layer[i]) {
        add(v, layer[i - 1][rng.uniform_below(layer[i - 1].size())]);
        // A few random extra edges inside the layer and upward.
        if (rng.chance(1, 3) && layer[i].size() > 1) {
          const NodeId w = layer[i][rng.uniform_below(layer[i].size())];
          if (w != v) add(v, w);
        }
        if (rng.chance(1, 3)) {
          add(v, layer[i - 1][rng.uniform_below(layer[i - 1].size())]);
        }
      }
    }

    bool stuck = false;
    std::size_t deeper_max = 0;
    for (std::size_t i = depth; i >= 1 && !stuck; --i) {
      for (NodeId v : layer[i]) {
        while (deg[v] < deeper_max) {
          std::vector<NodeId> candidates;
          for (NodeId w : layer[i]) {
            if (w != v && !pairs.count({std::min(v, w), std::max(v, w)})) {
              candidates.push_back(w);
            }
          }
          if (candidates.empty()) {
            for (NodeId w : layer[i - 1]) {
              if (!pairs.count({std::min(v, w), std::max(v, w)})) {
                candidates.push_back(w);
              }
            }
          }
          if (candidates.empty()) {
            stuck = true;
            break;
          }
          add(v, candidates[rng.uniform_below(candidates.size())]);
        }
        if (stuck) break;
      }
      for (NodeId v : layer[i]) deeper_max = std::max(deeper_max, deg[v]);
    }
    if (stuck) continue;
    Graph g = from_pairs(n, pairs);
    if (find_valid_root(g)) return g;
  }
  throw Error(ErrorCode::kRejectionBudgetExhausted,
              "layered_monotone found no graph with a valid root");
}

}  // namespace antimagic
