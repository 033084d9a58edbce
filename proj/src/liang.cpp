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

#include "antimagic/liang.hpp"

#include <algorithm>
#include <set>

#include "antimagic/error.hpp"
#include "antimagic/generators.hpp"

namespace antimagic {

bool LiangInstance::has_edge(std::uint32_t s, std::uint32_t t) const {
  if (s >= s_count() || t >= t_count()) return false;
  const auto& row = s_neighbors_[s];
  return std::binary_search(row.begin(), row.end(), t);
}

LiangInstance validate_instance(std::size_t s_count, std::size_t t_count,
                                std::vector<LiangEdge> edges) {
  LiangInstance inst;
  inst.s_neighbors_.resize(s_count);
  inst.t_neighbors_.resize(t_count);
  std::set<LiangEdge> seen;
  for (const auto& e : edges) {
    if (e.s >= s_count || e.t >= t_count) {
      throw Error(ErrorCode::kNonBipartiteEdge,
                  "edge (" + std::to_string(e.s) + "," + std::to_string(e.t) +
                      ") does not join S to T");
    }
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge (" + std::to_string(e.s) + "," +
                      std::to_string(e.t) + ")");
    }
    inst.s_neighbors_[e.s].push_back(e.t);
    inst.t_neighbors_[e.t].push_back(e.s);
  }
  for (std::uint32_t s = 0; s < s_count; ++s) {
    if (inst.s_neighbors_[s].size() > kMaxSDegree) {
      throw Error(ErrorCode::kSDegreeExceeded,
                  "S node " + std::to_string(s) + " has degree " +
                      std::to_string(inst.s_neighbors_[s].size()));
    }
    std::sort(inst.s_neighbors_[s].begin(), inst.s_neighbors_[s].end());
  }
  for (std::uint32_t t = 0; t < t_count; ++t) {
    if (inst.t_neighbors_[t].size() > kMaxTDegree) {
      throw Error(ErrorCode::kTDegreeExceeded,
                  "T node " + std::to_string(t) + " has degree " +
                      std::to_string(inst.t_neighbors_[t].size()));
    }
    std::sort(inst.t_neighbors_[t].begin(), inst.t_neighbors_[t].end());
  }
  inst.edges_ = std::move(edges);
  return inst;
}

std::string_view liang_mode_name(LiangMode mode) {
  return mode == LiangMode::kLiteral ? "literal" : "strict";
}

LiangMode parse_liang_mode(std::string_view name) {
  if (name == "literal") return LiangMode::kLiteral;
  if (name == "strict") return LiangMode::kStrict;
  throw Error(ErrorCode::kBadParameters,
              "unknown liang mode '" + std::string(name) + "'");
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const LiangInstance& inst, LiangMode mode)
      : inst_(inst),
        strict_(mode == LiangMode::kStrict),
        s_matched_(inst.s_count(), false),
        s_linked_(inst.s_count(), false),
        t_covered_(inst.t_count(), false) {
    for (std::uint32_t t = 0; t < inst.t_count(); ++t) {
      if (inst.t_neighbors(t).size() == kMaxTDegree) targets_.push_back(t);
    }
  }

  std::optional<LiangCertificate> run() {
    if (!extend(0)) return std::nullopt;
    return cert_;
  }

 private:
  bool extend(std::size_t index) {
    if (index == targets_.size()) return true;
    const std::uint32_t t = targets_[index];
    if (t_covered_[t]) return extend(index + 1);
    const auto& nbrs = inst_.t_neighbors(t);
    t_covered_[t] = true;

    for (std::uint32_t s : nbrs) {
      if (s_matched_[s] || (strict_ && s_linked_[s])) continue;
      s_matched_[s] = true;
      cert_.matching.push_back({s, t});
      if (extend(index + 1)) return true;
      cert_.matching.pop_back();
      s_matched_[s] = false;
    }
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        const std::uint32_t u = nbrs[a];
        const std::uint32_t w = nbrs[b];
        if (s_linked_[u] || s_linked_[w]) continue;
        if (strict_ && (s_matched_[u] || s_matched_[w])) continue;
        s_linked_[u] = s_linked_[w] = true;
        cert_.links.push_back({u, t, w});
        if (extend(index + 1)) return true;
        cert_.links.pop_back();
        s_linked_[u] = s_linked_[w] = false;
      }
    }
    t_covered_[t] = false;
    return false;
  }

  const LiangInstance& inst_;
  bool strict_;
  std::vector<std::uint32_t> targets_;
  std::vector<bool> s_matched_;
  std::vector<bool> s_linked_;
  std::vector<bool> t_covered_;
  LiangCertificate cert_;
};

}  // namespace

std::optional<LiangCertificate> find_liang_certificate(
    const LiangInstance& instance, LiangMode mode, std::size_t cap) {
  if (instance.s_count() + instance.t_count() > cap) {
    throw Error(ErrorCode::kTooLarge,
                "instance has " +
                    std::to_string(instance.s_count() + instance.t_count()) +
                    " nodes, cap is " + std::to_string(cap));
  }
  return CoverSearch(instance, mode).run();
}

LiangVerdict verify_liang_certificate(const LiangInstance& instance,
                                      const LiangCertificate& cert,
                                      LiangMode mode) {
  LiangVerdict verdict;
  auto fail = [&](std::string why) { verdict.problems.push_back(std::move(why)); };
  const auto edge_name = [](std::uint32_t s, std::uint32_t t) {
    return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
  };

  std::set<std::uint32_t> m_s, m_t;
  for (const auto& e : cert.matching) {
    if (!instance.has_edge(e.s, e.t)) fail("M edge " + edge_name(e.s, e.t) + " missing");
    if (!m_s.insert(e.s).second) fail("M repeats S node " + std::to_string(e.s));
    if (!m_t.insert(e.t).second) fail("M repeats T node " + std::to_string(e.t));
  }
  std::set<std::uint32_t> l_s, l_t;
  for (const auto& link : cert.links) {
    if (link.u == link.w) fail("link with equal ends at S node " + std::to_string(link.u));
    if (!instance.has_edge(link.u, link.v)) fail("link edge " + edge_name(link.u, link.v) + " missing");
    if (!instance.has_edge(link.w, link.v)) fail("link edge " + edge_name(link.w, link.v) + " missing");
    if (!l_s.insert(link.u).second || (link.u != link.w && !l_s.insert(link.w).second)) {
      fail("links share an S node");
    }
    if (!l_t.insert(link.v).second) fail("links share T node " + std::to_string(link.v));
  }
  if (mode == LiangMode::kStrict) {
    for (auto s : m_s) {
      if (l_s.count(s)) fail("S node " + std::to_string(s) + " is on M and a link");
    }
    for (auto t : m_t) {
      if (l_t.count(t)) fail("T node " + std::to_string(t) + " is on M and a link");
    }
  }
  for (std::uint32_t t = 0; t < instance.t_count(); ++t) {
    if (instance.t_neighbors(t).size() != kMaxTDegree) continue;
    if (!m_t.count(t) && !l_t.count(t)) fail("T node " + std::to_string(t) + " uncovered");
  }
  verdict.ok = verdict.problems.empty();
  return verdict;
}

LiangInstance random_liang_instance(std::size_t s_count, std::size_t t_count,
                                    std::uint64_t seed) {
  Rng rng(seed);
  std::vector<LiangEdge> candidates;
  for (std::uint32_t s = 0; s < s_count; ++s) {
    for (std::uint32_t t = 0; t < t_count; ++t) candidates.push_back({s, t});
  }
  rng.shuffle(candidates);
  std::vector<std::size_t> s_deg(s_count, 0), t_deg(t_count, 0);
  std::vector<LiangEdge> edges;
  for (const auto& e : candidates) {
    if (s_deg[e.s] >= kMaxSDegree || t_deg[e.t] >= kMaxTDegree) continue;
    if (!rng.chance(3, 4)) continue;
    ++s_deg[e.s];
    ++t_deg[e.t];
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  return validate_instance(s_count, t_count, std::move(edges));
}

}  // namespace antimagic
