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

#ifndef ANTIMAGIC_LIANG_HPP_
#define ANTIMAGIC_LIANG_HPP_

// Exact search for Liang's matching-plus-S-links cover on small bipartite
// graphs G = (S, T; E) with S-degrees <= 4 and T-degrees <= 3: a matching M
// and node-disjoint paths u-v-w (u, w in S; v in T) such that every
// degree-3 node of T touches an edge of M or of some path.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace antimagic {

struct LiangEdge {
  std::uint32_t s = 0;
  std::uint32_t t = 0;

  friend bool operator==(const LiangEdge&, const LiangEdge&) = default;
  friend auto operator<=>(const LiangEdge&, const LiangEdge&) = default;
};

// S nodes are 0..s_count-1 and T nodes 0..t_count-1, in separate id spaces.
class LiangInstance {
 public:
  std::size_t s_count() const { return s_neighbors_.size(); }
  std::size_t t_count() const { return t_neighbors_.size(); }
  const std::vector<LiangEdge>& edges() const { return edges_; }
  const std::vector<std::uint32_t>& t_neighbors(std::uint32_t t) const {
    return t_neighbors_[t];
  }
  const std::vector<std::uint32_t>& s_neighbors(std::uint32_t s) const {
    return s_neighbors_[s];
  }
  bool has_edge(std::uint32_t s, std::uint32_t t) const;

 private:
  friend LiangInstance validate_instance(std::size_t, std::size_t,
                                         std::vector<LiangEdge>);
  std::vector<LiangEdge> edges_;
  std::vector<std::vector<std::uint32_t>> s_neighbors_;  // ascending
  std::vector<std::vector<std::uint32_t>> t_neighbors_;  // ascending
};

inline constexpr std::size_t kMaxSDegree = 4;
inline constexpr std::size_t kMaxTDegree = 3;

// Throws kSDegreeExceeded, kTDegreeExceeded, kNonBipartiteEdge (an endpoint
// outside its side's id range), kDuplicateEdge.
LiangInstance validate_instance(std::size_t s_count, std::size_t t_count,
                                std::vector<LiangEdge> edges);

struct SLink {
  std::uint32_t u = 0;  // S
  std::uint32_t v = 0;  // T
  std::uint32_t w = 0;  // S

  friend bool operator==(const SLink&, const SLink&) = default;
};

struct LiangCertificate {
  std::vector<LiangEdge> matching;
  std::vector<SLink> links;
};

// literal: only the links are mutually node-disjoint and M is a matching.
// strict: additionally no node of M lies on a link.
enum class LiangMode { kLiteral, kStrict };

std::string_view liang_mode_name(LiangMode mode);
LiangMode parse_liang_mode(std::string_view name);

inline constexpr std::size_t kDefaultLiangCap = 16;

// Backtracking over degree-3 T nodes in ascending id; returns the first
// certificate found, nullopt once the search space is exhausted.
// Throws kTooLarge when |S| + |T| > cap.
std::optional<LiangCertificate> find_liang_certificate(
    const LiangInstance& instance, LiangMode mode,
    std::size_t cap = kDefaultLiangCap);

struct LiangVerdict {
  bool ok = false;
  std::vector<std::string> problems;
};

LiangVerdict verify_liang_certificate(const LiangInstance& instance,
                                      const LiangCertificate& certificate,
                                      LiangMode mode);

// Random instance within the degree caps: every candidate (s, t) pair is
// tried in shuffled order and kept with probability 3/4 when both
// endpoints still have room.
LiangInstance random_liang_instance(std::size_t s_count, std::size_t t_count,
                                    std::uint64_t seed);

}  // namespace antimagic

#endif  // ANTIMAGIC_LIANG_HPP_
