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

#ifndef ANTIMAGIC_GENERATORS_HPP_
#define ANTIMAGIC_GENERATORS_HPP_

// Graph families for tests and batch runs.
//
// Randomness: std::mt19937_64 seeded with the 64-bit seed. Bounded integers
// are drawn by rejection: with B = floor((2^64 - 1) / n) * n, draws x >= B
// are discarded and x mod n is returned. Shuffles are Fisher-Yates from the
// last position down, swapping position i with uniform_below(i + 1). Both
// are fixed here (rather than left to <random> distributions, whose output
// is implementation-defined) so corpora reproduce across platforms.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/trails.hpp"

namespace antimagic {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, n); n > 0.
  std::uint64_t uniform_below(std::uint64_t n);
  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) {
    return uniform_below(den) < num;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i-- > 1;) {
      std::swap(items[i], items[uniform_below(i + 1)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class Family {
  kCycle,
  kComplete,
  kCompleteBipartite,
  kCirculant,
  kHypercube,
  kPetersen,
  kRandomRegular,
};

struct GenSpec {
  Family family = Family::kCycle;
  std::size_t n = 0;                  // cycle, complete, circulant, random
  std::size_t k = 0;                  // random_regular degree
  std::size_t a = 0;                  // complete_bipartite sides
  std::size_t b = 0;
  std::vector<std::size_t> offsets;   // circulant
  std::size_t dimension = 0;          // hypercube
  std::uint64_t seed = 0;             // random_regular
  bool require_connected = false;     // random_regular
};

// Short name such as "cycle(5)" or "random_regular(20,4,seed=7)".
std::string describe(const GenSpec& spec);

// Family name as used on the command line; throws kBadParameters if unknown.
Family parse_family(const std::string& name);

// Throws kBadParameters (and the random_regular errors).
Graph make_family(const GenSpec& spec);

Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph circulant(std::size_t n, const std::vector<std::size_t>& offsets);
Graph hypercube(std::size_t dimension);
Graph petersen();

inline constexpr std::size_t kRandomRegularBudget = 10000;

// Stub pairing with local re-pairing of the stubs that formed loops or
// repeated edges; an attempt that gets stuck (or is disconnected when
// connectivity is required) is thrown away whole. Edges come out sorted.
// Throws kInfeasibleParameters, kRejectionBudgetExhausted.
Graph random_regular(std::size_t n, std::size_t k, std::uint64_t seed,
                     bool require_connected = false);

// Components in order; node ids shifted so each graph occupies a block.
Graph disjoint_union(const std::vector<Graph>& parts);

// Connected graph on n nodes: random recursive tree plus each remaining pair
// independently with probability extra_num / extra_den.
Graph random_connected(std::size_t n, std::uint64_t extra_num,
                       std::uint64_t extra_den, std::uint64_t seed);

// Bipartite level graph with every upper node adjacent to at least one lower
// node. Node ids are a random permutation of 0..upper+lower-1.
LevelGraph random_level_graph(std::size_t upper, std::size_t lower,
                              std::uint64_t extra_num, std::uint64_t extra_den,
                              std::uint64_t seed);

// Connected graph built layer by layer with degrees raised so that every
// layer's minimum degree covers the maximum degree of all deeper layers.
// Retries internally; throws kRejectionBudgetExhausted if no attempt has a
// valid root.
Graph layered_monotone(std::size_t n, std::uint64_t seed);

}  // namespace antimagic

#endif  // ANTIMAGIC_GENERATORS_HPP_
