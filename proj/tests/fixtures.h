// Copyright 2026 The mcplab Authors
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

// Shared fixtures and brute-force oracles for the test suites. Nothing here
// calls into the code under test beyond graph construction.

#ifndef MCPLAB_TESTS_FIXTURES_H_
#define MCPLAB_TESTS_FIXTURES_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "mcplab/graph.h"

namespace mcplab::testing {

// n=2, q=2: color-1 diagonal, color-2 anti-diagonal.
inline ColoredBipartiteGraph F1() {
  const Edge e[] = {{0, 0, 1}, {1, 1, 1}, {0, 1, 2}, {1, 0, 2}};
  return ColoredBipartiteGraph::Build(2, 2, e);
}

inline ColoredBipartiteGraph F2() {
  const Edge e[] = {{0, 0, 1}, {0, 1, 1}, {1, 0, 2}, {1, 1, 1}};
  return ColoredBipartiteGraph::Build(2, 2, e);
}

inline ColoredBipartiteGraph F3() {
  const Edge e[] = {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {0, 1, 2}, {1, 0, 1}};
  return ColoredBipartiteGraph::Build(3, 2, e);
}

inline ColoredBipartiteGraph Complete(int n, int q, Color c) {
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) e.push_back({a, b, c});
  }
  return ColoredBipartiteGraph::Build(n, q, e);
}

inline ColoredBipartiteGraph Edgeless(int n, int q) {
  return ColoredBipartiteGraph::Build(n, q, {});
}

// Independent generator (std::bernoulli / uniform_int), not the sampler.
inline ColoredBipartiteGraph RandomGraph(std::mt19937_64& rng, int n, int q,
                                         double p) {
  std::bernoulli_distribution keep(p);
  std::uniform_int_distribution<int> color(1, q);
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (keep(rng)) e.push_back({a, b, color(rng)});
    }
  }
  return ColoredBipartiteGraph::Build(n, q, e);
}

// Every perfect matching as an A->B permutation, via next_permutation.
inline std::vector<std::vector<int>> AllPerfectMatchings(
    const ColoredBipartiteGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < g.n() && ok; ++a) ok = g.HasEdge(a, perm[a]);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Maximum matching size by exhaustive search over partial injections.
inline int BruteForceMaxMatching(const ColoredBipartiteGraph& g,
                                 const std::vector<char>& allowed_color) {
  const int n = g.n();
  int best = 0;
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int a, int size) -> void {
    if (size + (n - a) <= best) return;
    if (a == n) {
      best = std::max(best, size);
      return;
    }
    self(self, a + 1, size);
    for (int b = 0; b < n; ++b) {
      auto c = g.EdgeColor(a, b);
      if (!used[b] && c && allowed_color[*c]) {
        used[b] = 1;
        self(self, a + 1, size + 1);
        used[b] = 0;
      }
    }
  };
  rec(rec, 0, 0);
  return best;
}

// Hall's condition for the color-c subgraph by enumerating all A-subsets.
inline bool SatisfiesHall(const ColoredBipartiteGraph& g, Color c) {
  const int n = g.n();
  for (uint32_t s = 1; s < (1u << n); ++s) {
    uint32_t nb = 0;
    for (int a = 0; a < n; ++a) {
      if (s >> a & 1) {
        for (int b = 0; b < n; ++b) {
          if (g.EdgeColor(a, b) == c) nb |= 1u << b;
        }
      }
    }
    if (__builtin_popcount(nb) < __builtin_popcount(s)) return false;
  }
  return true;
}

// Sorted index list of a bitmask.
inline std::vector<int> Bits(uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

// All k-subsets of [0, n) as sorted lists, lexicographic order.
inline std::vector<std::vector<int>> Subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for (uint32_t m = 0; m < (1u << n); ++m) {
    if (__builtin_popcount(m) == k) out.push_back(Bits(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Double-loop witness search: every (first, second) pair of fixed-size
// subsets in lexicographic order of the sorted index lists; first fit wins.
template <typename Pred>
std::optional<std::pair<std::vector<int>, std::vector<int>>> NaiveSearch(
    int n, int k1, int k2, Pred pred) {
  if (k1 > n || k2 > n) return std::nullopt;
  for (const auto& first : Subsets(n, k1)) {
    for (const auto& second : Subsets(n, k2)) {
      if (pred(first, second)) return std::make_pair(first, second);
    }
  }
  return std::nullopt;
}

}  // namespace mcplab::testing

#endif  // MCPLAB_TESTS_FIXTURES_H_
