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

#include "mcplab/matcher.h"

#include <algorithm>
#include <limits>
#include <vector>

#include "mcplab/errors.h"

namespace mcplab {
namespace {

// CSR adjacency of the color-restricted subgraph, A side.
struct Subgraph {
  std::vector<int> offsets;
  std::vector<int> adj;

  std::span<const int> Neighbors(int a) const {
    return {adj.data() + offsets[a], adj.data() + offsets[a + 1]};
  }
};

Subgraph Restrict(const ColoredBipartiteGraph& g,
                  std::span<const Color> allowed) {
  std::vector<char> keep(g.q() + 1, 0);
  for (Color c : allowed) {
    if (c < 1 || c > g.q()) {
      throw Error(ErrorCode::kColorOutOfRange, "color " + std::to_string(c));
    }
    keep[c] = 1;
  }
  Subgraph s;
  s.offsets.assign(g.n() + 1, 0);
  s.adj.reserve(g.edges().size());
  // edges() is sorted by (a, b), so each row is ascending in b.
  for (const Edge& e : g.edges()) {
    if (keep[e.color]) {
      s.adj.push_back(e.b);
      ++s.offsets[e.a + 1];
    }
  }
  for (int a = 0; a < g.n(); ++a) s.offsets[a + 1] += s.offsets[a];
  return s;
}

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const Subgraph& sub, int n)
      : sub_(sub),
        n_(n),
        match_a_(n, Matching::kUnmatched),
        match_b_(n, Matching::kUnmatched),
        dist_(n),
        iter_(n) {}

  void Run() {
    while (Bfs()) {
      for (int a = 0; a < n_; ++a) iter_[a] = sub_.offsets[a];
      for (int a = 0; a < n_; ++a) {
        if (match_a_[a] == Matching::kUnmatched) Augment(a);
      }
    }
  }

  const std::vector<int>& match_a() const { return match_a_; }
  const std::vector<int>& match_b() const { return match_b_; }

 private:
  bool Bfs() {
    std::vector<int> queue;
    queue.reserve(n_);
    for (int a = 0; a < n_; ++a) {
      if (match_a_[a] == Matching::kUnmatched) {
        dist_[a] = 0;
        queue.push_back(a);
      } else {
        dist_[a] = kInf;
      }
    }
    bool found = false;
    for (size_t head = 0; head < queue.size(); ++head) {
      const int a = queue[head];
      for (int b : sub_.Neighbors(a)) {
        const int next = match_b_[b];
        if (next == Matching::kUnmatched) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[a] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  }

  // Iterative layered DFS from free vertex `root`.
  bool Augment(int root) {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int a = stack.back();
      if (iter_[a] == sub_.offsets[a + 1]) {
        dist_[a] = kInf;  // dead end for this phase
        stack.pop_back();
        continue;
      }
      const int b = sub_.adj[iter_[a]];
      const int next = match_b_[b];
      if (next == Matching::kUnmatched) {
        // Flip the path recorded on the stack.
        for (size_t i = stack.size(); i-- > 0;) {
          const int u = stack[i];
          const int v = sub_.adj[iter_[u]];
          match_a_[u] = v;
          match_b_[v] = u;
        }
        return true;
      }
      if (dist_[next] == dist_[a] + 1) {
        stack.push_back(next);
      } else {
        ++iter_[a];
      }
    }
    return false;
  }

  const Subgraph& sub_;
  int n_;
  std::vector<int> match_a_;
  std::vector<int> match_b_;
  std::vector<int> dist_;
  std::vector<int> iter_;
};

// A-vertices reachable from free A-vertices by alternating paths.
VertexSet HallWitness(const Subgraph& sub, const std::vector<int>& match_a,
                      const std::vector<int>& match_b) {
  const int n = static_cast<int>(match_a.size());
  std::vector<char> seen(n, 0);
  std::vector<int> queue;
  for (int a = 0; a < n; ++a) {
    if (match_a[a] == Matching::kUnmatched) {
      seen[a] = 1;
      queue.push_back(a);
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    for (int b : sub.Neighbors(queue[head])) {
      const int next = match_b[b];
      if (next != Matching::kUnmatched && !seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  VertexSet out;
  for (int a = 0; a < n; ++a) {
    if (seen[a]) out.push_back(a);
  }
  return out;
}

std::vector<Color> AllColors(int q) {
  std::vector<Color> all(q);
  for (int c = 1; c <= q; ++c) all[c - 1] = c;
  return all;
}

}  // namespace

Matching MaxMatching(const ColoredBipartiteGraph& g,
                     std::span<const Color> allowed) {
  if (allowed.empty()) {
    throw Error(ErrorCode::kColorOutOfRange, "empty allowed color set");
  }
  Subgraph sub = Restrict(g, allowed);
  HopcroftKarp hk(sub, g.n());
  hk.Run();
  return Matching(hk.match_a());
}

Matching MaxMatching(const ColoredBipartiteGraph& g) {
  return MaxMatching(g, AllColors(g.q()));
}

PerfectMatchingResult MonochromaticPerfectMatching(
    const ColoredBipartiteGraph& g, Color c) {
  const Color allowed[] = {c};
  Subgraph sub = Restrict(g, allowed);
  HopcroftKarp hk(sub, g.n());
  hk.Run();
  Matching m(hk.match_a());
  if (m.IsPerfect()) return m;
  return NoPerfectMatching{HallWitness(sub, hk.match_a(), hk.match_b()),
                           m.size()};
}

std::optional<MatchingViolation> VerifyMatching(const ColoredBipartiteGraph& g,
                                                const Matching& m,
                                                bool require_perfect) {
  using Kind = MatchingViolation::Kind;
  if (m.n() != g.n()) {
    return MatchingViolation{Kind::kWrongSize, -1, -1,
                             "matching covers " + std::to_string(m.n()) +
                                 " A-vertices, graph has " +
                                 std::to_string(g.n())};
  }
  std::vector<int> owner(g.n(), Matching::kUnmatched);
  for (int a = 0; a < m.n(); ++a) {
    const int b = m.partner(a);
    if (b == Matching::kUnmatched) {
      if (require_perfect) {
        return MatchingViolation{Kind::kUnmatchedA, a, -1,
                                 "A-vertex " + std::to_string(a) +
                                     " unmatched"};
      }
      continue;
    }
    if (b < 0 || b >= g.n()) {
      return MatchingViolation{Kind::kIndexOutOfRange, a, b,
                               "B index " + std::to_string(b) +
                                   " out of range"};
    }
    if (!g.HasEdge(a, b)) {
      return MatchingViolation{Kind::kNotAnEdge, a, b,
                               "(" + std::to_string(a) + "," +
                                   std::to_string(b) + ") is not an edge"};
    }
    if (owner[b] != Matching::kUnmatched) {
      return MatchingViolation{Kind::kReusedB, a, b,
                               "B-vertex " + std::to_string(b) +
                                   " reused by A-vertices " +
                                   std::to_string(owner[b]) + " and " +
                                   std::to_string(a)};
    }
    owner[b] = a;
  }
  return std::nullopt;
}

}  // namespace mcplab
