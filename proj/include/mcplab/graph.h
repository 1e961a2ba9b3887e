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

// Colored bipartite graphs, matchings and color profiles.
//
// A graph has two sides A and B of n vertices each, indexed 0..n-1. Every
// edge carries exactly one color in 1..q. Vertex sets passed through the
// public API are sorted ascending index vectors.

#ifndef MCPLAB_GRAPH_H_
#define MCPLAB_GRAPH_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcplab {

using Color = int;
using VertexSet = std::vector<int>;

inline constexpr int kMaxColors = 255;

// Color probabilities alpha_1..alpha_q.
class ColorSpec {
 public:
  // Throws kInvalidColorSpec unless every alpha is positive and they sum to 1
  // within 1e-9.
  explicit ColorSpec(std::vector<double> alphas);

  static ColorSpec Uniform(int q);

  int q() const { return static_cast<int>(alphas_.size()); }
  const std::vector<double>& alphas() const { return alphas_; }
  double alpha(Color c) const { return alphas_[c - 1]; }
  double alpha_min() const;
  // Lowest-index color attaining alpha_min.
  Color rarest_color() const;

  friend bool operator==(const ColorSpec&, const ColorSpec&) = default;

 private:
  std::vector<double> alphas_;
};

struct Edge {
  int a = 0;
  int b = 0;
  Color color = 1;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class ColoredBipartiteGraph {
 public:
  // Validates indices and colors, rejects repeated (a, b) pairs and builds
  // the per-color adjacency indexes. `colors`, when given, must have q
  // entries; it records the sampling distribution and has no effect on
  // structure.
  static ColoredBipartiteGraph Build(int n, int q, std::span<const Edge> edges,
                                     std::optional<ColorSpec> colors = {});

  int n() const { return n_; }
  int q() const { return q_; }
  int64_t num_edges() const { return static_cast<int64_t>(edges_.size()); }
  // Sorted by (a, b).
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<ColorSpec>& color_spec() const { return colors_; }

  // Color-c neighbors of A-vertex a (B indices, ascending).
  std::span<const int> NeighborsOfA(int a, Color c) const {
    const size_t slot = static_cast<size_t>(a) * q_ + (c - 1);
    return {a_adj_.data() + a_offsets_[slot],
            a_adj_.data() + a_offsets_[slot + 1]};
  }
  // Color-c neighbors of B-vertex b (A indices, ascending).
  std::span<const int> NeighborsOfB(int b, Color c) const {
    const size_t slot = static_cast<size_t>(b) * q_ + (c - 1);
    return {b_adj_.data() + b_offsets_[slot],
            b_adj_.data() + b_offsets_[slot + 1]};
  }
  int DegreeA(int a, Color c) const {
    return static_cast<int>(NeighborsOfA(a, c).size());
  }
  int DegreeB(int b, Color c) const {
    return static_cast<int>(NeighborsOfB(b, c).size());
  }

  // Color of edge (a, b), or nullopt when absent.
  std::optional<Color> EdgeColor(int a, int b) const;
  bool HasEdge(int a, int b) const { return EdgeColor(a, b).has_value(); }

  // The same graph with the roles of A and B exchanged.
  ColoredBipartiteGraph Transposed() const;

  // Returns the graph with (a, b) removed, or a copy if absent.
  ColoredBipartiteGraph WithoutEdge(int a, int b) const;
  // Throws kDuplicateEdge if (a, b) already exists.
  ColoredBipartiteGraph WithEdge(Edge e) const;

  friend bool operator==(const ColoredBipartiteGraph& x,
                         const ColoredBipartiteGraph& y) {
    return x.n_ == y.n_ && x.q_ == y.q_ && x.edges_ == y.edges_ &&
           x.colors_ == y.colors_;
  }

 private:
  ColoredBipartiteGraph() = default;

  int n_ = 0;
  int q_ = 1;
  std::vector<Edge> edges_;
  std::optional<ColorSpec> colors_;
  std::vector<int64_t> row_start_;  // index into edges_ per A-vertex
  std::vector<int64_t> a_offsets_;  // (a, color) -> range of a_adj_
  std::vector<int> a_adj_;
  std::vector<int64_t> b_offsets_;
  std::vector<int> b_adj_;
};

// Partial injective assignment A -> B.
class Matching {
 public:
  static constexpr int kUnmatched = -1;

  explicit Matching(int n) : assign_(n, kUnmatched) {}
  explicit Matching(std::vector<int> assign) : assign_(std::move(assign)) {}
  static Matching FromPairs(int n, std::span<const std::pair<int, int>> pairs);

  int n() const { return static_cast<int>(assign_.size()); }
  int partner(int a) const { return assign_[a]; }
  bool is_matched(int a) const { return assign_[a] != kUnmatched; }
  const std::vector<int>& assign() const { return assign_; }
  int size() const;
  bool IsPerfect() const;
  // B -> A; kUnmatched where b is free. Assumes injectivity.
  std::vector<int> Inverse() const;
  std::vector<std::pair<int, int>> Pairs() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<int> assign_;
};

struct ColorProfile {
  std::vector<int> counts;

  int q() const { return static_cast<int>(counts.size()); }
  int Sum() const;
  int operator[](Color c) const { return counts[c - 1]; }
  // "2,0,1"
  std::string ToString(char sep = ',') const;
  // Throws kParseError on malformed input.
  static ColorProfile Parse(std::string_view text);
  static ColorProfile Corner(int q, int n, Color c);

  friend auto operator<=>(const ColorProfile&, const ColorProfile&) = default;
};

// counts[c-1] = number of matched pairs whose edge has color c. Throws
// kInvalidMatching if a matched pair is not an edge of g.
ColorProfile ProfileOf(const ColoredBipartiteGraph& g, const Matching& m);

// N_c(S) for S a set of A-vertices.
VertexSet ColorNeighborhood(const ColoredBipartiteGraph& g,
                            std::span<const int> s, Color c);
// Same, for S a set of B-vertices (returns A indices).
VertexSet ColorNeighborhoodOfB(const ColoredBipartiteGraph& g,
                               std::span<const int> s, Color c);

// M(S). Throws kUnmatchedVertex naming the first unmatched a in S.
VertexSet MatchedImage(const Matching& m, std::span<const int> s);

// e_c(S, T): number of color-c edges between S (A side) and T (B side).
int64_t ColorCutCount(const ColoredBipartiteGraph& g, std::span<const int> s,
                      std::span<const int> t, Color c);

// Text format:
//   n q
//   alpha_1 ... alpha_q        (optional)
//   a b c                      (one per edge, sorted by (a, b))
// Lines starting with '#' are comments.
std::string SerializeGraph(const ColoredBipartiteGraph& g);
// Throws kParseError (with line number) or the Build() validation errors.
ColoredBipartiteGraph ParseGraph(std::string_view text);

}  // namespace mcplab

#endif  // MCPLAB_GRAPH_H_
