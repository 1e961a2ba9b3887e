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

// Structural predicates of randomly colored bipartite graphs: constants of
// the asymptotic analysis, isolated vertices per color, and exhaustive
// witness searches for the low-degree, high-degree, dense-cut and empty-cut
// events on small graphs.
//
// Searches enumerate subsets as sorted index lists in lexicographic order and
// return the lexicographically least witness tuple. They require n <= 14.

#ifndef MCPLAB_STRUCTURE_AUDIT_H_
#define MCPLAB_STRUCTURE_AUDIT_H_

#include <optional>

#include "mcplab/graph.h"

namespace mcplab {

inline constexpr int kWitnessMaxN = 14;

// All logarithms natural.
struct StructureConstants {
  double low_degree_set_coeff = 0;  // 10 ln(e q)
  double bad_set_coeff = 0;         // low_degree_set_coeff + 1
  double removed_set_coeff = 0;     // bad_set_coeff + 1
  double degree_cap = 0;            // 10 ln n / ln ln n
  double min_source_degree = 0;     // ln n / (10 q)
  double small_set_coeff = 0;       // density_coeff * alpha_min^2 / 8
  double dense_set_coeff = 0;       // set-size factor of the dense-cut event
  double density_coeff = 0;         // caller supplied
  double expansion_factor = 0;      // ln n / (25 q)
  double expansion_cap = 0;         // alpha_min^2 n / (200 q ln n)
  double stop_size = 0;             // alpha_min^2 n / (5000 q^2)
};

// dense_set_coeff == 0 selects removed_set_coeff, the value the
// absorption argument uses. Throws kDomainError for n < 3, q < 1, alpha_min
// outside (0, 1], density_coeff <= 0 or dense_set_coeff < 0.
StructureConstants DefaultConstants(int n, int q, double alpha_min,
                                    double density_coeff = 10.0,
                                    double dense_set_coeff = 0.0);

struct IsolatedVertices {
  VertexSet a_side;
  VertexSet b_side;

  bool empty() const { return a_side.empty() && b_side.empty(); }
  int total() const {
    return static_cast<int>(a_side.size() + b_side.size());
  }
};

// Vertices with no color-c edge. Any entry rules out the color-c corner
// profile (n at c, 0 elsewhere).
IsolatedVertices IsolatedColorVertices(const ColoredBipartiteGraph& g, Color c);

struct LowDegreeWitness {
  VertexSet x;
  VertexSet s;
  VertexSet t;
};

// X subset of S subset of A, T subset of B, |S| >= s_size, |T| >= t_size,
// |X| = x_size, every vertex of X with fewer than deg_cut color-c neighbors
// in T. Only T is enumerated: the condition on X is per vertex, so for each T
// the lowest qualifying indices form the least X. S is always A.
std::optional<LowDegreeWitness> FindLowDegreeWitness(
    const ColoredBipartiteGraph& g, Color c, int s_size, int t_size, int x_size,
    double deg_cut);

struct HighDegreeWitness {
  VertexSet x;
  VertexSet y;
};

// X subset of A, Y subset of B, |X| = x_size, |Y| = y_size, every vertex of X
// with at least k color-c neighbors in Y.
std::optional<HighDegreeWitness> FindHighDegreeWitness(
    const ColoredBipartiteGraph& g, Color c, int x_size, int y_size, double k);

struct CutWitness {
  VertexSet s;
  VertexSet t;
  // False for witnesses from the greedy search, which may miss witnesses.
  bool exhaustive = true;
};

// |S| = s_size, |T| = t_size, e_c(S, T) >= min_edges.
std::optional<CutWitness> FindDenseCutWitness(const ColoredBipartiteGraph& g,
                                              Color c, int s_size, int t_size,
                                              double min_edges);

// |S| >= s_size, |T| >= t_size, e_c(S, T) = 0. The returned sets have exactly
// the requested sizes.
std::optional<CutWitness> FindEmptyCutWitness(const ColoredBipartiteGraph& g,
                                              Color c, int s_size, int t_size);

// Greedy peeling for any n: drop the vertex with the most color-c edges
// across the cut (ties: lowest index, A before B) until the cut is empty.
// Returns the surviving sets if large enough. A nullopt proves nothing.
std::optional<CutWitness> FindEmptyCutWitnessGreedy(
    const ColoredBipartiteGraph& g, Color c, int s_size, int t_size);

}  // namespace mcplab

#endif  // MCPLAB_STRUCTURE_AUDIT_H_
