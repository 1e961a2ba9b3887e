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

// Diagnostic reconstruction of the vertex-set machinery behind the
// recoloring argument: well-connected source vertices, the greedy absorption
// of poorly connected ones, and the layered alternating expansion from an
// anchor. The solver never uses this; it reports how closely a concrete graph
// follows the asymptotic picture.
//
// For source color c and perfect matching M, with A_c / B_c the endpoints of
// color-c matching edges:
//   high_degree   = {a in A_c : |N_c(a) & B_c| >= min_source_degree}
//   low_capture   = {a in A_c : |N_c(a) & M(A_c \ high_degree)| <= degree_cap}
//   initial_bad   = A_c \ (high_degree & low_capture)
//   absorbed      = closure of initial_bad under adding any a in A_c with
//                   |N_c(a) & M(absorbed)| >= degree_cap
//   retained      = A_c \ absorbed
//   X_0 = {anchor}, Y_i = N_c(X_i),
//   X_{i+1} = (M^-1(Y_i) \ (X_0 u ... u X_i)) & retained
// The backward side runs the same construction from M(anchor) with A and B
// exchanged.

#ifndef MCPLAB_EXPANSION_H_
#define MCPLAB_EXPANSION_H_

#include <optional>
#include <vector>

#include "mcplab/graph.h"
#include "mcplab/structure_audit.h"

namespace mcplab {

struct SideTrace {
  VertexSet source_side;
  VertexSet high_degree;
  VertexSet low_capture;
  VertexSet initial_bad;
  // |A_c \ (high_degree u low_capture)|: the set difference taken with a
  // union, kept alongside for comparison.
  int initial_bad_union_size = 0;
  VertexSet absorbed;
  int absorption_steps = 0;
  VertexSet retained;

  int anchor = -1;
  // When false the layers below ran unrestricted over source_side.
  bool anchor_in_retained = false;

  std::vector<int> layer_sizes;         // |X_i|
  std::vector<int> neighborhood_sizes;  // |Y_i|
  std::vector<int> cumulative_sizes;    // |X_0 u ... u X_i|
  // Per i: 1 if |X_{i+1}| >= expansion_factor |X_i|, 0 if not, -1 if
  // |X_i| > expansion_cap (no growth claimed).
  std::vector<int> growth_met;
  // Smallest k with |X_k| >= stop_size, if reached before the layers die out.
  std::optional<int> stop_layer;

  // min over a in retained of |N_c(a) & M(retained)|, and the same count in
  // `compare_color`; -1 when retained is empty.
  int min_retained_degree = -1;
  int min_retained_degree_compare_color = -1;
  Color compare_color = 0;
  double retained_degree_bound = 0;  // min_source_degree - degree_cap

  double retained_fraction = 0;        // |retained| / |source_side|
  double retained_fraction_bound = 0;  // 1 - removed_set_coeff / ln n
  bool retained_fraction_ok = false;
};

struct ExpansionTrace {
  SideTrace forward;
  SideTrace backward;
};

// `anchor` must be an A-vertex whose matching edge has color c unless no such
// vertex exists, in which case both traces are empty. `compare_color` = 0
// selects the lowest color other than c. Throws kInvalidMatching if m is not
// perfect and kDomainError for a bad anchor.
ExpansionTrace ComputeExpansionTrace(const ColoredBipartiteGraph& g,
                                     const Matching& m, Color c,
                                     const StructureConstants& constants,
                                     int anchor, Color compare_color = 0);

}  // namespace mcplab

#endif  // MCPLAB_EXPANSION_H_
