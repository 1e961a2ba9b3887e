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

// Maximum matchings on color-restricted subgraphs.

#ifndef MCPLAB_MATCHER_H_
#define MCPLAB_MATCHER_H_

#include <optional>
#include <span>
#include <string>
#include <variant>

#include "mcplab/graph.h"

namespace mcplab {

// Hopcroft-Karp over edges whose color is in `allowed`. A-vertices are
// scanned in increasing index and each vertex's neighbors in increasing B
// index, so the result is deterministic.
Matching MaxMatching(const ColoredBipartiteGraph& g,
                     std::span<const Color> allowed);

// All colors allowed.
Matching MaxMatching(const ColoredBipartiteGraph& g);

// Hall violation: |N(hall_witness)| < |hall_witness| in the color subgraph.
struct NoPerfectMatching {
  VertexSet hall_witness;
  int max_matching_size = 0;
};

using PerfectMatchingResult = std::variant<Matching, NoPerfectMatching>;

PerfectMatchingResult MonochromaticPerfectMatching(
    const ColoredBipartiteGraph& g, Color c);

struct MatchingViolation {
  enum class Kind { kWrongSize, kIndexOutOfRange, kNotAnEdge, kReusedB, kUnmatchedA };
  Kind kind;
  int a = -1;
  int b = -1;
  std::string description;
};

// First violation in scan order (A index ascending), or nullopt if valid.
std::optional<MatchingViolation> VerifyMatching(const ColoredBipartiteGraph& g,
                                                const Matching& m,
                                                bool require_perfect);

}  // namespace mcplab

#endif  // MCPLAB_MATCHER_H_
