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

// Exact perfect-matching color profile sets for small graphs.

#ifndef MCPLAB_MCP_ORACLE_H_
#define MCPLAB_MCP_ORACLE_H_

#include <vector>

#include "mcplab/graph.h"

namespace mcplab {

inline constexpr int kOracleMaxN = 20;
inline constexpr int kOracleMaxQ = 4;
inline constexpr int kNaiveMaxN = 9;

// { ProfileOf(g, M) : M a perfect matching of g }, sorted lexicographically.
//
// Subset DP over B: the state after placing A-vertices 0..k-1 is the mask of
// used B-vertices (popcount k) and holds the sorted set of reachable partial
// profiles, each encoded in base n+1 over the first q-1 colors. Throws
// kInstanceTooLarge when n > max_n or q > kOracleMaxQ.
std::vector<ColorProfile> EnumerateMcp(const ColoredBipartiteGraph& g,
                                       int max_n = kOracleMaxN);

// Tries all n! bijections. Throws kInstanceTooLarge when n > kNaiveMaxN.
std::vector<ColorProfile> EnumerateMcpNaive(const ColoredBipartiteGraph& g);

// Membership test using the same DP, pruning partial profiles that overshoot
// the target. Throws kBadProfileSum if the target has the wrong length or
// does not sum to n.
bool HasProfile(const ColoredBipartiteGraph& g, const ColorProfile& target,
                int max_n = kOracleMaxN);

}  // namespace mcplab

#endif  // MCPLAB_MCP_ORACLE_H_
