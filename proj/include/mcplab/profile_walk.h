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

// Recoloring perfect matchings one profile step at a time.
//
// A recoloring cycle for (from, to) is an alternating cycle
//   x_1 y_1 x_2 y_2 ... x_l y_l x_1
// with (x_j, y_j) outside the matching and (y_j, x_{j+1}) inside it, where
// exactly one non-matching edge has color `to` and every other cycle edge has
// color `from`. Swapping along it moves one matching edge from `from` to `to`.

#ifndef MCPLAB_PROFILE_WALK_H_
#define MCPLAB_PROFILE_WALK_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcplab/graph.h"

namespace mcplab {

struct AlternatingCycle {
  std::vector<int> a_seq;  // x_1..x_l
  std::vector<int> b_seq;  // y_1..y_l
  int special_index = 0;   // j such that (x_j, y_j) carries `to_color`
  Color from_color = 1;
  Color to_color = 2;

  int length() const { return static_cast<int>(a_seq.size()); }
  // The same cycle read against the matching it produced.
  AlternatingCycle Reversed() const;
};

// Name of the first violated clause ("shape", "range", "simplicity",
// "non-matching", "matching", "colors"), or nullopt if the cycle is a valid
// recoloring cycle for m.
std::optional<std::string> CheckCycle(const ColoredBipartiteGraph& g,
                                      const Matching& m,
                                      const AlternatingCycle& c);

// m with the cycle's edges swapped. Checks alternation and simplicity only;
// throws kInvalidCycle otherwise.
Matching SymmetricDifference(const Matching& m, const AlternatingCycle& c);

struct WalkOptions {
  // Anchors tried per cycle search: min(#from-colored matching edges, this).
  int anchor_budget = 64;
  // Independent reseeded searches per step before giving up. Skipped once a
  // search has already covered every anchor.
  int attempts_per_step = 3;
};

enum class CycleSearchStatus { kFound, kNotFound, kNoSourceEdges };

struct CycleSearchOutcome {
  CycleSearchStatus status = CycleSearchStatus::kNotFound;
  std::optional<AlternatingCycle> cycle;
  int anchors_tried = 0;
  bool exhausted_all_anchors = false;
};

// Anchors are the from-colored matching edges (a_0, b_0), tried in a seeded
// shuffled order. For each anchor a forward alternating tree grows from a_0
// (non-matching `from` edge, then matching `from` edge) and a backward tree
// from b_0 (same steps mirrored). The first non-matching `to` edge joining the
// forward tree's A-side to the backward tree's B-side whose spliced cycle is
// simple is returned. Throws kInvalidMatching if m is not perfect and
// kColorOutOfRange for bad colors or from == to.
CycleSearchOutcome FindRecoloringCycle(const ColoredBipartiteGraph& g,
                                       const Matching& m, Color from, Color to,
                                       uint64_t seed,
                                       const WalkOptions& options = {});

// Throws kInvalidCycle naming the violated clause.
Matching ApplyCycle(const ColoredBipartiteGraph& g, const Matching& m,
                    const AlternatingCycle& c);

struct StepOutcome {
  CycleSearchStatus status = CycleSearchStatus::kNotFound;
  std::optional<Matching> matching;
  std::optional<AlternatingCycle> cycle;
  int anchors_tried = 0;
  int attempts = 0;

  bool ok() const { return status == CycleSearchStatus::kFound; }
};

StepOutcome RecolorStep(const ColoredBipartiteGraph& g, const Matching& m,
                        Color from, Color to, uint64_t seed,
                        const WalkOptions& options = {});

struct WalkReport {
  int steps_attempted = 0;
  int steps_succeeded = 0;
  std::vector<int> cycle_lengths;
  // Anchors tried beyond the first, per step.
  std::vector<int> retries;
  std::vector<double> ms_per_step;

  // {"steps_attempted":..,"steps_succeeded":..,"cycle_lengths":[..],
  //  "retries":[..],"ms_per_step":[..]}
  std::string ToRecord() const;
};

enum class WalkFailure { kNone, kNoMonochromaticStart, kStepExhausted };

std::string_view WalkFailureName(WalkFailure f);

struct WalkOutcome {
  WalkFailure failure = WalkFailure::kNone;
  std::optional<Matching> matching;
  // Start color on kNoMonochromaticStart, target color of the failed step on
  // kStepExhausted.
  Color failed_color = 0;
  // Profile of the last matching reached (empty if no start was found).
  ColorProfile reached;
  WalkReport report;

  bool ok() const { return failure == WalkFailure::kNone; }
};

// Starts from a perfect matching in the color with the largest target count
// (lowest index on ties) and performs target[j] recoloring steps into each
// other color j in increasing order. Throws kBadProfileSum if the target does
// not have q entries summing to n.
WalkOutcome AchieveProfile(const ColoredBipartiteGraph& g,
                           const ColorProfile& target, uint64_t seed,
                           const WalkOptions& options = {});

}  // namespace mcplab

#endif  // MCPLAB_PROFILE_WALK_H_
