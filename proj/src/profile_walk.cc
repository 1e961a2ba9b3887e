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

#include "mcplab/profile_walk.h"

#include <algorithm>
#include <chrono>
#include <random>
#include <utility>

#include "json.hpp"
#include "mcplab/errors.h"
#include "mcplab/matcher.h"
#include "mcplab/sampler.h"

namespace mcplab {

AlternatingCycle AlternatingCycle::Reversed() const {
  AlternatingCycle r;
  const int l = length();
  r.a_seq.reserve(l);
  r.b_seq.reserve(l);
  if (l > 0) r.a_seq.push_back(a_seq[0]);
  for (int j = l - 1; j >= 1; --j) r.a_seq.push_back(a_seq[j]);
  for (int j = l - 1; j >= 0; --j) r.b_seq.push_back(b_seq[j]);
  r.special_index = 0;
  r.from_color = to_color;
  r.to_color = from_color;
  return r;
}

namespace {

std::optional<std::string> CheckShape(const Matching& m,
                                      const AlternatingCycle& c) {
  const int l = c.length();
  if (l < 1 || static_cast<int>(c.b_seq.size()) != l || c.special_index < 0 ||
      c.special_index >= l) {
    return "shape";
  }
  for (int j = 0; j < l; ++j) {
    if (c.a_seq[j] < 0 || c.a_seq[j] >= m.n() || c.b_seq[j] < 0 ||
        c.b_seq[j] >= m.n()) {
      return "range";
    }
  }
  std::vector<char> seen_a(m.n(), 0), seen_b(m.n(), 0);
  for (int j = 0; j < l; ++j) {
    if (seen_a[c.a_seq[j]]++ || seen_b[c.b_seq[j]]++) return "simplicity";
  }
  for (int j = 0; j < l; ++j) {
    if (m.partner(c.a_seq[j]) == c.b_seq[j]) return "non-matching";
    if (m.partner(c.a_seq[(j + 1) % l]) != c.b_seq[j]) return "matching";
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> CheckCycle(const ColoredBipartiteGraph& g,
                                      const Matching& m,
                                      const AlternatingCycle& c) {
  if (m.n() != g.n()) return "shape";
  if (auto bad = CheckShape(m, c)) return bad;
  if (c.from_color == c.to_color || c.from_color < 1 || c.from_color > g.q() ||
      c.to_color < 1 || c.to_color > g.q()) {
    return "colors";
  }
  const int l = c.length();
  for (int j = 0; j < l; ++j) {
    auto added = g.EdgeColor(c.a_seq[j], c.b_seq[j]);
    if (!added) return "non-matching";
    const Color want = (j == c.special_index) ? c.to_color : c.from_color;
    if (*added != want) return "colors";
    auto removed = g.EdgeColor(c.a_seq[(j + 1) % l], c.b_seq[j]);
    if (!removed) return "matching";
    if (*removed != c.from_color) return "colors";
  }
  return std::nullopt;
}

Matching SymmetricDifference(const Matching& m, const AlternatingCycle& c) {
  if (auto bad = CheckShape(m, c)) throw Error(ErrorCode::kInvalidCycle, *bad);
  std::vector<int> assign = m.assign();
  for (int j = 0; j < c.length(); ++j) assign[c.a_seq[j]] = c.b_seq[j];
  return Matching(std::move(assign));
}

Matching ApplyCycle(const ColoredBipartiteGraph& g, const Matching& m,
                    const AlternatingCycle& c) {
  if (auto bad = CheckCycle(g, m, c)) {
    throw Error(ErrorCode::kInvalidCycle, *bad);
  }
  return SymmetricDifference(m, c);
}

namespace {

// Forward and backward alternating trees for one anchor, with crossing-edge
// detection as vertices are added.
class CycleSearcher {
 public:
  CycleSearcher(const ColoredBipartiteGraph& g, const Matching& m, Color from,
                Color to)
      : g_(g),
        m_(m),
        inv_(m.Inverse()),
        from_(from),
        to_(to),
        source_matched_(g.n(), 0),
        fwd_stamp_(g.n(), 0),
        fwd_parent_(g.n(), -1),
        bwd_stamp_(g.n(), 0),
        bwd_parent_(g.n(), -1),
        cycle_stamp_(g.n(), 0) {
    for (int a = 0; a < g.n(); ++a) {
      source_matched_[a] = g.EdgeColor(a, m.partner(a)) == from;
    }
  }

  bool IsSourceMatched(int a) const { return source_matched_[a]; }

  std::optional<AlternatingCycle> Search(int a0) {
    ++stamp_;
    a0_ = a0;
    b0_ = m_.partner(a0);
    std::vector<int> fwd_frontier, bwd_frontier;

    bwd_stamp_[b0_] = stamp_;
    bwd_parent_[b0_] = -1;
    bwd_frontier.push_back(b0_);
    if (auto c = AddForward(a0, -1)) return c;
    fwd_frontier.push_back(a0);

    while (!fwd_frontier.empty() || !bwd_frontier.empty()) {
      const bool grow_forward =
          !fwd_frontier.empty() &&
          (bwd_frontier.empty() || fwd_frontier.size() <= bwd_frontier.size());
      std::vector<int> next;
      if (grow_forward) {
        for (int x : fwd_frontier) {
          for (int y : g_.NeighborsOfA(x, from_)) {
            if (y == m_.partner(x)) continue;
            const int child = inv_[y];
            if (!source_matched_[child] || fwd_stamp_[child] == stamp_) {
              continue;
            }
            if (auto c = AddForward(child, x)) return c;
            next.push_back(child);
          }
        }
        fwd_frontier.swap(next);
      } else {
        for (int z : bwd_frontier) {
          for (int x : g_.NeighborsOfB(z, from_)) {
            if (m_.partner(x) == z || !source_matched_[x]) continue;
            const int child = m_.partner(x);
            if (bwd_stamp_[child] == stamp_) continue;
            if (auto c = AddBackward(child, z)) return c;
            next.push_back(child);
          }
        }
        bwd_frontier.swap(next);
      }
    }
    return std::nullopt;
  }

 private:
  std::optional<AlternatingCycle> AddForward(int a, int parent) {
    fwd_stamp_[a] = stamp_;
    fwd_parent_[a] = parent;
    for (int b : g_.NeighborsOfA(a, to_)) {
      if (bwd_stamp_[b] != stamp_) continue;
      if (auto c = Splice(a, b)) return c;
    }
    return std::nullopt;
  }

  std::optional<AlternatingCycle> AddBackward(int b, int parent) {
    bwd_stamp_[b] = stamp_;
    bwd_parent_[b] = parent;
    for (int a : g_.NeighborsOfB(b, to_)) {
      if (fwd_stamp_[a] != stamp_) continue;
      if (auto c = Splice(a, b)) return c;
    }
    return std::nullopt;
  }

  // Cycle a -> b (to edge) -> backward path to b0 -> a0 -> forward path to a.
  std::optional<AlternatingCycle> Splice(int a, int b) {
    std::vector<int> bpath;  // b .. b0
    for (int z = b; z != -1; z = bwd_parent_[z]) bpath.push_back(z);
    std::vector<int> fpath;  // a0 .. a
    for (int x = a; x != -1; x = fwd_parent_[x]) fpath.push_back(x);
    std::reverse(fpath.begin(), fpath.end());

    AlternatingCycle c;
    c.from_color = from_;
    c.to_color = to_;
    c.special_index = 0;
    c.a_seq.push_back(a);
    for (size_t i = 0; i + 1 < bpath.size(); ++i) c.a_seq.push_back(inv_[bpath[i]]);
    for (size_t i = 0; i + 1 < fpath.size(); ++i) c.a_seq.push_back(fpath[i]);
    c.b_seq = bpath;
    for (size_t i = 1; i < fpath.size(); ++i) {
      c.b_seq.push_back(m_.partner(fpath[i]));
    }

    ++cycle_epoch_;
    for (int x : c.a_seq) {
      if (cycle_stamp_[x] == cycle_epoch_) return std::nullopt;
      cycle_stamp_[x] = cycle_epoch_;
    }
    return c;
  }

  const ColoredBipartiteGraph& g_;
  const Matching& m_;
  std::vector<int> inv_;
  Color from_;
  Color to_;
  std::vector<char> source_matched_;
  uint32_t stamp_ = 0;
  int a0_ = -1;
  int b0_ = -1;
  std::vector<uint32_t> fwd_stamp_;
  std::vector<int> fwd_parent_;  // forward tree parent (A index)
  std::vector<uint32_t> bwd_stamp_;
  std::vector<int> bwd_parent_;  // backward tree parent (B index)
  std::vector<uint64_t> cycle_stamp_;
  uint64_t cycle_epoch_ = 0;
};

void CheckColors(const ColoredBipartiteGraph& g, Color from, Color to) {
  if (from < 1 || from > g.q() || to < 1 || to > g.q()) {
    throw Error(ErrorCode::kColorOutOfRange,
                "colors " + std::to_string(from) + "->" + std::to_string(to));
  }
  if (from == to) {
    throw Error(ErrorCode::kColorOutOfRange, "from and to colors coincide");
  }
}

}  // namespace

CycleSearchOutcome FindRecoloringCycle(const ColoredBipartiteGraph& g,
                                       const Matching& m, Color from, Color to,
                                       uint64_t seed,
                                       const WalkOptions& options) {
  CheckColors(g, from, to);
  if (m.n() != g.n() || VerifyMatching(g, m, /*require_perfect=*/true)) {
    throw Error(ErrorCode::kInvalidMatching,
                "recoloring needs a perfect matching of the graph");
  }
  CycleSearcher searcher(g, m, from, to);
  std::vector<int> anchors;
  for (int a = 0; a < g.n(); ++a) {
    if (searcher.IsSourceMatched(a)) anchors.push_back(a);
  }
  CycleSearchOutcome out;
  if (anchors.empty()) {
    out.status = CycleSearchStatus::kNoSourceEdges;
    out.exhausted_all_anchors = true;
    return out;
  }
  std::mt19937_64 rng(seed);
  std::shuffle(anchors.begin(), anchors.end(), rng);
  const int budget =
      std::min(static_cast<int>(anchors.size()), std::max(1, options.anchor_budget));
  for (int i = 0; i < budget; ++i) {
    ++out.anchors_tried;
    if (auto c = searcher.Search(anchors[i])) {
      out.status = CycleSearchStatus::kFound;
      out.cycle = std::move(c);
      return out;
    }
  }
  out.status = CycleSearchStatus::kNotFound;
  out.exhausted_all_anchors = budget == static_cast<int>(anchors.size());
  return out;
}

StepOutcome RecolorStep(const ColoredBipartiteGraph& g, const Matching& m,
                        Color from, Color to, uint64_t seed,
                        const WalkOptions& options) {
  StepOutcome out;
  const int attempts = std::max(1, options.attempts_per_step);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    ++out.attempts;
    const uint64_t attempt_seed =
        attempt == 0 ? seed : Mix64(seed ^ Mix64(static_cast<uint64_t>(attempt)));
    CycleSearchOutcome search =
        FindRecoloringCycle(g, m, from, to, attempt_seed, options);
    out.anchors_tried += search.anchors_tried;
    out.status = search.status;
    if (search.status == CycleSearchStatus::kFound) {
      out.matching = ApplyCycle(g, m, *search.cycle);
      out.cycle = std::move(search.cycle);
      return out;
    }
    if (search.exhausted_all_anchors) break;
  }
  return out;
}

std::string WalkReport::ToRecord() const {
  nlohmann::ordered_json j;
  j["steps_attempted"] = steps_attempted;
  j["steps_succeeded"] = steps_succeeded;
  j["cycle_lengths"] = cycle_lengths;
  j["retries"] = retries;
  j["ms_per_step"] = ms_per_step;
  return j.dump();
}

std::string_view WalkFailureName(WalkFailure f) {
  switch (f) {
    case WalkFailure::kNone: return "none";
    case WalkFailure::kNoMonochromaticStart: return "NoMonochromaticStart";
    case WalkFailure::kStepExhausted: return "StepExhausted";
  }
  return "unknown";
}

WalkOutcome AchieveProfile(const ColoredBipartiteGraph& g,
                           const ColorProfile& target, uint64_t seed,
                           const WalkOptions& options) {
  if (target.q() != g.q() || target.Sum() != g.n() ||
      std::any_of(target.counts.begin(), target.counts.end(),
                  [](int c) { return c < 0; })) {
    throw Error(ErrorCode::kBadProfileSum,
                "target " + target.ToString() + " must have " +
                    std::to_string(g.q()) + " nonnegative entries summing to " +
                    std::to_string(g.n()));
  }
  WalkOutcome out;
  const Color start = static_cast<Color>(
      std::max_element(target.counts.begin(), target.counts.end()) -
      target.counts.begin()) + 1;

  PerfectMatchingResult initial = MonochromaticPerfectMatching(g, start);
  if (!std::holds_alternative<Matching>(initial)) {
    out.failure = WalkFailure::kNoMonochromaticStart;
    out.failed_color = start;
    return out;
  }
  Matching current = std::get<Matching>(std::move(initial));
  ColorProfile profile = ProfileOf(g, current);

  uint64_t step_index = 0;
  for (Color to = 1; to <= g.q(); ++to) {
    if (to == start) continue;
    for (int k = 0; k < target[to]; ++k) {
      const auto t0 = std::chrono::steady_clock::now();
      const uint64_t step_seed = Mix64(seed ^ Mix64(++step_index));
      StepOutcome step = RecolorStep(g, current, start, to, step_seed, options);
      const double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
      ++out.report.steps_attempted;
      out.report.retries.push_back(std::max(0, step.anchors_tried - 1));
      out.report.ms_per_step.push_back(ms);
      if (!step.ok()) {
        out.failure = WalkFailure::kStepExhausted;
        out.failed_color = to;
        out.matching = std::move(current);
        out.reached = std::move(profile);
        return out;
      }
      ++out.report.steps_succeeded;
      out.report.cycle_lengths.push_back(step.cycle->length());
      current = std::move(*step.matching);
      --profile.counts[start - 1];
      ++profile.counts[to - 1];
    }
  }
  out.reached = profile;
  out.matching = std::move(current);
  return out;
}

}  // namespace mcplab
