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

#include "mcplab/expansion.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcplab/errors.h"
#include "mcplab/matcher.h"

namespace mcplab {
namespace {

VertexSet Collect(const std::vector<char>& flags) {
  VertexSet out;
  for (int v = 0; v < static_cast<int>(flags.size()); ++v) {
    if (flags[v]) out.push_back(v);
  }
  return out;
}

SideTrace TraceSide(const ColoredBipartiteGraph& g, const Matching& m, Color c,
                    const StructureConstants& k, int anchor,
                    Color compare_color) {
  const int n = g.n();
  const std::vector<int> inv = m.Inverse();
  SideTrace t;
  t.anchor = anchor;
  t.compare_color = compare_color;
  t.retained_degree_bound = k.min_source_degree - k.degree_cap;
  t.retained_fraction_bound =
      n >= 2 ? 1.0 - k.removed_set_coeff / std::log(static_cast<double>(n))
             : 0.0;

  std::vector<char> source(n, 0), source_b(n, 0);
  for (int a = 0; a < n; ++a) {
    if (g.EdgeColor(a, m.partner(a)) == c) {
      source[a] = 1;
      source_b[m.partner(a)] = 1;
    }
  }
  t.source_side = Collect(source);
  if (t.source_side.empty()) return t;

  std::vector<char> high(n, 0);
  for (int a : t.source_side) {
    int deg = 0;
    for (int b : g.NeighborsOfA(a, c)) deg += source_b[b];
    high[a] = deg >= k.min_source_degree;
  }
  t.high_degree = Collect(high);

  // M(A_c \ high_degree)
  std::vector<char> low_image(n, 0);
  for (int a : t.source_side) {
    if (!high[a]) low_image[m.partner(a)] = 1;
  }
  std::vector<char> capture(n, 0);
  for (int a : t.source_side) {
    int deg = 0;
    for (int b : g.NeighborsOfA(a, c)) deg += low_image[b];
    capture[a] = deg <= k.degree_cap;
  }
  t.low_capture = Collect(capture);

  std::vector<char> absorbed(n, 0);
  for (int a : t.source_side) {
    absorbed[a] = !(high[a] && capture[a]);
    if (!high[a] && !capture[a]) ++t.initial_bad_union_size;
  }
  t.initial_bad = Collect(absorbed);

  // Greedy closure: count[a] = |N_c(a) & M(absorbed)|.
  std::vector<int> count(n, 0);
  std::vector<int> queue;
  auto absorb_image = [&](int w) {
    for (int a : g.NeighborsOfB(m.partner(w), c)) {
      if (!source[a] || absorbed[a]) continue;
      if (++count[a] >= k.degree_cap) {
        absorbed[a] = 1;
        queue.push_back(a);
      }
    }
  };
  for (int w : t.initial_bad) absorb_image(w);
  for (size_t head = 0; head < queue.size(); ++head) {
    ++t.absorption_steps;
    absorb_image(queue[head]);
  }
  t.absorbed = Collect(absorbed);

  std::vector<char> retained(n, 0);
  for (int a : t.source_side) retained[a] = !absorbed[a];
  t.retained = Collect(retained);
  t.retained_fraction = static_cast<double>(t.retained.size()) /
                        static_cast<double>(t.source_side.size());
  t.retained_fraction_ok = t.retained_fraction >= t.retained_fraction_bound;

  if (!t.retained.empty()) {
    std::vector<char> image(n, 0);
    for (int a : t.retained) image[m.partner(a)] = 1;
    auto min_degree = [&](Color color) {
      int best = n + 1;
      for (int a : t.retained) {
        int deg = 0;
        for (int b : g.NeighborsOfA(a, color)) deg += image[b];
        best = std::min(best, deg);
      }
      return best;
    };
    t.min_retained_degree = min_degree(c);
    if (compare_color >= 1) {
      t.min_retained_degree_compare_color = min_degree(compare_color);
    }
  }

  t.anchor_in_retained = retained[anchor];
  const std::vector<char>& allowed = t.anchor_in_retained ? retained : source;
  std::vector<char> seen(n, 0), in_y(n, 0);
  std::vector<int> layer{anchor};
  seen[anchor] = 1;
  int cumulative = 1;
  for (int i = 0;; ++i) {
    t.layer_sizes.push_back(static_cast<int>(layer.size()));
    t.cumulative_sizes.push_back(cumulative);
    if (layer.size() >= k.stop_size) {
      t.stop_layer = i;
      break;
    }
    if (layer.empty()) break;
    std::vector<int> y;
    for (int a : layer) {
      for (int b : g.NeighborsOfA(a, c)) {
        if (!in_y[b]) {
          in_y[b] = 1;
          y.push_back(b);
        }
      }
    }
    t.neighborhood_sizes.push_back(static_cast<int>(y.size()));
    std::vector<int> next;
    for (int b : y) {
      in_y[b] = 0;
      const int a = inv[b];
      if (allowed[a] && !seen[a]) {
        seen[a] = 1;
        next.push_back(a);
      }
    }
    std::sort(next.begin(), next.end());
    if (layer.size() <= k.expansion_cap) {
      t.growth_met.push_back(next.size() >= k.expansion_factor * layer.size());
    } else {
      t.growth_met.push_back(-1);
    }
    cumulative += static_cast<int>(next.size());
    layer.swap(next);
  }
  return t;
}

}  // namespace

ExpansionTrace ComputeExpansionTrace(const ColoredBipartiteGraph& g,
                                     const Matching& m, Color c,
                                     const StructureConstants& constants,
                                     int anchor, Color compare_color) {
  if (c < 1 || c > g.q()) {
    throw Error(ErrorCode::kColorOutOfRange, "color " + std::to_string(c));
  }
  if (m.n() != g.n() || VerifyMatching(g, m, /*require_perfect=*/true)) {
    throw Error(ErrorCode::kInvalidMatching,
                "expansion trace needs a perfect matching of the graph");
  }
  if (compare_color == 0) {
    for (Color other = 1; other <= g.q(); ++other) {
      if (other != c) {
        compare_color = other;
        break;
      }
    }
  }
  bool any_source = false;
  for (int a = 0; a < g.n() && !any_source; ++a) {
    any_source = g.EdgeColor(a, m.partner(a)) == c;
  }
  ExpansionTrace trace;
  if (!any_source) {
    trace.forward.compare_color = trace.backward.compare_color = compare_color;
    return trace;
  }
  if (anchor < 0 || anchor >= g.n() ||
      g.EdgeColor(anchor, m.partner(anchor)) != c) {
    throw Error(ErrorCode::kDomainError,
                "anchor " + std::to_string(anchor) +
                    " is not matched by a color-" + std::to_string(c) +
                    " edge");
  }
  trace.forward = TraceSide(g, m, c, constants, anchor, compare_color);
  trace.backward = TraceSide(g.Transposed(), Matching(m.Inverse()), c,
                             constants, m.partner(anchor), compare_color);
  return trace;
}

}  // namespace mcplab
