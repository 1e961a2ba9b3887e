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

#include "mcplab/structure_audit.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mcplab/errors.h"

namespace mcplab {

StructureConstants DefaultConstants(int n, int q, double alpha_min,
                                    double density_coeff,
                                    double dense_set_coeff) {
  if (n < 3) {
    throw Error(ErrorCode::kDomainError,
                "constants need n >= 3 so that ln ln n > 0");
  }
  if (q < 1) throw Error(ErrorCode::kDomainError, "q must be >= 1");
  if (!(alpha_min > 0.0 && alpha_min <= 1.0)) {
    throw Error(ErrorCode::kDomainError, "alpha_min must lie in (0, 1]");
  }
  if (!(density_coeff > 0.0) || dense_set_coeff < 0.0) {
    throw Error(ErrorCode::kDomainError, "coefficients must be positive");
  }
  const double ln_n = std::log(static_cast<double>(n));
  const double a2 = alpha_min * alpha_min;
  StructureConstants k;
  k.low_degree_set_coeff = 10.0 * std::log(std::exp(1.0) * q);
  k.bad_set_coeff = k.low_degree_set_coeff + 1.0;
  k.removed_set_coeff = k.bad_set_coeff + 1.0;
  k.degree_cap = 10.0 * ln_n / std::log(ln_n);
  k.min_source_degree = ln_n / (10.0 * q);
  k.density_coeff = density_coeff;
  k.small_set_coeff = density_coeff * a2 / 8.0;
  k.dense_set_coeff =
      dense_set_coeff > 0.0 ? dense_set_coeff : k.removed_set_coeff;
  k.expansion_factor = ln_n / (25.0 * q);
  k.expansion_cap = a2 * n / (200.0 * q * ln_n);
  k.stop_size = a2 * n / (5000.0 * q * q);
  return k;
}

IsolatedVertices IsolatedColorVertices(const ColoredBipartiteGraph& g,
                                       Color c) {
  if (c < 1 || c > g.q()) {
    throw Error(ErrorCode::kColorOutOfRange, "color " + std::to_string(c));
  }
  IsolatedVertices out;
  for (int v = 0; v < g.n(); ++v) {
    if (g.DegreeA(v, c) == 0) out.a_side.push_back(v);
    if (g.DegreeB(v, c) == 0) out.b_side.push_back(v);
  }
  return out;
}

namespace {

using Mask = uint32_t;

void CheckWitnessArgs(const ColoredBipartiteGraph& g, Color c,
                      std::initializer_list<int> sizes) {
  if (g.n() > kWitnessMaxN) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "exhaustive witness search limited to n <= " +
                    std::to_string(kWitnessMaxN));
  }
  if (c < 1 || c > g.q()) {
    throw Error(ErrorCode::kColorOutOfRange, "color " + std::to_string(c));
  }
  for (int s : sizes) {
    if (s < 0) throw Error(ErrorCode::kDomainError, "negative set size");
  }
}

// Color-c neighborhoods as bitmasks: rows[a] over B, cols[b] over A.
struct MaskAdjacency {
  std::vector<Mask> rows;
  std::vector<Mask> cols;
};

MaskAdjacency BuildMasks(const ColoredBipartiteGraph& g, Color c) {
  MaskAdjacency m{std::vector<Mask>(g.n(), 0), std::vector<Mask>(g.n(), 0)};
  for (int a = 0; a < g.n(); ++a) {
    for (int b : g.NeighborsOfA(a, c)) {
      m.rows[a] |= Mask{1} << b;
      m.cols[b] |= Mask{1} << a;
    }
  }
  return m;
}

VertexSet ToSet(Mask mask) {
  VertexSet out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// Calls fn(mask) for every k-subset of [0, n) in lexicographic order of the
// sorted index lists. Stops early when fn returns true; returns whether it
// did.
template <typename Fn>
bool ForEachSubset(int n, int k, Fn&& fn) {
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask mask = 0;
    for (int i : idx) mask |= Mask{1} << i;
    if (fn(mask)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Lowest `count` set bits of `mask`, or nullopt if it has fewer.
std::optional<Mask> LowestBits(Mask mask, int count) {
  if (std::popcount(mask) < count) return std::nullopt;
  Mask out = 0;
  for (int i = 0; i < count; ++i) {
    Mask bit = mask & (~mask + 1);
    out |= bit;
    mask ^= bit;
  }
  return out;
}

// Lexicographic comparison of the sorted index lists of two masks.
bool LexLess(Mask x, Mask y) {
  while (x && y) {
    const int bx = std::countr_zero(x);
    const int by = std::countr_zero(y);
    if (bx != by) return bx < by;
    x &= x - 1;
    y &= y - 1;
  }
  return !x && y;
}

// For each T, selects the least X among per-vertex qualifiers and keeps the
// least (X, T).
template <typename Qualifies>
std::optional<std::pair<Mask, Mask>> LeastPerVertexWitness(int n, int t_size,
                                                           int x_size,
                                                           Qualifies qualifies) {
  std::optional<std::pair<Mask, Mask>> best;
  ForEachSubset(n, t_size, [&](Mask t) {
    Mask qualifying = 0;
    for (int a = 0; a < n; ++a) {
      if (qualifies(a, t)) qualifying |= Mask{1} << a;
    }
    auto x = LowestBits(qualifying, x_size);
    if (!x) return false;
    if (!best || LexLess(*x, best->first)) best.emplace(*x, t);
    // Ties on X keep the earlier (lexicographically smaller) T.
    return false;
  });
  return best;
}

}  // namespace

std::optional<LowDegreeWitness> FindLowDegreeWitness(
    const ColoredBipartiteGraph& g, Color c, int s_size, int t_size, int x_size,
    double deg_cut) {
  CheckWitnessArgs(g, c, {s_size, t_size, x_size});
  const int n = g.n();
  if (s_size > n || x_size > n || t_size > n) return std::nullopt;
  const MaskAdjacency adj = BuildMasks(g, c);
  // Shrinking T only lowers degrees into T, so |T| = t_size suffices.
  auto best = LeastPerVertexWitness(n, t_size, x_size, [&](int a, Mask t) {
    return std::popcount(adj.rows[a] & t) < deg_cut;
  });
  if (!best) return std::nullopt;
  const Mask all = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
  return LowDegreeWitness{ToSet(best->first), ToSet(all), ToSet(best->second)};
}

std::optional<HighDegreeWitness> FindHighDegreeWitness(
    const ColoredBipartiteGraph& g, Color c, int x_size, int y_size,
    double k) {
  CheckWitnessArgs(g, c, {x_size, y_size});
  const int n = g.n();
  if (x_size > n || y_size > n) return std::nullopt;
  const MaskAdjacency adj = BuildMasks(g, c);
  auto best = LeastPerVertexWitness(n, y_size, x_size, [&](int a, Mask y) {
    return std::popcount(adj.rows[a] & y) >= k;
  });
  if (!best) return std::nullopt;
  return HighDegreeWitness{ToSet(best->first), ToSet(best->second)};
}

std::optional<CutWitness> FindDenseCutWitness(const ColoredBipartiteGraph& g,
                                              Color c, int s_size, int t_size,
                                              double min_edges) {
  CheckWitnessArgs(g, c, {s_size, t_size});
  const int n = g.n();
  if (s_size > n || t_size > n) return std::nullopt;
  const MaskAdjacency adj = BuildMasks(g, c);
  std::optional<CutWitness> found;
  std::vector<int> col_degree(n);
  ForEachSubset(n, s_size, [&](Mask s) {
    // Upper bound: the t_size B-vertices with most edges into S.
    for (int b = 0; b < n; ++b) col_degree[b] = std::popcount(adj.cols[b] & s);
    std::vector<int> sorted = col_degree;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    int bound = 0;
    for (int i = 0; i < t_size; ++i) bound += sorted[i];
    if (bound < min_edges) return false;
    return ForEachSubset(n, t_size, [&](Mask t) {
      int edges = 0;
      for (Mask rest = t; rest; rest &= rest - 1) {
        edges += col_degree[std::countr_zero(rest)];
      }
      if (edges < min_edges) return false;
      found = CutWitness{ToSet(s), ToSet(t), true};
      return true;
    });
  });
  return found;
}

std::optional<CutWitness> FindEmptyCutWitness(const ColoredBipartiteGraph& g,
                                              Color c, int s_size, int t_size) {
  CheckWitnessArgs(g, c, {s_size, t_size});
  const int n = g.n();
  if (s_size > n || t_size > n) return std::nullopt;
  const MaskAdjacency adj = BuildMasks(g, c);
  const Mask all = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::optional<CutWitness> found;
  ForEachSubset(n, s_size, [&](Mask s) {
    Mask reached = 0;
    for (Mask rest = s; rest; rest &= rest - 1) {
      reached |= adj.rows[std::countr_zero(rest)];
    }
    auto t = LowestBits(all & ~reached, t_size);
    if (!t) return false;
    found = CutWitness{ToSet(s), ToSet(*t), true};
    return true;
  });
  return found;
}

std::optional<CutWitness> FindEmptyCutWitnessGreedy(
    const ColoredBipartiteGraph& g, Color c, int s_size, int t_size) {
  if (c < 1 || c > g.q()) {
    throw Error(ErrorCode::kColorOutOfRange, "color " + std::to_string(c));
  }
  if (s_size < 0 || t_size < 0) {
    throw Error(ErrorCode::kDomainError, "negative set size");
  }
  const int n = g.n();
  std::vector<char> in_s(n, 1), in_t(n, 1);
  std::vector<int> deg_a(n), deg_b(n);
  int64_t cut = 0;
  for (int v = 0; v < n; ++v) {
    deg_a[v] = g.DegreeA(v, c);
    deg_b[v] = g.DegreeB(v, c);
    cut += deg_a[v];
  }
  int size_s = n, size_t_ = n;
  while (cut > 0) {
    int best = -1;
    bool best_is_a = true;
    int best_deg = 0;
    for (int v = 0; v < n; ++v) {
      if (in_s[v] && deg_a[v] > best_deg) {
        best = v, best_is_a = true, best_deg = deg_a[v];
      }
    }
    for (int v = 0; v < n; ++v) {
      if (in_t[v] && deg_b[v] > best_deg) {
        best = v, best_is_a = false, best_deg = deg_b[v];
      }
    }
    if (best_is_a) {
      in_s[best] = 0;
      --size_s;
      for (int b : g.NeighborsOfA(best, c)) {
        if (in_t[b]) --deg_b[b];
      }
    } else {
      in_t[best] = 0;
      --size_t_;
      for (int a : g.NeighborsOfB(best, c)) {
        if (in_s[a]) --deg_a[a];
      }
    }
    cut -= best_deg;
  }
  if (size_s < s_size || size_t_ < t_size) return std::nullopt;
  CutWitness w;
  w.exhaustive = false;
  for (int v = 0; v < n; ++v) {
    if (in_s[v]) w.s.push_back(v);
    if (in_t[v]) w.t.push_back(v);
  }
  return w;
}

}  // namespace mcplab
