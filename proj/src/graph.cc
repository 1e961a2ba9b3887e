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

#include "mcplab/graph.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "mcplab/errors.h"

namespace mcplab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::kInvalidColorSpec: return "InvalidColorSpec";
    case ErrorCode::kInvalidMatching: return "InvalidMatching";
    case ErrorCode::kUnmatchedVertex: return "UnmatchedVertex";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kOutOfUnitInterval: return "OutOfUnitInterval";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kBadProfileSum: return "BadProfileSum";
    case ErrorCode::kInvalidCycle: return "InvalidCycle";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIo: return "IO";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- ColorSpec

ColorSpec::ColorSpec(std::vector<double> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty()) {
    throw Error(ErrorCode::kInvalidColorSpec, "need at least one color");
  }
  if (static_cast<int>(alphas_.size()) > kMaxColors) {
    throw Error(ErrorCode::kInvalidColorSpec, "too many colors");
  }
  double sum = 0.0;
  for (double a : alphas_) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw Error(ErrorCode::kInvalidColorSpec,
                  "color probabilities must be positive");
    }
    sum += a;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidColorSpec,
                "color probabilities must sum to 1");
  }
}

ColorSpec ColorSpec::Uniform(int q) {
  if (q < 1) throw Error(ErrorCode::kInvalidColorSpec, "q must be >= 1");
  return ColorSpec(std::vector<double>(q, 1.0 / q));
}

double ColorSpec::alpha_min() const {
  return *std::min_element(alphas_.begin(), alphas_.end());
}

Color ColorSpec::rarest_color() const {
  return static_cast<Color>(
             std::min_element(alphas_.begin(), alphas_.end()) -
             alphas_.begin()) +
         1;
}

// ---------------------------------------------------------------- graph

ColoredBipartiteGraph ColoredBipartiteGraph::Build(
    int n, int q, std::span<const Edge> edges, std::optional<ColorSpec> colors) {
  if (n < 0) throw Error(ErrorCode::kIndexOutOfRange, "negative side size");
  if (q < 1 || q > kMaxColors) {
    throw Error(ErrorCode::kColorOutOfRange,
                "color count " + std::to_string(q) + " out of range");
  }
  if (colors && colors->q() != q) {
    throw Error(ErrorCode::kInvalidColorSpec,
                "alpha count does not match q");
  }
  for (const Edge& e : edges) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                      ") outside n=" + std::to_string(n));
    }
    if (e.color < 1 || e.color > q) {
      throw Error(ErrorCode::kColorOutOfRange,
                  "color " + std::to_string(e.color) + " outside 1.." +
                      std::to_string(q));
    }
  }

  ColoredBipartiteGraph g;
  g.n_ = n;
  g.q_ = q;
  g.colors_ = std::move(colors);
  g.edges_.assign(edges.begin(), edges.end());
  std::sort(g.edges_.begin(), g.edges_.end());
  for (size_t i = 1; i < g.edges_.size(); ++i) {
    if (g.edges_[i].a == g.edges_[i - 1].a &&
        g.edges_[i].b == g.edges_[i - 1].b) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "(" + std::to_string(g.edges_[i].a) + "," +
                      std::to_string(g.edges_[i].b) + ")");
    }
  }

  const size_t slots = static_cast<size_t>(n) * q;
  g.row_start_.assign(n + 1, 0);
  g.a_offsets_.assign(slots + 1, 0);
  g.b_offsets_.assign(slots + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.row_start_[e.a + 1];
    ++g.a_offsets_[static_cast<size_t>(e.a) * q + e.color];
    ++g.b_offsets_[static_cast<size_t>(e.b) * q + e.color];
  }
  std::partial_sum(g.row_start_.begin(), g.row_start_.end(),
                   g.row_start_.begin());
  std::partial_sum(g.a_offsets_.begin(), g.a_offsets_.end(),
                   g.a_offsets_.begin());
  std::partial_sum(g.b_offsets_.begin(), g.b_offsets_.end(),
                   g.b_offsets_.begin());

  g.a_adj_.resize(g.edges_.size());
  g.b_adj_.resize(g.edges_.size());
  std::vector<int64_t> a_fill(g.a_offsets_.begin(), g.a_offsets_.end() - 1);
  std::vector<int64_t> b_fill(g.b_offsets_.begin(), g.b_offsets_.end() - 1);
  // Edges are sorted by (a, b), so both fills come out ascending.
  for (const Edge& e : g.edges_) {
    g.a_adj_[a_fill[static_cast<size_t>(e.a) * q + e.color - 1]++] = e.b;
    g.b_adj_[b_fill[static_cast<size_t>(e.b) * q + e.color - 1]++] = e.a;
  }
  return g;
}

std::optional<Color> ColoredBipartiteGraph::EdgeColor(int a, int b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) return std::nullopt;
  auto first = edges_.begin() + row_start_[a];
  auto last = edges_.begin() + row_start_[a + 1];
  auto it = std::lower_bound(
      first, last, b, [](const Edge& e, int key) { return e.b < key; });
  if (it != last && it->b == b) return it->color;
  return std::nullopt;
}

ColoredBipartiteGraph ColoredBipartiteGraph::Transposed() const {
  std::vector<Edge> flipped;
  flipped.reserve(edges_.size());
  for (const Edge& e : edges_) flipped.push_back({e.b, e.a, e.color});
  return Build(n_, q_, flipped, colors_);
}

ColoredBipartiteGraph ColoredBipartiteGraph::WithoutEdge(int a, int b) const {
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e.a != a || e.b != b) kept.push_back(e);
  }
  return Build(n_, q_, kept, colors_);
}

ColoredBipartiteGraph ColoredBipartiteGraph::WithEdge(Edge added) const {
  std::vector<Edge> all = edges_;
  all.push_back(added);
  return Build(n_, q_, all, colors_);
}

// ---------------------------------------------------------------- matching

Matching Matching::FromPairs(int n, std::span<const std::pair<int, int>> pairs) {
  std::vector<int> assign(n, kUnmatched);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (assign[a] != kUnmatched) {
      throw Error(ErrorCode::kInvalidMatching,
                  "A-vertex " + std::to_string(a) + " matched twice");
    }
    assign[a] = b;
  }
  return Matching(std::move(assign));
}

int Matching::size() const {
  return static_cast<int>(
      std::count_if(assign_.begin(), assign_.end(),
                    [](int b) { return b != kUnmatched; }));
}

bool Matching::IsPerfect() const { return size() == n(); }

std::vector<int> Matching::Inverse() const {
  std::vector<int> inv(assign_.size(), kUnmatched);
  for (int a = 0; a < n(); ++a) {
    if (assign_[a] != kUnmatched) inv[assign_[a]] = a;
  }
  return inv;
}

std::vector<std::pair<int, int>> Matching::Pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n(); ++a) {
    if (assign_[a] != kUnmatched) out.emplace_back(a, assign_[a]);
  }
  return out;
}

// ---------------------------------------------------------------- profile

int ColorProfile::Sum() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

std::string ColorProfile::ToString(char sep) const {
  std::string out;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(counts[i]);
  }
  return out;
}

ColorProfile ColorProfile::Parse(std::string_view text) {
  ColorProfile p;
  size_t pos = 0;
  while (true) {
    size_t end = text.find(',', pos);
    std::string_view field =
        text.substr(pos, end == std::string_view::npos ? end : end - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() ||
        ptr != field.data() + field.size() || value < 0) {
      throw Error(ErrorCode::kParseError,
                  "bad profile '" + std::string(text) + "'");
    }
    p.counts.push_back(value);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return p;
}

ColorProfile ColorProfile::Corner(int q, int n, Color c) {
  ColorProfile p{std::vector<int>(q, 0)};
  p.counts[c - 1] = n;
  return p;
}

ColorProfile ProfileOf(const ColoredBipartiteGraph& g, const Matching& m) {
  if (m.n() != g.n()) {
    throw Error(ErrorCode::kInvalidMatching, "matching size differs from n");
  }
  ColorProfile p{std::vector<int>(g.q(), 0)};
  for (int a = 0; a < m.n(); ++a) {
    if (!m.is_matched(a)) continue;
    auto c = g.EdgeColor(a, m.partner(a));
    if (!c) {
      throw Error(ErrorCode::kInvalidMatching,
                  "(" + std::to_string(a) + "," + std::to_string(m.partner(a)) +
                      ") is not an edge");
    }
    ++p.counts[*c - 1];
  }
  return p;
}

namespace {

void CheckColor(const ColoredBipartiteGraph& g, Color c) {
  if (c < 1 || c > g.q()) {
    throw Error(ErrorCode::kColorOutOfRange, "color " + std::to_string(c));
  }
}

void CheckVertices(const ColoredBipartiteGraph& g, std::span<const int> s) {
  for (int v : s) {
    if (v < 0 || v >= g.n()) {
      throw Error(ErrorCode::kIndexOutOfRange, "vertex " + std::to_string(v));
    }
  }
}

template <typename NeighborFn>
VertexSet UnionOfNeighbors(const ColoredBipartiteGraph& g,
                           std::span<const int> s, NeighborFn neighbors) {
  std::vector<char> seen(g.n(), 0);
  for (int v : s) {
    for (int u : neighbors(v)) seen[u] = 1;
  }
  VertexSet out;
  for (int u = 0; u < g.n(); ++u) {
    if (seen[u]) out.push_back(u);
  }
  return out;
}

}  // namespace

VertexSet ColorNeighborhood(const ColoredBipartiteGraph& g,
                            std::span<const int> s, Color c) {
  CheckColor(g, c);
  CheckVertices(g, s);
  return UnionOfNeighbors(g, s, [&](int a) { return g.NeighborsOfA(a, c); });
}

VertexSet ColorNeighborhoodOfB(const ColoredBipartiteGraph& g,
                               std::span<const int> s, Color c) {
  CheckColor(g, c);
  CheckVertices(g, s);
  return UnionOfNeighbors(g, s, [&](int b) { return g.NeighborsOfB(b, c); });
}

VertexSet MatchedImage(const Matching& m, std::span<const int> s) {
  VertexSet out;
  out.reserve(s.size());
  for (int a : s) {
    if (a < 0 || a >= m.n()) {
      throw Error(ErrorCode::kIndexOutOfRange, "vertex " + std::to_string(a));
    }
    if (!m.is_matched(a)) {
      throw Error(ErrorCode::kUnmatchedVertex, std::to_string(a));
    }
    out.push_back(m.partner(a));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int64_t ColorCutCount(const ColoredBipartiteGraph& g, std::span<const int> s,
                      std::span<const int> t, Color c) {
  CheckColor(g, c);
  CheckVertices(g, s);
  CheckVertices(g, t);
  std::vector<char> in_t(g.n(), 0);
  for (int b : t) in_t[b] = 1;
  std::vector<char> in_s(g.n(), 0);
  int64_t count = 0;
  for (int a : s) {
    if (in_s[a]) continue;
    in_s[a] = 1;
    for (int b : g.NeighborsOfA(a, c)) count += in_t[b];
  }
  return count;
}

// ---------------------------------------------------------------- text I/O

std::string SerializeGraph(const ColoredBipartiteGraph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.q()) + "\n";
  if (g.color_spec()) {
    char buf[64];
    const auto& alphas = g.color_spec()->alphas();
    for (size_t i = 0; i < alphas.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", alphas[i]);
      if (i > 0) out += ' ';
      out += buf;
    }
    out += '\n';
  }
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.a);
    out += ' ';
    out += std::to_string(e.b);
    out += ' ';
    out += std::to_string(e.color);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool IsInteger(std::string_view tok) {
  if (tok.empty()) return false;
  size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') return false;
  }
  return true;
}

[[noreturn]] void ParseFail(int line_no, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line_no) + ": " + what);
}

int ParseInt(std::string_view tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    ParseFail(line_no, "expected integer, got '" + std::string(tok) + "'");
  }
  return value;
}

double ParseDouble(std::string_view tok, int line_no) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    ParseFail(line_no, "expected number, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

ColoredBipartiteGraph ParseGraph(std::string_view text) {
  int n = -1;
  int q = -1;
  std::optional<ColorSpec> colors;
  std::vector<Edge> edges;
  bool expect_alphas = false;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = Tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (n < 0) {
      if (tokens.size() != 2) ParseFail(line_no, "header must be 'n q'");
      n = ParseInt(tokens[0], line_no);
      q = ParseInt(tokens[1], line_no);
      if (n < 0) ParseFail(line_no, "negative n");
      if (q < 1 || q > kMaxColors) {
        throw Error(ErrorCode::kColorOutOfRange,
                    "line " + std::to_string(line_no) + ": q=" +
                        std::to_string(q));
      }
      expect_alphas = true;
      continue;
    }
    if (expect_alphas) {
      expect_alphas = false;
      // An alpha line has q tokens. For q == 3 it is told apart from an edge
      // line by a non-integer token; q positive alphas summing to 1 cannot
      // all be integers when q > 1.
      bool all_int = std::all_of(tokens.begin(), tokens.end(), IsInteger);
      if (static_cast<int>(tokens.size()) == q && (q != 3 || !all_int)) {
        std::vector<double> alphas;
        for (auto tok : tokens) alphas.push_back(ParseDouble(tok, line_no));
        try {
          colors.emplace(std::move(alphas));
        } catch (const Error& e) {
          ParseFail(line_no, e.what());
        }
        continue;
      }
    }
    if (tokens.size() != 3) ParseFail(line_no, "edge line must be 'a b c'");
    edges.push_back({ParseInt(tokens[0], line_no), ParseInt(tokens[1], line_no),
                     ParseInt(tokens[2], line_no)});
  }
  if (n < 0) ParseFail(line_no, "missing header");
  return ColoredBipartiteGraph::Build(n, q, edges, std::move(colors));
}

}  // namespace mcplab
