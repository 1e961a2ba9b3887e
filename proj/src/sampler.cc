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

#include "mcplab/sampler.h"

#include <cmath>
#include <string>
#include <vector>

#include "mcplab/errors.h"

namespace mcplab {

double ThresholdP(int n, double omega, double alpha_min) {
  if (n < 2) throw Error(ErrorCode::kDomainError, "threshold needs n >= 2");
  if (!(alpha_min > 0.0 && alpha_min <= 1.0)) {
    throw Error(ErrorCode::kDomainError, "alpha_min must lie in (0, 1]");
  }
  const double p = (std::log(static_cast<double>(n)) + omega) / (alpha_min * n);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kOutOfUnitInterval,
                "p = " + std::to_string(p) + " for n=" + std::to_string(n) +
                    ", omega=" + std::to_string(omega));
  }
  return p;
}

Color DrawColor(const ColorSpec& colors, double u) {
  double acc = 0.0;
  const int q = colors.q();
  for (Color c = 1; c < q; ++c) {
    acc += colors.alpha(c);
    if (u < acc) return c;
  }
  return q;
}

ColoredBipartiteGraph SampleGraph(const SampleParams& params) {
  if (params.n < 1) throw Error(ErrorCode::kDomainError, "n must be >= 1");
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw Error(ErrorCode::kOutOfUnitInterval, "p outside [0, 1]");
  }
  std::mt19937_64 rng(params.seed);
  std::vector<Edge> edges;
  const double expected =
      static_cast<double>(params.n) * params.n * params.p;
  edges.reserve(static_cast<size_t>(expected + 4 * std::sqrt(expected) + 16));
  for (int a = 0; a < params.n; ++a) {
    for (int b = 0; b < params.n; ++b) {
      if (UniformUnit(rng) < params.p) {
        edges.push_back({a, b, DrawColor(params.colors, UniformUnit(rng))});
      }
    }
  }
  return ColoredBipartiteGraph::Build(params.n, params.colors.q(), edges,
                                      params.colors);
}

}  // namespace mcplab
