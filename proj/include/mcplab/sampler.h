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

// Seeded sampling of randomly colored G(n, n, p).

#ifndef MCPLAB_SAMPLER_H_
#define MCPLAB_SAMPLER_H_

#include <cstdint>
#include <random>

#include "mcplab/graph.h"

namespace mcplab {

struct SampleParams {
  int n = 1;
  double p = 0.0;
  ColorSpec colors = ColorSpec::Uniform(1);
  uint64_t seed = 0;
};

// (ln n + omega) / (alpha_min * n). Throws kDomainError for n < 2 or
// alpha_min outside (0, 1], kOutOfUnitInterval if the value leaves [0, 1].
double ThresholdP(int n, double omega, double alpha_min);

// Uniform double in [0, 1) from the top 53 bits of one 64-bit draw.
inline double UniformUnit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Inverse CDF over alphas in index order. Returns a color in 1..q.
Color DrawColor(const ColorSpec& colors, double u);

// Draw order: pairs (a, b) row-major with a outer. For each pair one
// inclusion draw; if included, the color draw follows immediately. The
// generator is std::mt19937_64 seeded with `seed`. The returned graph carries
// `colors` as its color spec.
ColoredBipartiteGraph SampleGraph(const SampleParams& params);

// splitmix64 finalizer.
inline uint64_t Mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace mcplab

#endif  // MCPLAB_SAMPLER_H_
