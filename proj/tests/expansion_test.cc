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
#include <numeric>
#include <random>

#include "fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "mcplab/errors.h"
#include "mcplab/matcher.h"
#include "mcplab/sampler.h"

namespace mcplab {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

Matching Identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Matching(v);
}

StructureConstants LooseConstants(int n) {
  auto k = DefaultConstants(std::max(n, 3), 2, 0.5);
  k.min_source_degree = 1;
  k.degree_cap = 1;
  return k;
}

bool IsSubset(const VertexSet& small, const VertexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

TEST(ExpansionTraceTest, F3HighDegreeSet) {
  auto trace = ComputeExpansionTrace(testing::F3(), Identity(3), 1,
                                     LooseConstants(3), 0);
  EXPECT_THAT(trace.forward.source_side, ElementsAre(0, 1, 2));
  EXPECT_THAT(trace.forward.high_degree, ElementsAre(0, 1, 2));
  EXPECT_EQ(trace.forward.anchor, 0);
  EXPECT_EQ(trace.backward.anchor, 0);
  EXPECT_EQ(trace.forward.compare_color, 2);
}

TEST(ExpansionTraceTest, EmptySourceSide) {
  // Every matching edge carries color 2.
  auto trace = ComputeExpansionTrace(testing::F1(), Matching(std::vector<int>{1, 0}),
                                     1, LooseConstants(2), 0);
  for (const SideTrace* side : {&trace.forward, &trace.backward}) {
    EXPECT_THAT(side->source_side, IsEmpty());
    EXPECT_THAT(side->retained, IsEmpty());
    EXPECT_THAT(side->layer_sizes, IsEmpty());
  }
}

TEST(ExpansionTraceTest, Preconditions) {
  try {
    ComputeExpansionTrace(testing::F3(), Identity(3), 1, LooseConstants(3), 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomainError);
  }
  try {
    ComputeExpansionTrace(testing::F3(), Matching(std::vector<int>{0, 1, -1}), 1,
                          LooseConstants(3), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidMatching);
  }
}

TEST(ExpansionTraceTest, SetRelationsOnRandomGraphs) {
  std::mt19937_64 rng(71);
  int traces = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 30;
    auto g = testing::RandomGraph(rng, n, 2, 0.3);
    auto start = MonochromaticPerfectMatching(g, 1);
    if (!std::holds_alternative<Matching>(start)) continue;
    const auto& m = std::get<Matching>(start);
    StructureConstants k = DefaultConstants(n, 2, 0.5);
    k.degree_cap = 1 + static_cast<double>(rng() % 4);
    k.min_source_degree = 1 + static_cast<double>(rng() % 5);
    auto trace = ComputeExpansionTrace(g, m, 1, k, static_cast<int>(rng() % n));
    ++traces;
    for (const SideTrace* side : {&trace.forward, &trace.backward}) {
      EXPECT_EQ(static_cast<int>(side->source_side.size()), n);
      EXPECT_TRUE(IsSubset(side->initial_bad, side->absorbed));
      EXPECT_TRUE(IsSubset(side->absorbed, side->source_side));
      EXPECT_EQ(side->absorbed.size() + side->retained.size(),
                side->source_side.size());
      VertexSet both;
      std::set_intersection(side->high_degree.begin(), side->high_degree.end(),
                            side->low_capture.begin(), side->low_capture.end(),
                            std::back_inserter(both));
      EXPECT_EQ(side->initial_bad.size() + both.size(), side->source_side.size());
      EXPECT_LE(side->initial_bad_union_size,
                static_cast<int>(side->initial_bad.size()));
      EXPECT_EQ(side->anchor_in_retained,
                std::binary_search(side->retained.begin(), side->retained.end(),
                                   side->anchor));
      ASSERT_FALSE(side->layer_sizes.empty());
      EXPECT_EQ(side->layer_sizes[0], 1);
      int running = 0;
      for (size_t i = 0; i < side->layer_sizes.size(); ++i) {
        running += side->layer_sizes[i];
        EXPECT_EQ(side->cumulative_sizes[i], running);
      }
      EXPECT_LE(running, n);
      EXPECT_DOUBLE_EQ(side->retained_fraction,
                       double(side->retained.size()) / n);
      EXPECT_EQ(side->retained_fraction_ok,
                side->retained_fraction >= side->retained_fraction_bound);
      // Every retained vertex keeps at least the guaranteed degree.
      if (!side->retained.empty()) {
        EXPECT_GE(side->min_retained_degree, side->retained_degree_bound);
      }
    }
  }
  EXPECT_GT(traces, 30);
}

TEST(ExpansionTraceTest, SampledGraphRetainsMostVertices) {
  const int n = 2000;
  auto g = SampleGraph({n, ThresholdP(n, 4.0, 0.5), ColorSpec({0.5, 0.5}), 1});
  auto start = MonochromaticPerfectMatching(g, 1);
  ASSERT_TRUE(std::holds_alternative<Matching>(start));
  const auto& m = std::get<Matching>(start);
  auto trace = ComputeExpansionTrace(g, m, 1, DefaultConstants(n, 2, 0.5), 0);
  EXPECT_TRUE(trace.forward.retained_fraction_ok);
  EXPECT_TRUE(trace.backward.retained_fraction_ok);
  EXPECT_GT(trace.forward.retained_fraction, 0.9);
  EXPECT_TRUE(trace.forward.stop_layer.has_value());
}

}  // namespace
}  // namespace mcplab
