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

#include "mcplab/matcher.h"

#include <random>
#include <set>

#include "fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "mcplab/errors.h"

namespace mcplab {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

TEST(MonochromaticPerfectMatchingTest, F1BothColors) {
  auto g = testing::F1();
  for (Color c : {1, 2}) {
    auto r = MonochromaticPerfectMatching(g, c);
    ASSERT_TRUE(std::holds_alternative<Matching>(r)) << "color " << c;
    const auto& m = std::get<Matching>(r);
    EXPECT_FALSE(VerifyMatching(g, m, true).has_value());
    EXPECT_EQ(ProfileOf(g, m)[c], 2);
  }
}

TEST(MonochromaticPerfectMatchingTest, HallWitnessAfterRemovingEdge) {
  auto g = testing::F1().WithoutEdge(1, 1);
  auto r = MonochromaticPerfectMatching(g, 1);
  ASSERT_TRUE(std::holds_alternative<NoPerfectMatching>(r));
  const auto& no = std::get<NoPerfectMatching>(r);
  EXPECT_THAT(no.hall_witness, ElementsAre(1));
  EXPECT_EQ(no.max_matching_size, 1);
}

TEST(MonochromaticPerfectMatchingTest, ColorOutOfRange) {
  try {
    MonochromaticPerfectMatching(testing::F1(), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kColorOutOfRange);
  }
}

TEST(MaxMatchingTest, EdgelessAndComplete) {
  EXPECT_EQ(MaxMatching(testing::Edgeless(5, 2)).size(), 0);
  EXPECT_EQ(MaxMatching(testing::Complete(7, 2, 2)).size(), 7);
  const Color one[] = {1};
  EXPECT_EQ(MaxMatching(testing::Complete(7, 2, 2), one).size(), 0);
}

TEST(MaxMatchingTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> size(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size(rng);
    auto g = testing::RandomGraph(rng, n, 2,
                                  std::uniform_real_distribution<>(0.05, 0.6)(rng));
    for (Color c : {1, 2}) {
      std::vector<char> allowed(3, 0);
      allowed[c] = 1;
      const Color only[] = {c};
      auto m = MaxMatching(g, only);
      EXPECT_FALSE(VerifyMatching(g, m, false).has_value());
      for (int a = 0; a < n; ++a) {
        if (m.is_matched(a)) EXPECT_EQ(g.EdgeColor(a, m.partner(a)), c);
      }
      EXPECT_EQ(m.size(), testing::BruteForceMaxMatching(g, allowed));
    }
    EXPECT_EQ(MaxMatching(g).size(),
              testing::BruteForceMaxMatching(g, std::vector<char>(3, 1)));
  }
}

TEST(MonochromaticPerfectMatchingTest, ExistsIffHallHolds) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> size(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size(rng);
    auto g = testing::RandomGraph(rng, n, 2,
                                  std::uniform_real_distribution<>(0.3, 0.9)(rng));
    for (Color c : {1, 2}) {
      auto r = MonochromaticPerfectMatching(g, c);
      const bool hall = testing::SatisfiesHall(g, c);
      EXPECT_EQ(std::holds_alternative<Matching>(r), hall);
      if (!hall) {
        // The witness really violates Hall's condition.
        const auto& w = std::get<NoPerfectMatching>(r).hall_witness;
        EXPECT_LT(ColorNeighborhood(g, w, c).size(), w.size());
      }
    }
  }
}

TEST(VerifyMatchingTest, ReportsEachViolationKind) {
  auto g = testing::F1();
  using Kind = MatchingViolation::Kind;

  auto wrong_size = VerifyMatching(g, Matching(3), false);
  ASSERT_TRUE(wrong_size);
  EXPECT_EQ(wrong_size->kind, Kind::kWrongSize);

  auto reused = VerifyMatching(g, Matching(std::vector<int>{0, 0}), false);
  ASSERT_TRUE(reused);
  EXPECT_EQ(reused->kind, Kind::kReusedB);
  EXPECT_THAT(reused->description, HasSubstr("B-vertex 0"));

  auto unmatched = VerifyMatching(g, Matching(std::vector<int>{0, -1}), true);
  ASSERT_TRUE(unmatched);
  EXPECT_EQ(unmatched->kind, Kind::kUnmatchedA);
  EXPECT_EQ(unmatched->a, 1);
  EXPECT_FALSE(VerifyMatching(g, Matching(std::vector<int>{0, -1}), false));

  auto range = VerifyMatching(g, Matching(std::vector<int>{5, 1}), false);
  ASSERT_TRUE(range);
  EXPECT_EQ(range->kind, Kind::kIndexOutOfRange);

  auto h = g.WithoutEdge(0, 1);
  auto non_edge = VerifyMatching(h, Matching(std::vector<int>{1, 0}), false);
  ASSERT_TRUE(non_edge);
  EXPECT_EQ(non_edge->kind, Kind::kNotAnEdge);
  EXPECT_THAT(non_edge->description, HasSubstr("(0,1)"));
}

TEST(MonochromaticPerfectMatchingTest, LargeDenseInstance) {
  std::mt19937_64 rng(29);
  auto g = testing::RandomGraph(rng, 400, 2, 0.1);
  for (Color c : {1, 2}) {
    auto r = MonochromaticPerfectMatching(g, c);
    ASSERT_TRUE(std::holds_alternative<Matching>(r));
    EXPECT_FALSE(VerifyMatching(g, std::get<Matching>(r), true));
  }
}

}  // namespace
}  // namespace mcplab
