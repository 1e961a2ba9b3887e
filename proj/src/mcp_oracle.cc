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

#include "mcplab/mcp_oracle.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "mcplab/errors.h"

namespace mcplab {
namespace {

using Key = uint32_t;

void CheckSize(const ColoredBipartiteGraph& g, int max_n) {
  if (g.n() > max_n || g.n() > kOracleMaxN) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "n=" + std::to_string(g.n()) + " exceeds oracle limit " +
                    std::to_string(std::min(max_n, kOracleMaxN)));
  }
  if (g.q() > kOracleMaxQ) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "q=" + std::to_string(g.q()) + " exceeds oracle limit " +
                    std::to_string(kOracleMaxQ));
  }
}

class ProfileCodec {
 public:
  ProfileCodec(int n, int q) : n_(n), q_(q), weight_(q + 1, 0) {
    Key w = 1;
    for (Color c = q - 1; c >= 1; --c) {
      weight_[c] = w;
      w *= static_cast<Key>(n + 1);
    }
  }

  Key weight(Color c) const { return weight_[c]; }

  // First q-1 coordinates; the last is placed - sum.
  std::vector<int> Decode(Key key, int placed) const {
    std::vector<int> counts(q_, 0);
    int sum = 0;
    for (Color c = q_ - 1; c >= 1; --c) {
      counts[c - 1] = static_cast<int>(key % (n_ + 1));
      key /= (n_ + 1);
      sum += counts[c - 1];
    }
    counts[q_ - 1] = placed - sum;
    return counts;
  }

 private:
  int n_;
  int q_;
  std::vector<Key> weight_;
};

std::vector<Key> RunDp(const ColoredBipartiteGraph& g,
                       const ProfileCodec& codec,
                       const std::optional<ColorProfile>& target) {
  const int n = g.n();
  if (n == 0) return {0};
  const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::vector<Key>> states(size_t{1} << n);
  states[0].push_back(0);

  auto admissible = [&](Key key, int placed) {
    if (!target) return true;
    auto counts = codec.Decode(key, placed);
    for (int i = 0; i < g.q(); ++i) {
      if (counts[i] > target->counts[i]) return false;
    }
    return true;
  };

  for (uint32_t mask = 0; mask < full; ++mask) {
    auto& keys = states[mask];
    if (keys.empty()) continue;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    const int a = std::popcount(mask);
    for (Color c = 1; c <= g.q(); ++c) {
      const Key w = codec.weight(c);
      for (int b : g.NeighborsOfA(a, c)) {
        if (mask & (1u << b)) continue;
        auto& next = states[mask | (1u << b)];
        for (Key k : keys) {
          if (admissible(k + w, a + 1)) next.push_back(k + w);
        }
      }
    }
    std::vector<Key>().swap(keys);
  }
  auto& result = states[full];
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

}  // namespace

std::vector<ColorProfile> EnumerateMcp(const ColoredBipartiteGraph& g,
                                       int max_n) {
  CheckSize(g, max_n);
  ProfileCodec codec(g.n(), g.q());
  std::vector<ColorProfile> out;
  for (Key key : RunDp(g, codec, std::nullopt)) {
    out.push_back(ColorProfile{codec.Decode(key, g.n())});
  }
  // Keys are ordered lexicographically on the first q-1 coordinates, which
  // determines the last one.
  return out;
}

std::vector<ColorProfile> EnumerateMcpNaive(const ColoredBipartiteGraph& g) {
  if (g.n() > kNaiveMaxN) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "naive enumeration limited to n <= " +
                    std::to_string(kNaiveMaxN));
  }
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::set<ColorProfile> found;
  do {
    ColorProfile p{std::vector<int>(g.q(), 0)};
    bool ok = true;
    for (int a = 0; a < g.n() && ok; ++a) {
      auto c = g.EdgeColor(a, perm[a]);
      if (c) {
        ++p.counts[*c - 1];
      } else {
        ok = false;
      }
    }
    if (ok) found.insert(std::move(p));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {found.begin(), found.end()};
}

bool HasProfile(const ColoredBipartiteGraph& g, const ColorProfile& target,
                int max_n) {
  if (target.q() != g.q() || target.Sum() != g.n() ||
      std::any_of(target.counts.begin(), target.counts.end(),
                  [](int c) { return c < 0; })) {
    throw Error(ErrorCode::kBadProfileSum,
                "profile " + target.ToString() + " must have " +
                    std::to_string(g.q()) + " nonnegative entries summing to " +
                    std::to_string(g.n()));
  }
  CheckSize(g, max_n);
  ProfileCodec codec(g.n(), g.q());
  return !RunDp(g, codec, target).empty();
}

}  // namespace mcplab
