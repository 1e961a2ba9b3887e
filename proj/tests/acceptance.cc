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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every tolerance below is the required one.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "mcplab/expansion.h"
#include "mcplab/lab.h"
#include "mcplab/matcher.h"
#include "mcplab/mcp_oracle.h"
#include "mcplab/profile_walk.h"
#include "mcplab/sampler.h"
#include "mcplab/structure_audit.h"

namespace mcplab {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

double Llog(int n) { return std::log(std::log(static_cast<double>(n))); }

// The 300 small instances shared by the oracle and walk criteria.
std::vector<ColoredBipartiteGraph> SmallInstances() {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> size(2, 8);
  const double ps[] = {0.3, 0.6, 0.9};
  std::vector<ColoredBipartiteGraph> out;
  for (int i = 0; i < 300; ++i) {
    const int n = size(rng);
    const int q = 2 + static_cast<int>(rng() % 2);
    out.push_back(testing::RandomGraph(rng, n, q, ps[rng() % 3]));
  }
  return out;
}

// Every lattice point of the simplex with q coordinates summing to n.
void SimplexPoints(int n, int q, std::vector<int>& prefix,
                   std::vector<ColorProfile>& out) {
  if (static_cast<int>(prefix.size()) == q - 1) {
    int rest = n;
    for (int v : prefix) rest -= v;
    prefix.push_back(rest);
    out.push_back(ColorProfile{prefix});
    prefix.pop_back();
    return;
  }
  int used = 0;
  for (int v : prefix) used += v;
  for (int v = 0; v <= n - used; ++v) {
    prefix.push_back(v);
    SimplexPoints(n, q, prefix, out);
    prefix.pop_back();
  }
}

Verdict OracleEquivalence() {
  const auto start = Clock::now();
  int mismatches = 0;
  const auto instances = SmallInstances();
  for (const auto& g : instances) {
    mismatches += EnumerateMcp(g) != EnumerateMcpNaive(g);
  }
  const double secs = SecondsSince(start);
  return {mismatches == 0 && secs < 30.0,
          Format("%zu instances, %d mismatches, %.2f s (limit 30 s)",
                 instances.size(), mismatches, secs)};
}

// Checks one walk outcome against the exact set; returns violations.
int WalkViolations(const ColoredBipartiteGraph& g, const ColorProfile& target,
                   const WalkOutcome& out,
                   const std::function<bool(const ColorProfile&)>& in_mcp) {
  if (!out.ok()) return 0;
  int bad = 0;
  bad += VerifyMatching(g, *out.matching, true).has_value();
  bad += !(ProfileOf(g, *out.matching) == target);
  bad += !in_mcp(target);
  return bad;
}

Verdict WalkSoundness() {
  int invocations = 0, successes = 0, violations = 0;
  std::mt19937_64 rng(20260102);
  // Every simplex point of every small instance.
  for (const auto& g : SmallInstances()) {
    const auto mcp = EnumerateMcp(g);
    auto in_mcp = [&](const ColorProfile& p) {
      return std::binary_search(mcp.begin(), mcp.end(), p);
    };
    std::vector<ColorProfile> targets;
    std::vector<int> prefix;
    SimplexPoints(g.n(), g.q(), prefix, targets);
    for (const auto& t : targets) {
      auto out = AchieveProfile(g, t, rng());
      ++invocations;
      successes += out.ok();
      violations += WalkViolations(g, t, out, in_mcp);
    }
  }
  // 500 more on sampled graphs near the threshold, checked by the exact
  // membership test.
  for (int i = 0; i < 500; ++i) {
    const int n = 10 + static_cast<int>(rng() % 7);
    const int q = 2 + static_cast<int>(rng() % 2);
    const ColorSpec colors = ColorSpec::Uniform(q);
    auto g = SampleGraph({n, ClampedThresholdP(n, 2.0, 1.0 / q), colors, rng()});
    std::vector<int> counts(q, 0);
    for (int k = 0; k < n; ++k) ++counts[rng() % q];
    ColorProfile t{counts};
    auto out = AchieveProfile(g, t, rng());
    ++invocations;
    successes += out.ok();
    violations += WalkViolations(
        g, t, out, [&](const ColorProfile& p) { return HasProfile(g, p); });
  }
  return {violations == 0 && invocations >= 800,
          Format("%d walk invocations, %d successful, %d violations",
                 invocations, successes, violations)};
}

Verdict StepConservation() {
  int steps = 0, violations = 0, graphs = 0;
  std::mt19937_64 rng(20260103);
  const int n = 300;
  const ColorSpec colors({0.5, 0.25, 0.25});
  while (steps < 1000 && graphs < 100) {
    auto g = SampleGraph({n, ThresholdP(n, 3 * Llog(n), 0.25), colors, rng()});
    ++graphs;
    auto start = MonochromaticPerfectMatching(g, 1);
    if (!std::holds_alternative<Matching>(start)) continue;
    Matching m = std::get<Matching>(start);
    // Shift mass out of color 1 toward random colors until it is exhausted.
    for (int k = 0; k < 200 && steps < 1000; ++k) {
      const Color to = 2 + static_cast<Color>(rng() % 2);
      auto step = RecolorStep(g, m, 1, to, rng());
      if (!step.ok()) continue;
      const auto before = ProfileOf(g, m);
      const auto after = ProfileOf(g, *step.matching);
      bool ok = !VerifyMatching(g, *step.matching, true) &&
                !CheckCycle(g, m, *step.cycle);
      for (Color c = 1; c <= 3; ++c) {
        const int want = before[c] - (c == 1) + (c == to);
        ok = ok && after[c] == want;
      }
      violations += !ok;
      ++steps;
      m = *step.matching;
    }
  }
  return {steps >= 1000 && violations == 0,
          Format("%d successful steps on %d graphs, %d violations", steps,
                 graphs, violations)};
}

ExperimentConfig DeskScaleConfig(const std::string& omega) {
  return ParseConfig("n = 1000\nalpha = 0.5,0.25,0.25\nomega = " + omega +
                     "\ntrials = 50\nseed = 4242\nprofiles = corners+random:10\n"
                     "checks = pm,walk,isolated\n");
}

Verdict AboveThreshold() {
  const auto start = Clock::now();
  auto result = Sweep(DeskScaleConfig("3*llog"));
  int pairs = 0, ok = 0;
  for (const auto& r : result.records) {
    for (const auto& w : r.walks) {
      ++pairs;
      ok += w.success;
    }
  }
  const double frac = pairs ? double(ok) / pairs : 0;
  const double secs = SecondsSince(start);
  return {pairs == 50 * 13 && frac >= 0.95 && secs < 600,
          Format("%d/%d (trial, profile) pairs succeeded = %.4f (need >= 0.95), "
                 "%.1f s (limit 600 s)", ok, pairs, frac, secs)};
}

Verdict BelowThreshold() {
  auto config = DeskScaleConfig("-3*llog");
  const Color rare = config.colors.rarest_color();
  auto result = Sweep(config);
  int with_isolated = 0, corner_failed = 0;
  double isolated_sum = 0;
  for (const auto& r : result.records) {
    const int a = r.isolated_a[rare - 1], b = r.isolated_b[rare - 1];
    isolated_sum += a + b;
    if (a + b == 0) continue;
    ++with_isolated;
    // Corners come first in the suite, in color order.
    corner_failed += !r.walks[rare - 1].success;
  }
  const int trials = static_cast<int>(result.records.size());
  const double frac = double(with_isolated) / trials;
  return {frac >= 0.9 && corner_failed == with_isolated,
          Format("color %d isolated in %d/%d trials = %.2f (need >= 0.90), "
                 "corner walk failed in %d of them, mean isolated per side "
                 "%.1f", rare, with_isolated, trials, frac, corner_failed,
                 isolated_sum / (2.0 * trials))};
}

Verdict ThresholdCrossing() {
  auto config = ParseConfig(
      "n = 1000\nalpha = 0.5,0.5\n"
      "omega = -6*llog, -3*llog, 0, 3*llog, 6*llog\ntrials = 50\nseed = 99\n"
      "profiles = corners\nchecks = walk\n");
  auto result = Sweep(config);
  std::vector<double> fractions;
  for (const auto& s : result.summary) {
    if (s.check == "walk_all_corners") fractions.push_back(s.success_fraction);
  }
  if (fractions.size() != 5) return {false, "summary incomplete"};
  std::string trace;
  for (double f : fractions) trace += Format(" %.2f", f);
  return {fractions.front() < 0.5 && fractions.back() > 0.9,
          "all-corners fraction along the grid:" + trace +
              " (need < 0.5 first, > 0.9 last)"};
}

Verdict ExpansionDiagnostics() {
  const int n = 2000;
  const int seeds = 20;
  const double p = ThresholdP(n, 4.0, 0.5);
  const auto constants = DefaultConstants(n, 2, 0.5);
  int fraction_ok = 0, stop_ok = 0, usable = 0;
  double min_fraction = 1;
  for (int s = 0; s < seeds; ++s) {
    auto g = SampleGraph({n, p, ColorSpec({0.5, 0.5}), 7000u + s});
    auto start = MonochromaticPerfectMatching(g, 1);
    if (!std::holds_alternative<Matching>(start)) continue;
    ++usable;
    auto trace = ComputeExpansionTrace(g, std::get<Matching>(start), 1,
                                       constants, 0);
    const SideTrace& f = trace.forward;
    fraction_ok += f.retained_fraction_ok;
    min_fraction = std::min(min_fraction, f.retained_fraction);
    stop_ok += f.stop_layer.has_value() && *f.stop_layer <= 4;
  }
  const bool pass = fraction_ok >= 0.9 * seeds && stop_ok >= 0.9 * seeds;
  return {pass,
          Format("retained fraction bound met in %d/%d seeds (min fraction "
                 "%.4f, bound %.4f), stop size reached within 4 layers in "
                 "%d/%d, %d seeds had a start matching",
                 fraction_ok, seeds, min_fraction,
                 1 - constants.removed_set_coeff / std::log(double(n)),
                 stop_ok, seeds, usable)};
}

Verdict WitnessSearch() {
  std::mt19937_64 rng(20260108);
  int disagreements = 0, unverified = 0, witnesses = 0;
  auto degree_into = [](const ColoredBipartiteGraph& g, int a,
                        const VertexSet& t, Color c) {
    const int one[] = {a};
    return ColorCutCount(g, one, t, c);
  };
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    auto g = testing::RandomGraph(rng, n, 2,
                                  std::uniform_real_distribution<>(0.1, 0.9)(rng));
    const Color c = 1 + static_cast<Color>(rng() % 2);
    const int k1 = 1 + static_cast<int>(rng() % std::min(n, 3));
    const int k2 = 1 + static_cast<int>(rng() % std::min(n, 4));
    const double cut = static_cast<double>(rng() % 3);
    const double min_edges = static_cast<double>(rng() % (k1 * k2 + 1));

    auto low = FindLowDegreeWitness(g, c, n, k2, k1, cut + 1);
    auto low_naive = testing::NaiveSearch(n, k1, k2, [&](auto& x, auto& t) {
      for (int a : x) {
        if (degree_into(g, a, t, c) >= cut + 1) return false;
      }
      return true;
    });
    disagreements += low.has_value() != low_naive.has_value() ||
                     (low && (low->x != low_naive->first ||
                              low->t != low_naive->second));
    if (low) {
      ++witnesses;
      for (int a : low->x) unverified += degree_into(g, a, low->t, c) >= cut + 1;
    }

    auto high = FindHighDegreeWitness(g, c, k1, k2, cut);
    auto high_naive = testing::NaiveSearch(n, k1, k2, [&](auto& x, auto& y) {
      for (int a : x) {
        if (degree_into(g, a, y, c) < cut) return false;
      }
      return true;
    });
    disagreements += high.has_value() != high_naive.has_value() ||
                     (high && (high->x != high_naive->first ||
                               high->y != high_naive->second));
    if (high) {
      ++witnesses;
      for (int a : high->x) unverified += degree_into(g, a, high->y, c) < cut;
    }

    auto dense = FindDenseCutWitness(g, c, k1, k2, min_edges);
    auto dense_naive = testing::NaiveSearch(n, k1, k2, [&](auto& s, auto& t) {
      return ColorCutCount(g, s, t, c) >= min_edges;
    });
    disagreements += dense.has_value() != dense_naive.has_value() ||
                     (dense && (dense->s != dense_naive->first ||
                                dense->t != dense_naive->second));
    if (dense) {
      ++witnesses;
      unverified += ColorCutCount(g, dense->s, dense->t, c) < min_edges;
    }

    auto empty = FindEmptyCutWitness(g, c, k1, k2);
    auto empty_naive = testing::NaiveSearch(n, k1, k2, [&](auto& s, auto& t) {
      return ColorCutCount(g, s, t, c) == 0;
    });
    disagreements += empty.has_value() != empty_naive.has_value() ||
                     (empty && (empty->s != empty_naive->first ||
                                empty->t != empty_naive->second));
    if (empty) {
      ++witnesses;
      // Cross-check through neighborhoods as well as the cut count.
      auto nb = ColorNeighborhood(g, empty->s, c);
      VertexSet both;
      std::set_intersection(nb.begin(), nb.end(), empty->t.begin(),
                            empty->t.end(), std::back_inserter(both));
      unverified += ColorCutCount(g, empty->s, empty->t, c) != 0 || !both.empty();
    }
  }
  return {disagreements == 0 && unverified == 0,
          Format("100 instances x 4 searches, %d disagreements, %d witnesses, "
                 "%d failed re-verification",
                 disagreements, witnesses, unverified)};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict Determinism() {
  auto config = ParseConfig(
      "n = 300\nalpha = 0.5,0.25,0.25\nomega = -2*llog, 0, 2*llog\n"
      "trials = 6\nseed = 31337\nprofiles = corners+random:3\n"
      "checks = pm,walk,isolated\n");
  const auto dir = std::filesystem::temp_directory_path();
  std::vector<std::string> files;
  for (int workers : {1, 1, 3}) {
    config.workers = workers;
    const std::string path =
        (dir / ("mcplab_acceptance_" + std::to_string(files.size()) + ".csv"))
            .string();
    Emit(Sweep(config).rows, OutputFormat::kCsv, path);
    files.push_back(ReadFile(path));
    std::filesystem::remove(path);
  }
  const bool same = !files[0].empty() && files[0] == files[1] &&
                    files[0] == files[2];
  return {same, Format("%zu-byte CSV, identical across 2 reruns with 1 worker "
                       "and 1 with 3 workers: %s",
                       files[0].size(), same ? "yes" : "no")};
}

}  // namespace
}  // namespace mcplab

int main() {
  using namespace mcplab;
  struct Criterion {
    int id;
    const char* name;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {1, "oracle equivalence", OracleEquivalence},
      {2, "walk soundness", WalkSoundness},
      {3, "step conservation", StepConservation},
      {4, "above-threshold reproduction", AboveThreshold},
      {5, "below-threshold failure mechanism", BelowThreshold},
      {6, "threshold crossing", ThresholdCrossing},
      {7, "expansion diagnostics", ExpansionDiagnostics},
      {8, "witness-search correctness", WitnessSearch},
      {9, "determinism", Determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s criterion %d (%s): %s [%.1f s]\n", v.pass ? "PASS" : "FAIL",
                c.id, c.name, v.detail.c_str(), SecondsSince(start));
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
