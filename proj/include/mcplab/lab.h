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

// Seeded Monte Carlo experiments over the threshold parametrization.
//
// Config grammar (one `key = value` per line, '#' starts a comment):
//   n = 1000
//   alpha = 0.5,0.25,0.25          (or `q = 3` for uniform colors)
//   omega = -3*llog, 0, 3*llog     (reals; `k*llog` means k ln ln n)
//   trials = 50
//   seed = 7
//   profiles = corners+random:10   (`corners`, `random:K`,
//                                   `explicit:3,1,0;2,2,0`, joined by '+',
//                                   or `none`)
//   checks = pm,walk,isolated,mcp
//   workers = 4
//   format = csv | jsonl
//   out = results.csv
//   timing = false                 (fill the ms column; breaks byte identity)
//   anchor_budget = 64
//   attempts_per_step = 3
//
// Per-trial seeds: DeriveSeed(base, grid, trial) =
//   Mix64(Mix64(base ^ Mix64(grid + 1)) ^ Mix64(~(trial + 1)))
// where Mix64 is the splitmix64 finalizer. The walk toward suite profile j
// uses Mix64(trial_seed ^ Mix64(0x100000000 + j)). Random suite profiles are
// drawn once per config from Mix64(base ^ 0x5eed5eed5eed5eed).

#ifndef MCPLAB_LAB_H_
#define MCPLAB_LAB_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcplab/graph.h"
#include "mcplab/profile_walk.h"

namespace mcplab {

struct ProfileSuite {
  bool corners = true;
  int random_count = 0;
  std::vector<ColorProfile> explicit_profiles;

  bool empty() const {
    return !corners && random_count == 0 && explicit_profiles.empty();
  }
};

struct CheckFlags {
  bool per_color_pm = true;
  bool walk = true;
  bool isolated = true;
  bool mcp_exact = false;
};

enum class OutputFormat { kCsv, kJsonLines };

// Throws kInvalidConfig for anything but "csv" / "jsonl".
OutputFormat ParseOutputFormat(std::string_view name);

struct ExperimentConfig {
  int n = 100;
  ColorSpec colors = ColorSpec::Uniform(2);
  std::vector<double> omega_grid = {0.0};
  int trials = 1;
  uint64_t base_seed = 1;
  ProfileSuite suite;
  CheckFlags checks;
  int workers = 1;
  bool record_timing = false;
  WalkOptions walk;
  OutputFormat format = OutputFormat::kCsv;
  std::string out;

  // Throws kInvalidConfig.
  void Validate() const;
  // Non-fatal remarks, e.g. omega >= ln n lies outside the o(log n) regime.
  std::vector<std::string> Warnings() const;
};

// Expands "k*llog", "llog", "-llog" or a plain real. Throws kInvalidConfig.
double ParseOmega(std::string_view token, int n);

// Applies `key = value` settings from `text` on top of `base`. Omega tokens
// are expanded with the final n. Throws kInvalidConfig (with line number).
ExperimentConfig ParseConfig(std::string_view text,
                             ExperimentConfig base = {});

// Sets one key; shared by the config file and the command line.
void ApplySetting(ExperimentConfig& config, std::string_view key,
                  std::string_view value);

uint64_t DeriveSeed(uint64_t base_seed, uint64_t grid_index,
                    uint64_t trial_index);

// (ln n + omega) / (alpha_min n) clamped to [0, 1].
double ClampedThresholdP(int n, double omega, double alpha_min);

// Corners first (color order), then random simplex points, then explicit
// profiles.
std::vector<ColorProfile> SuiteProfiles(const ExperimentConfig& config);

struct WalkCheck {
  ColorProfile target;
  bool success = false;
  int steps = 0;
  int retries = 0;
  WalkFailure failure = WalkFailure::kNone;
  double ms = 0;
};

struct TrialRecord {
  int grid_index = 0;
  int trial_index = 0;
  double omega = 0;
  double p = 0;
  uint64_t seed = 0;
  int n = 0;
  int q = 0;
  int64_t edges = 0;

  std::vector<bool> pm_success;   // per color, when enabled
  std::vector<double> pm_ms;
  std::vector<WalkCheck> walks;   // per suite profile, when enabled
  std::vector<int> isolated_a;    // per color, when enabled
  std::vector<int> isolated_b;
  std::vector<double> isolated_ms;
  // Exact profile set (mcp check only).
  std::optional<std::vector<ColorProfile>> mcp;
  std::vector<ColorProfile> suite;
  std::vector<bool> suite_in_mcp;
  double mcp_ms = 0;
  // Every successful walk target lies in the exact set.
  std::optional<bool> walk_oracle_agree;
  // Walk reached every corner / every suite profile. The latter stands in
  // for "MCP is the whole simplex" when n is too large for the oracle.
  std::optional<bool> all_corners;
  std::optional<bool> estimated_full_mcp;
};

// One emitted row.
struct CheckRow {
  double omega = 0;
  double p = 0;
  int trial = 0;
  uint64_t seed = 0;
  std::string check;  // pm | walk | isolated | mcp
  ColorProfile target;
  bool success = false;
  int steps = 0;    // isolated rows: isolated vertex count (A + B)
  int retries = 0;
  std::optional<double> ms;
};

std::vector<CheckRow> RowsOf(const TrialRecord& record, bool with_timing);

TrialRecord RunTrial(const ExperimentConfig& config, int grid_index,
                     int trial_index);

struct SummaryRow {
  double omega = 0;
  double p = 0;
  // A check name, or walk_all_corners / walk_all_suite (per-trial events).
  std::string check;
  int rows = 0;
  int successes = 0;
  double success_fraction = 0;
  double mean_steps = 0;
};

// Aggregates per (omega, check) over rows in order of first appearance,
// followed per omega by the walk_all_corners and walk_all_suite events
// (corner rows are walk targets with a single nonzero entry).
std::vector<SummaryRow> Summarize(const std::vector<CheckRow>& rows);

struct SweepResult {
  std::vector<TrialRecord> records;  // ordered by (grid_index, trial_index)
  std::vector<CheckRow> rows;
  std::vector<SummaryRow> summary;
};

SweepResult Sweep(const ExperimentConfig& config);

// Header omega,p,trial,seed,check,target_profile,success,steps,retries,ms.
void EmitCsv(const std::vector<CheckRow>& rows, std::ostream& out);
void EmitJsonLines(const std::vector<CheckRow>& rows, std::ostream& out);
// Throws kInvalidConfig for empty rows, kIo if the file cannot be written.
void Emit(const std::vector<CheckRow>& rows, OutputFormat format,
          const std::string& path);

void EmitSummaryCsv(const std::vector<SummaryRow>& summary, std::ostream& out);

// Shortest round-tripping decimal form used in emitted files.
std::string FormatReal(double v);

}  // namespace mcplab

#endif  // MCPLAB_LAB_H_
