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

#include "mcplab/lab.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "mcplab/errors.h"
#include "mcplab/matcher.h"
#include "mcplab/mcp_oracle.h"
#include "mcplab/sampler.h"
#include "mcplab/structure_audit.h"

namespace mcplab {
namespace {

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidConfig, what);
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  while (true) {
    size_t end = s.find(sep, pos);
    out.push_back(Trim(s.substr(pos, end == std::string_view::npos
                                         ? std::string_view::npos
                                         : end - pos)));
    if (end == std::string_view::npos) return out;
    pos = end + 1;
  }
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view value) {
  T out{};
  value = Trim(value);
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
    Invalid("bad value '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

bool ParseBool(std::string_view key, std::string_view value) {
  value = Trim(value);
  if (value == "true" || value == "1" || value == "yes" || value == "on") {
    return true;
  }
  if (value == "false" || value == "0" || value == "no" || value == "off") {
    return false;
  }
  Invalid("bad boolean '" + std::string(value) + "' for " + std::string(key));
}

ProfileSuite ParseSuite(std::string_view value) {
  ProfileSuite suite;
  suite.corners = false;
  value = Trim(value);
  if (value == "none") return suite;
  for (std::string_view part : Split(value, '+')) {
    if (part == "corners") {
      suite.corners = true;
    } else if (part.starts_with("random:")) {
      suite.random_count = ParseNumber<int>("profiles", part.substr(7));
      if (suite.random_count < 0) Invalid("negative random profile count");
    } else if (part.starts_with("explicit:")) {
      for (std::string_view p : Split(part.substr(9), ';')) {
        try {
          suite.explicit_profiles.push_back(ColorProfile::Parse(p));
        } catch (const Error& e) {
          Invalid(e.what());
        }
      }
    } else {
      Invalid("unknown profile suite '" + std::string(part) + "'");
    }
  }
  return suite;
}

CheckFlags ParseChecks(std::string_view value) {
  CheckFlags flags{false, false, false, false};
  for (std::string_view part : Split(value, ',')) {
    if (part == "pm") {
      flags.per_color_pm = true;
    } else if (part == "walk") {
      flags.walk = true;
    } else if (part == "isolated") {
      flags.isolated = true;
    } else if (part == "mcp") {
      flags.mcp_exact = true;
    } else if (!part.empty()) {
      Invalid("unknown check '" + std::string(part) + "'");
    }
  }
  return flags;
}

bool IsCorner(const ColorProfile& p) {
  return std::count_if(p.counts.begin(), p.counts.end(),
                       [](int c) { return c != 0; }) == 1;
}

}  // namespace

OutputFormat ParseOutputFormat(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "jsonl") return OutputFormat::kJsonLines;
  Invalid("unsupported format '" + std::string(name) + "'");
}

namespace {

double ParseOmegaToken(std::string_view token, int n) {
  token = Trim(token);
  const size_t at = token.find("llog");
  if (at == std::string_view::npos) return ParseNumber<double>("omega", token);
  if (n < 3) Invalid("llog multiples need n >= 3");
  if (at + 4 != token.size()) Invalid("bad omega '" + std::string(token) + "'");
  const double llog = std::log(std::log(static_cast<double>(n)));
  std::string_view factor = Trim(token.substr(0, at));
  if (factor.empty()) return llog;
  if (factor == "-") return -llog;
  if (factor.back() != '*') Invalid("bad omega '" + std::string(token) + "'");
  factor.remove_suffix(1);
  return ParseNumber<double>("omega", factor) * llog;
}

}  // namespace

double ParseOmega(std::string_view token, int n) {
  const double omega = ParseOmegaToken(token, n);
  if (!std::isfinite(omega)) Invalid("omega must be finite");
  return omega;
}

void ApplySetting(ExperimentConfig& config, std::string_view key,
                  std::string_view value) {
  key = Trim(key);
  value = Trim(value);
  if (key == "n") {
    config.n = ParseNumber<int>(key, value);
  } else if (key == "q") {
    const int q = ParseNumber<int>(key, value);
    if (q < 1 || q > kMaxColors) Invalid("q out of range");
    if (config.colors.q() != q) config.colors = ColorSpec::Uniform(q);
  } else if (key == "alpha") {
    std::vector<double> alphas;
    for (auto tok : Split(value, ',')) {
      alphas.push_back(ParseNumber<double>(key, tok));
    }
    try {
      config.colors = ColorSpec(std::move(alphas));
    } catch (const Error& e) {
      Invalid(e.what());
    }
  } else if (key == "omega") {
    // llog multiples use the n set so far; ParseConfig applies n first.
    config.omega_grid.clear();
    for (auto tok : Split(value, ',')) {
      config.omega_grid.push_back(ParseOmega(tok, std::max(config.n, 3)));
    }
  } else if (key == "trials") {
    config.trials = ParseNumber<int>(key, value);
  } else if (key == "seed") {
    config.base_seed = ParseNumber<uint64_t>(key, value);
  } else if (key == "profiles") {
    config.suite = ParseSuite(value);
  } else if (key == "checks") {
    config.checks = ParseChecks(value);
  } else if (key == "workers") {
    config.workers = ParseNumber<int>(key, value);
  } else if (key == "format") {
    config.format = ParseOutputFormat(value);
  } else if (key == "out") {
    config.out = std::string(value);
  } else if (key == "timing") {
    config.record_timing = ParseBool(key, value);
  } else if (key == "anchor_budget") {
    config.walk.anchor_budget = ParseNumber<int>(key, value);
  } else if (key == "attempts_per_step") {
    config.walk.attempts_per_step = ParseNumber<int>(key, value);
  } else {
    Invalid("unknown key '" + std::string(key) + "'");
  }
}

ExperimentConfig ParseConfig(std::string_view text, ExperimentConfig base) {
  // n first so that llog multiples expand against the final n regardless of
  // line order.
  std::vector<std::pair<int, std::pair<std::string, std::string>>> settings;
  int line_no = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      Invalid("line " + std::to_string(line_no) + ": expected key = value");
    }
    settings.push_back({line_no,
                        {std::string(Trim(line.substr(0, eq))),
                         std::string(Trim(line.substr(eq + 1)))}});
  }
  std::stable_partition(settings.begin(), settings.end(),
                        [](const auto& s) { return s.second.first == "n"; });
  for (const auto& [no, kv] : settings) {
    try {
      ApplySetting(base, kv.first, kv.second);
    } catch (const Error& e) {
      Invalid("line " + std::to_string(no) + ": " + e.what());
    }
  }
  return base;
}

void ExperimentConfig::Validate() const {
  if (n < 1) Invalid("n must be >= 1");
  if (n < 2) Invalid("the threshold parametrization needs n >= 2");
  if (trials < 1) Invalid("trials must be >= 1");
  if (workers < 1) Invalid("workers must be >= 1");
  if (omega_grid.empty()) Invalid("omega grid is empty");
  for (double w : omega_grid) {
    if (!std::isfinite(w)) Invalid("omega values must be finite");
  }
  if (checks.walk && suite.empty()) {
    Invalid("walk check enabled with an empty profile suite");
  }
  if (walk.anchor_budget < 1 || walk.attempts_per_step < 1) {
    Invalid("walk budgets must be >= 1");
  }
  for (const ColorProfile& p : suite.explicit_profiles) {
    if (p.q() != colors.q() || p.Sum() != n) {
      Invalid("profile " + p.ToString() + " must have " +
              std::to_string(colors.q()) + " entries summing to " +
              std::to_string(n));
    }
  }
  if (checks.mcp_exact && (n > kOracleMaxN || colors.q() > kOracleMaxQ)) {
    Invalid("mcp check needs n <= " + std::to_string(kOracleMaxN) +
            " and q <= " + std::to_string(kOracleMaxQ));
  }
}

std::vector<std::string> ExperimentConfig::Warnings() const {
  std::vector<std::string> out;
  const double ln_n = std::log(static_cast<double>(std::max(n, 1)));
  for (double w : omega_grid) {
    if (w >= ln_n) {
      out.push_back("omega " + FormatReal(w) + " >= ln n = " + FormatReal(ln_n) +
                    " (outside the o(log n) regime)");
    }
  }
  return out;
}

uint64_t DeriveSeed(uint64_t base_seed, uint64_t grid_index,
                    uint64_t trial_index) {
  return Mix64(Mix64(base_seed ^ Mix64(grid_index + 1)) ^
               Mix64(~(trial_index + 1)));
}

double ClampedThresholdP(int n, double omega, double alpha_min) {
  const double p = (std::log(static_cast<double>(n)) + omega) / (alpha_min * n);
  return std::clamp(p, 0.0, 1.0);
}

std::vector<ColorProfile> SuiteProfiles(const ExperimentConfig& config) {
  const int q = config.colors.q();
  std::vector<ColorProfile> out;
  if (config.suite.corners) {
    for (Color c = 1; c <= q; ++c) {
      out.push_back(ColorProfile::Corner(q, config.n, c));
    }
  }
  // Uniform lattice points of the simplex: q-1 distinct bar positions among
  // n+q-1 slots (Floyd's sampling), gaps between bars are the counts.
  std::mt19937_64 rng(Mix64(config.base_seed ^ 0x5eed5eed5eed5eedULL));
  const int slots = config.n + q - 1;
  for (int r = 0; r < config.suite.random_count; ++r) {
    std::vector<int> bars;
    for (int j = slots - (q - 1); j < slots; ++j) {
      const int t = static_cast<int>(UniformUnit(rng) * (j + 1));
      if (std::find(bars.begin(), bars.end(), t) == bars.end()) {
        bars.push_back(t);
      } else {
        bars.push_back(j);
      }
    }
    std::sort(bars.begin(), bars.end());
    ColorProfile p{std::vector<int>(q, 0)};
    int prev = -1;
    for (int i = 0; i < q - 1; ++i) {
      p.counts[i] = bars[i] - prev - 1;
      prev = bars[i];
    }
    p.counts[q - 1] = slots - prev - 1;
    out.push_back(std::move(p));
  }
  for (const ColorProfile& p : config.suite.explicit_profiles) out.push_back(p);
  return out;
}

namespace {

double MsSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

TrialRecord RunTrial(const ExperimentConfig& config, int grid_index,
                     int trial_index) {
  config.Validate();
  if (grid_index < 0 || grid_index >= static_cast<int>(config.omega_grid.size())) {
    Invalid("grid index out of range");
  }
  const int q = config.colors.q();
  TrialRecord r;
  r.grid_index = grid_index;
  r.trial_index = trial_index;
  r.omega = config.omega_grid[grid_index];
  r.p = ClampedThresholdP(config.n, r.omega, config.colors.alpha_min());
  r.seed = DeriveSeed(config.base_seed, grid_index, trial_index);
  r.n = config.n;
  r.q = q;

  const ColoredBipartiteGraph g =
      SampleGraph({config.n, r.p, config.colors, r.seed});
  r.edges = g.num_edges();

  if (config.checks.per_color_pm) {
    for (Color c = 1; c <= q; ++c) {
      const auto t0 = std::chrono::steady_clock::now();
      r.pm_success.push_back(
          std::holds_alternative<Matching>(MonochromaticPerfectMatching(g, c)));
      r.pm_ms.push_back(MsSince(t0));
    }
  }

  r.suite = SuiteProfiles(config);
  const std::vector<ColorProfile>& suite = r.suite;
  if (config.checks.walk) {
    bool corners = true, all = true;
    for (size_t j = 0; j < suite.size(); ++j) {
      const auto t0 = std::chrono::steady_clock::now();
      WalkOutcome w = AchieveProfile(
          g, suite[j], Mix64(r.seed ^ Mix64(0x100000000ULL + j)), config.walk);
      WalkCheck check;
      check.target = suite[j];
      check.success = w.ok();
      check.steps = w.report.steps_succeeded;
      for (int x : w.report.retries) check.retries += x;
      check.failure = w.failure;
      check.ms = MsSince(t0);
      if (IsCorner(suite[j])) corners = corners && check.success;
      all = all && check.success;
      r.walks.push_back(std::move(check));
    }
    r.all_corners = corners;
    r.estimated_full_mcp = all;
  }

  if (config.checks.isolated) {
    for (Color c = 1; c <= q; ++c) {
      const auto t0 = std::chrono::steady_clock::now();
      IsolatedVertices iso = IsolatedColorVertices(g, c);
      r.isolated_a.push_back(static_cast<int>(iso.a_side.size()));
      r.isolated_b.push_back(static_cast<int>(iso.b_side.size()));
      r.isolated_ms.push_back(MsSince(t0));
    }
  }

  if (config.checks.mcp_exact) {
    const auto t0 = std::chrono::steady_clock::now();
    r.mcp = EnumerateMcp(g);
    r.mcp_ms = MsSince(t0);
    for (const ColorProfile& p : suite) {
      r.suite_in_mcp.push_back(
          std::binary_search(r.mcp->begin(), r.mcp->end(), p));
    }
    if (config.checks.walk) {
      bool agree = true;
      for (size_t j = 0; j < r.walks.size(); ++j) {
        if (r.walks[j].success && !r.suite_in_mcp[j]) agree = false;
      }
      r.walk_oracle_agree = agree;
    }
  }
  return r;
}

std::vector<CheckRow> RowsOf(const TrialRecord& r, bool with_timing) {
  std::vector<CheckRow> rows;
  auto base = [&](std::string check) {
    CheckRow row;
    row.omega = r.omega;
    row.p = r.p;
    row.trial = r.trial_index;
    row.seed = r.seed;
    row.check = std::move(check);
    return row;
  };

  for (size_t c = 0; c < r.pm_success.size(); ++c) {
    CheckRow row = base("pm");
    row.target = ColorProfile::Corner(r.q, r.n, c + 1);
    row.success = r.pm_success[c];
    if (with_timing) row.ms = r.pm_ms[c];
    rows.push_back(std::move(row));
  }
  for (const WalkCheck& w : r.walks) {
    CheckRow row = base("walk");
    row.target = w.target;
    row.success = w.success;
    row.steps = w.steps;
    row.retries = w.retries;
    if (with_timing) row.ms = w.ms;
    rows.push_back(std::move(row));
  }
  for (size_t c = 0; c < r.isolated_a.size(); ++c) {
    CheckRow row = base("isolated");
    row.target = ColorProfile::Corner(r.q, r.n, c + 1);
    row.success = r.isolated_a[c] == 0 && r.isolated_b[c] == 0;
    row.steps = r.isolated_a[c] + r.isolated_b[c];
    if (with_timing) row.ms = r.isolated_ms[c];
    rows.push_back(std::move(row));
  }
  if (r.mcp) {
    for (size_t j = 0; j < r.suite_in_mcp.size(); ++j) {
      CheckRow row = base("mcp");
      row.target = r.suite[j];
      row.success = r.suite_in_mcp[j];
      if (with_timing) row.ms = r.mcp_ms;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<SummaryRow> Summarize(const std::vector<CheckRow>& rows) {
  struct Acc {
    double p = 0;
    int rows = 0;
    int successes = 0;
    int64_t steps = 0;
  };
  std::vector<double> omegas;
  std::map<std::pair<double, std::string>, Acc> groups;
  std::map<double, std::vector<std::string>> check_order;
  // (omega, trial) -> (all corner walks ok, all walks ok)
  std::map<std::pair<double, int>, std::pair<bool, bool>> trial_events;
  std::map<double, double> omega_p;

  for (const CheckRow& row : rows) {
    if (std::find(omegas.begin(), omegas.end(), row.omega) == omegas.end()) {
      omegas.push_back(row.omega);
    }
    omega_p[row.omega] = row.p;
    auto& order = check_order[row.omega];
    if (std::find(order.begin(), order.end(), row.check) == order.end()) {
      order.push_back(row.check);
    }
    Acc& acc = groups[{row.omega, row.check}];
    acc.p = row.p;
    ++acc.rows;
    acc.successes += row.success;
    acc.steps += row.steps;
    if (row.check == "walk") {
      auto [it, inserted] =
          trial_events.try_emplace({row.omega, row.trial}, true, true);
      if (IsCorner(row.target)) it->second.first &= row.success;
      it->second.second &= row.success;
    }
  }

  std::vector<SummaryRow> out;
  for (double omega : omegas) {
    for (const std::string& check : check_order[omega]) {
      const Acc& acc = groups[{omega, check}];
      out.push_back({omega, acc.p, check, acc.rows, acc.successes,
                     static_cast<double>(acc.successes) / acc.rows,
                     static_cast<double>(acc.steps) / acc.rows});
    }
    int trials = 0, corners = 0, all = 0;
    for (const auto& [key, ev] : trial_events) {
      if (key.first != omega) continue;
      ++trials;
      corners += ev.first;
      all += ev.second;
    }
    if (trials > 0) {
      out.push_back({omega, omega_p[omega], "walk_all_corners", trials, corners,
                     static_cast<double>(corners) / trials, 0.0});
      out.push_back({omega, omega_p[omega], "walk_all_suite", trials, all,
                     static_cast<double>(all) / trials, 0.0});
    }
  }
  return out;
}

SweepResult Sweep(const ExperimentConfig& config) {
  config.Validate();
  const int grid = static_cast<int>(config.omega_grid.size());
  const int jobs = grid * config.trials;
  SweepResult result;
  result.records.resize(jobs);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    while (true) {
      const int job = next.fetch_add(1);
      if (job >= jobs) return;
      try {
        result.records[job] =
            RunTrial(config, job / config.trials, job % config.trials);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers = std::min(config.workers, std::max(jobs, 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (const TrialRecord& r : result.records) {
    auto rows = RowsOf(r, config.record_timing);
    result.rows.insert(result.rows.end(), rows.begin(), rows.end());
  }
  result.summary = Summarize(result.rows);
  return result;
}

std::string FormatReal(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void EmitCsv(const std::vector<CheckRow>& rows, std::ostream& out) {
  out << "omega,p,trial,seed,check,target_profile,success,steps,retries,ms\n";
  for (const CheckRow& r : rows) {
    out << FormatReal(r.omega) << ',' << FormatReal(r.p) << ',' << r.trial
        << ',' << r.seed << ',' << r.check << ",\"" << r.target.ToString()
        << "\"," << (r.success ? 1 : 0) << ',' << r.steps << ',' << r.retries
        << ',';
    if (r.ms) out << FormatReal(*r.ms);
    out << '\n';
  }
}

void EmitJsonLines(const std::vector<CheckRow>& rows, std::ostream& out) {
  for (const CheckRow& r : rows) {
    nlohmann::ordered_json j;
    j["omega"] = r.omega;
    j["p"] = r.p;
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    j["check"] = r.check;
    j["target_profile"] = r.target.counts;
    j["success"] = r.success;
    j["steps"] = r.steps;
    j["retries"] = r.retries;
    j["ms"] = r.ms ? nlohmann::ordered_json(*r.ms) : nlohmann::ordered_json();
    out << j.dump() << '\n';
  }
}

void Emit(const std::vector<CheckRow>& rows, OutputFormat format,
          const std::string& path) {
  if (rows.empty()) Invalid("nothing to emit");
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kIo, "cannot open " + path);
  if (format == OutputFormat::kCsv) {
    EmitCsv(rows, file);
  } else {
    EmitJsonLines(rows, file);
  }
  file.flush();
  if (!file) throw Error(ErrorCode::kIo, "write failed for " + path);
}

void EmitSummaryCsv(const std::vector<SummaryRow>& summary, std::ostream& out) {
  out << "omega,p,check,rows,successes,success_fraction,mean_steps\n";
  for (const SummaryRow& s : summary) {
    out << FormatReal(s.omega) << ',' << FormatReal(s.p) << ',' << s.check
        << ',' << s.rows << ',' << s.successes << ','
        << FormatReal(s.success_fraction) << ',' << FormatReal(s.mean_steps)
        << '\n';
  }
}

}  // namespace mcplab
