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

// mcplab: sample, solve, audit and sweep randomly colored bipartite graphs.
//
// Exit codes: 0 success, 1 check failed, 2 usage or validation error, 3 I/O.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcplab/errors.h"
#include "mcplab/expansion.h"
#include "mcplab/graph.h"
#include "mcplab/lab.h"
#include "mcplab/matcher.h"
#include "mcplab/mcp_oracle.h"
#include "mcplab/profile_walk.h"
#include "mcplab/sampler.h"
#include "mcplab/structure_audit.h"

namespace {

using mcplab::Color;
using mcplab::ColoredBipartiteGraph;
using mcplab::ColorProfile;
using mcplab::Error;
using mcplab::ErrorCode;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct GlobalOptions {
  std::optional<uint64_t> seed;
  std::optional<int> n;
  std::optional<int> q;
  std::optional<std::string> alpha;
  std::optional<std::string> omega;
  std::optional<int> trials;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> config;
  std::optional<int> workers;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutput(const std::optional<std::string>& path,
                 const std::string& text) {
  if (!path || *path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + *path);
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + *path);
}

// Command-line settings layered over an optional config file.
mcplab::ExperimentConfig BuildConfig(const GlobalOptions& g) {
  mcplab::ExperimentConfig config;
  if (g.config) config = mcplab::ParseConfig(ReadFile(*g.config), config);
  if (g.n) mcplab::ApplySetting(config, "n", std::to_string(*g.n));
  if (g.q) mcplab::ApplySetting(config, "q", std::to_string(*g.q));
  if (g.alpha) mcplab::ApplySetting(config, "alpha", *g.alpha);
  if (g.omega) mcplab::ApplySetting(config, "omega", *g.omega);
  if (g.trials) mcplab::ApplySetting(config, "trials", std::to_string(*g.trials));
  if (g.seed) config.base_seed = *g.seed;
  if (g.workers) mcplab::ApplySetting(config, "workers", std::to_string(*g.workers));
  if (g.format) mcplab::ApplySetting(config, "format", *g.format);
  if (g.out) config.out = *g.out;
  return config;
}

ColoredBipartiteGraph LoadOrSample(const std::string& graph_path,
                                   const GlobalOptions& globals) {
  if (!graph_path.empty()) return mcplab::ParseGraph(ReadFile(graph_path));
  mcplab::ExperimentConfig config = BuildConfig(globals);
  const double p = mcplab::ThresholdP(config.n, config.omega_grid.front(),
                                      config.colors.alpha_min());
  return mcplab::SampleGraph({config.n, p, config.colors, config.base_seed});
}

void PrintWarnings(const mcplab::ExperimentConfig& config) {
  for (const std::string& w : config.Warnings()) {
    std::cerr << "warning: " << w << "\n";
  }
}

json PairsJson(const mcplab::Matching& m) {
  json pairs = json::array();
  for (auto [a, b] : m.Pairs()) pairs.push_back({a, b});
  return pairs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect matching color profiles of randomly colored bipartite graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions globals;
  app.add_option("--seed", globals.seed, "Base seed");
  app.add_option("--n", globals.n, "Side size");
  app.add_option("--q", globals.q, "Number of colors (uniform alphas)");
  app.add_option("--alpha", globals.alpha, "Color probabilities, e.g. 0.5,0.25,0.25");
  app.add_option("--omega", globals.omega, "Omega value(s); k*llog means k ln ln n");
  app.add_option("--trials", globals.trials, "Trials per omega");
  app.add_option("--out", globals.out, "Output file ('-' for stdout)");
  app.add_option("--format", globals.format, "csv | jsonl");
  app.add_option("--config", globals.config, "Experiment config file");
  app.add_option("--workers", globals.workers, "Worker threads for sweeps");

  // gen
  auto* gen = app.add_subcommand("gen", "Sample a graph at the threshold p");
  std::optional<double> gen_p;
  gen->add_option("--p", gen_p, "Edge probability (overrides --omega)");

  // match
  auto* match = app.add_subcommand("match", "Maximum or monochromatic perfect matching");
  std::string match_graph;
  std::optional<int> match_color;
  match->add_option("--graph", match_graph, "Graph file (sampled from globals if omitted)");
  match->add_option("--color", match_color, "Restrict to one color");

  // walk
  auto* walk = app.add_subcommand("walk", "Reach a target color profile by recoloring cycles");
  std::string walk_graph;
  std::string walk_target;
  walk->add_option("--graph", walk_graph, "Graph file (sampled from globals if omitted)");
  walk->add_option("--target", walk_target, "Target profile, e.g. 334,333,333")->required();

  // mcp
  auto* mcp = app.add_subcommand("mcp", "Exact perfect matching color profile set");
  std::string mcp_graph;
  mcp->add_option("--graph", mcp_graph, "Graph file (sampled from globals if omitted)");

  // audit
  auto* audit = app.add_subcommand("audit", "Isolated vertices, structural witnesses, expansion trace");
  std::string audit_graph;
  std::optional<int> audit_color;
  std::string witness_kind;
  int s_size = 1, t_size = 1, x_size = 1, y_size = 1;
  double deg_cut = 1, k_deg = 1, min_edges = 0;
  bool trace = false;
  audit->add_option("--graph", audit_graph, "Graph file (sampled from globals if omitted)");
  audit->add_option("--color", audit_color, "Color to audit (default: all for isolated, 1 otherwise)");
  audit->add_option("--witness", witness_kind, "low-degree | high-degree | dense-cut | empty-cut | empty-cut-greedy");
  audit->add_option("--s-size", s_size);
  audit->add_option("--t-size", t_size);
  audit->add_option("--x-size", x_size);
  audit->add_option("--y-size", y_size);
  audit->add_option("--deg-cut", deg_cut);
  audit->add_option("--k", k_deg);
  audit->add_option("--min-edges", min_edges);
  audit->add_flag("--trace", trace, "Expansion trace from the first source-colored anchor");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over the omega grid");
  std::string summary_path;
  sweep->add_option("--summary", summary_path, "Summary CSV path (default: stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      mcplab::ExperimentConfig config = BuildConfig(globals);
      PrintWarnings(config);
      const double p = gen_p ? *gen_p
                             : mcplab::ThresholdP(config.n, config.omega_grid.front(),
                                                  config.colors.alpha_min());
      auto g = mcplab::SampleGraph({config.n, p, config.colors, config.base_seed});
      std::string text = "# n=" + std::to_string(config.n) + " p=" +
                         mcplab::FormatReal(p) + " seed=" +
                         std::to_string(config.base_seed) + "\n" +
                         mcplab::SerializeGraph(g);
      WriteOutput(globals.out, text);
      return kExitOk;
    }

    if (*match) {
      auto g = LoadOrSample(match_graph, globals);
      json out;
      int code = kExitOk;
      if (match_color) {
        auto result = mcplab::MonochromaticPerfectMatching(g, *match_color);
        out["color"] = *match_color;
        if (auto* m = std::get_if<mcplab::Matching>(&result)) {
          out["perfect"] = true;
          out["matching"] = PairsJson(*m);
        } else {
          const auto& fail = std::get<mcplab::NoPerfectMatching>(result);
          out["perfect"] = false;
          out["max_matching_size"] = fail.max_matching_size;
          out["hall_witness"] = fail.hall_witness;
          out["hall_neighborhood"] =
              mcplab::ColorNeighborhood(g, fail.hall_witness, *match_color);
          code = kExitCheckFailed;
        }
      } else {
        auto m = mcplab::MaxMatching(g);
        out["size"] = m.size();
        out["perfect"] = m.IsPerfect();
        out["matching"] = PairsJson(m);
        if (m.IsPerfect()) out["profile"] = mcplab::ProfileOf(g, m).counts;
        if (!m.IsPerfect()) code = kExitCheckFailed;
      }
      WriteOutput(globals.out, out.dump() + "\n");
      return code;
    }

    if (*walk) {
      auto g = LoadOrSample(walk_graph, globals);
      ColorProfile target = ColorProfile::Parse(walk_target);
      auto result = mcplab::AchieveProfile(g, target, globals.seed.value_or(1));
      json out;
      out["target"] = target.counts;
      out["success"] = result.ok();
      out["failure"] = std::string(mcplab::WalkFailureName(result.failure));
      if (!result.ok()) out["failed_color"] = result.failed_color;
      out["reached"] = result.reached.counts;
      out["report"] = json::parse(result.report.ToRecord());
      if (result.ok()) out["matching"] = PairsJson(*result.matching);
      WriteOutput(globals.out, out.dump() + "\n");
      return result.ok() ? kExitOk : kExitCheckFailed;
    }

    if (*mcp) {
      auto g = LoadOrSample(mcp_graph, globals);
      std::string text;
      for (const ColorProfile& p : mcplab::EnumerateMcp(g)) {
        text += p.ToString() + "\n";
      }
      WriteOutput(globals.out, text);
      return kExitOk;
    }

    if (*audit) {
      auto g = LoadOrSample(audit_graph, globals);
      json out;
      out["n"] = g.n();
      out["q"] = g.q();
      json iso = json::object();
      for (Color c = 1; c <= g.q(); ++c) {
        if (audit_color && *audit_color != c) continue;
        auto v = mcplab::IsolatedColorVertices(g, c);
        iso[std::to_string(c)] = {{"a", v.a_side}, {"b", v.b_side}};
      }
      out["isolated"] = iso;
      const Color c = audit_color.value_or(1);
      const double alpha_min =
          g.color_spec() ? g.color_spec()->alpha_min() : 1.0 / g.q();
      if (g.n() >= 3) {
        auto k = mcplab::DefaultConstants(g.n(), g.q(), alpha_min);
        out["constants"] = {
            {"low_degree_set_coeff", k.low_degree_set_coeff},
            {"bad_set_coeff", k.bad_set_coeff},
            {"removed_set_coeff", k.removed_set_coeff},
            {"degree_cap", k.degree_cap},
            {"min_source_degree", k.min_source_degree},
            {"small_set_coeff", k.small_set_coeff},
            {"dense_set_coeff", k.dense_set_coeff},
            {"density_coeff", k.density_coeff},
            {"expansion_factor", k.expansion_factor},
            {"expansion_cap", k.expansion_cap},
            {"stop_size", k.stop_size}};
        if (trace) {
          auto start = mcplab::MonochromaticPerfectMatching(g, c);
          if (auto* m = std::get_if<mcplab::Matching>(&start)) {
            auto t = mcplab::ComputeExpansionTrace(g, *m, c, k, 0);
            auto side = [](const mcplab::SideTrace& s) {
              json j;
              j["anchor"] = s.anchor;
              j["source_side"] = s.source_side.size();
              j["high_degree"] = s.high_degree.size();
              j["low_capture"] = s.low_capture.size();
              j["initial_bad"] = s.initial_bad.size();
              j["initial_bad_union_size"] = s.initial_bad_union_size;
              j["absorbed"] = s.absorbed.size();
              j["absorption_steps"] = s.absorption_steps;
              j["retained"] = s.retained.size();
              j["anchor_in_retained"] = s.anchor_in_retained;
              j["retained_fraction"] = s.retained_fraction;
              j["retained_fraction_bound"] = s.retained_fraction_bound;
              j["layer_sizes"] = s.layer_sizes;
              j["neighborhood_sizes"] = s.neighborhood_sizes;
              j["cumulative_sizes"] = s.cumulative_sizes;
              j["growth_met"] = s.growth_met;
              j["stop_layer"] = s.stop_layer ? json(*s.stop_layer) : json();
              j["min_retained_degree"] = s.min_retained_degree;
              j["min_retained_degree_compare_color"] =
                  s.min_retained_degree_compare_color;
              j["retained_degree_bound"] = s.retained_degree_bound;
              return j;
            };
            out["trace"] = {{"forward", side(t.forward)},
                            {"backward", side(t.backward)}};
          } else {
            out["trace"] = "no monochromatic perfect matching in color " +
                           std::to_string(c);
          }
        }
      }
      if (!witness_kind.empty()) {
        json w;
        if (witness_kind == "low-degree") {
          if (auto r = mcplab::FindLowDegreeWitness(g, c, s_size, t_size, x_size, deg_cut)) {
            w = {{"x", r->x}, {"s", r->s}, {"t", r->t}};
          }
        } else if (witness_kind == "high-degree") {
          if (auto r = mcplab::FindHighDegreeWitness(g, c, x_size, y_size, k_deg)) {
            w = {{"x", r->x}, {"y", r->y}};
          }
        } else if (witness_kind == "dense-cut") {
          if (auto r = mcplab::FindDenseCutWitness(g, c, s_size, t_size, min_edges)) {
            w = {{"s", r->s}, {"t", r->t}};
          }
        } else if (witness_kind == "empty-cut") {
          if (auto r = mcplab::FindEmptyCutWitness(g, c, s_size, t_size)) {
            w = {{"s", r->s}, {"t", r->t}};
          }
        } else if (witness_kind == "empty-cut-greedy") {
          if (auto r = mcplab::FindEmptyCutWitnessGreedy(g, c, s_size, t_size)) {
            w = {{"s", r->s}, {"t", r->t}, {"exhaustive", false}};
          }
        } else {
          std::cerr << "unknown witness kind '" << witness_kind << "'\n";
          return kExitUsage;
        }
        out["witness"] = {{"kind", witness_kind}, {"color", c}, {"result", w}};
      }
      WriteOutput(globals.out, out.dump() + "\n");
      return kExitOk;
    }

    if (*sweep) {
      mcplab::ExperimentConfig config = BuildConfig(globals);
      config.Validate();
      PrintWarnings(config);
      auto result = mcplab::Sweep(config);
      if (config.out.empty() || config.out == "-") {
        if (config.format == mcplab::OutputFormat::kCsv) {
          mcplab::EmitCsv(result.rows, std::cout);
        } else {
          mcplab::EmitJsonLines(result.rows, std::cout);
        }
      } else {
        mcplab::Emit(result.rows, config.format, config.out);
      }
      std::ostringstream summary;
      mcplab::EmitSummaryCsv(result.summary, summary);
      if (summary_path.empty()) {
        std::cerr << summary.str();
      } else {
        WriteOutput(summary_path, summary.str());
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kIo ? kExitIo : kExitUsage;
  }
  return kExitUsage;
}
