// Copyright 2026 The qassign Authors
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

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.h"
#include "qassign/error.h"

namespace {

using qassign::cli::json;

// Flags that were given explicitly override the --config file.
struct Overrides {
  std::vector<std::pair<CLI::Option*, json::json_pointer>> entries;

  template <typename T>
  CLI::Option* add(CLI::App* app, const std::string& flag, T& target, const std::string& key,
                   const std::string& help) {
    CLI::Option* opt = app->add_option(flag, target, help)->capture_default_str();
    entries.emplace_back(opt, json::json_pointer(key));
    return opt;
  }
  CLI::Option* add_flag(CLI::App* app, const std::string& flag, bool& target,
                        const std::string& key, const std::string& help) {
    CLI::Option* opt = app->add_flag(flag, target, help);
    entries.emplace_back(opt, json::json_pointer(key));
    return opt;
  }

  json merge(const json& from_flags, const json& base) const {
    json out = base;
    for (const auto& [opt, ptr] : entries) {
      if (opt->count() > 0) out[ptr] = from_flags[ptr];
    }
    return out;
  }
};

void add_circuit(Overrides& ov, CLI::App* app, qassign::cli::CircuitSpec& c) {
  ov.add(app, "--family", c.family, "/circuit/family",
         "ghz | swapnet | clifford | qft | random | file");
  ov.add(app, "-n,--qubits", c.n, "/circuit/n", "Logical qubits");
  ov.add(app, "--circuit-seed", c.seed, "/circuit/seed", "Seed for clifford/random circuits");
  ov.add(app, "--j", c.j, "/circuit/j", "QFT input basis state");
  ov.add(app, "--hops", c.hops, "/circuit/hops", "SWAPnet hops (-1: n-1)");
  ov.add(app, "--theta", c.theta, "/circuit/theta", "SWAPnet polar angle");
  ov.add(app, "--phase", c.phase, "/circuit/phase", "SWAPnet relative phase");
  ov.add(app, "--depth", c.depth, "/circuit/depth", "Random-circuit layers");
  ov.add(app, "--circuit-file", c.file, "/circuit/file", "Circuit JSON for family=file");
}

int fail(const std::string& code, const std::string& message) {
  json err = {{"error", {{"code", code}, {"message", message}}}};
  std::cerr << err.dump() << std::endl;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qassign::cli;
  CLI::App app{"Noise-aware qubit assignment experiments"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config; explicit flags take precedence")
      ->check(CLI::ExistingFile);

  GenNoisemapConfig gen;
  SweepConfig sw;
  AnnealConfig an;
  ReportConfig rep;
  ReadoutDemoConfig demo;
  std::string manifest, replay_out;

  Overrides ov_gen, ov_sw, ov_an, ov_rep, ov_demo;

  CLI::App* c_gen = app.add_subcommand("gen-noisemap", "Random grid noise map");
  ov_gen.add(c_gen, "--rows", gen.rows, "/rows", "Grid rows");
  ov_gen.add(c_gen, "--cols", gen.cols, "/cols", "Grid columns");
  ov_gen.add(c_gen, "--eps-min", gen.eps_min, "/eps_min", "Lower bound of vertex weights");
  ov_gen.add(c_gen, "--eps-max", gen.eps_max, "/eps_max", "Upper bound of vertex weights");
  ov_gen.add(c_gen, "--eta-min", gen.eta_min, "/eta_min", "Lower bound of edge weights");
  ov_gen.add(c_gen, "--eta-max", gen.eta_max, "/eta_max", "Upper bound of edge weights");
  ov_gen.add(c_gen, "--readout-max", gen.readout_max, "/readout_max",
             "Upper bound of readout flip rates");
  ov_gen.add_flag(c_gen, "--planted", gen.planted, "/planted", "Plant a low-noise path");
  ov_gen.add(c_gen, "--planted-n", gen.planted_n, "/planted_n", "Planted path length");
  ov_gen.add(c_gen, "--planted-scale", gen.planted_scale, "/planted_scale",
             "Weight factor on the planted path");
  ov_gen.add(c_gen, "--planted-radius", gen.planted_radius, "/planted_radius",
             "Hops over which weights recover off the planted path (0: off)");
  ov_gen.add(c_gen, "--seed", gen.seed, "/seed", "Seed");
  ov_gen.add(c_gen, "-o,--out-dir", gen.out_dir, "/out_dir", "Output directory");

  CLI::App* c_sw = app.add_subcommand("sweep", "Metrics for every assignment");
  ov_sw.add(c_sw, "--layout", sw.layout, "/layout", "Layout JSON");
  add_circuit(ov_sw, c_sw, sw.circuit);
  ov_sw.add(c_sw, "--noise", sw.noise, "/noise", "none | local | global");
  ov_sw.add(c_sw, "--shots", sw.shots, "/shots", "Shots for sampled F_LE (0: off)");
  ov_sw.add_flag(c_sw, "--confusion", sw.confusion, "/confusion", "Apply readout confusion");
  ov_sw.add_flag(c_sw, "--correct", sw.correct, "/correct", "Linear readout correction");
  ov_sw.add(c_sw, "--ensemble", sw.ensemble, "/ensemble", "Random-circuit ensemble size");
  ov_sw.add(c_sw, "--reject-threshold", sw.reject_threshold, "/reject_threshold",
            "Readout rejection threshold");
  ov_sw.add(c_sw, "--max-assignments", sw.max_assignments, "/max_assignments",
            "Budget guard");
  ov_sw.add(c_sw, "--seed", sw.seed, "/seed", "Seed");
  ov_sw.add(c_sw, "-o,--out-dir", sw.out_dir, "/out_dir", "Output directory");

  CLI::App* c_an = app.add_subcommand("anneal", "Simulated-annealing campaign");
  ov_an.add(c_an, "--layout", an.layout, "/layout", "Layout JSON");
  ov_an.add(c_an, "--table", an.table, "/table", "Sweep CSV for offline costs");
  ov_an.add(c_an, "--metric", an.metric, "/metric", "Table column used as score");
  add_circuit(ov_an, c_an, an.circuit);
  ov_an.add(c_an, "--noise", an.noise, "/noise", "none | local | global");
  ov_an.add(c_an, "--schedule", an.schedule, "/schedule", "exponential | logarithmic");
  ov_an.add(c_an, "--t0", an.t0, "/t0", "Initial temperature");
  ov_an.add(c_an, "--alpha", an.alpha, "/alpha", "Exponential decay factor");
  ov_an.add(c_an, "--steps", an.steps, "/steps", "Iterations per trial");
  ov_an.add(c_an, "-k,--k", an.k, "/k", "Neighbourhood size");
  ov_an.add(c_an, "--trials", an.trials, "/trials", "Independent trials");
  ov_an.add(c_an, "--baseline-draws", an.baseline_draws, "/baseline_draws",
            "Random best-of-n_s draws per trial");
  ov_an.add(c_an, "--bootstrap", an.bootstrap, "/bootstrap", "Bootstrap resamples");
  ov_an.add(c_an, "--seed", an.seed, "/seed", "Seed");
  ov_an.add(c_an, "--write-traces", an.write_traces, "/write_traces", "Per-trial trace CSVs");
  ov_an.add(c_an, "-o,--out-dir", an.out_dir, "/out_dir", "Output directory");

  CLI::App* c_rep = app.add_subcommand("report", "Rank statistics of a sweep");
  ov_rep.add(c_rep, "--sweep", rep.sweep, "/sweep", "Sweep CSV");
  ov_rep.add(c_rep, "--layout", rep.layout, "/layout", "Layout JSON (enables locality)");
  ov_rep.add(c_rep, "--ks", rep.ks, "/ks", "Neighbourhood sizes for locality");
  ov_rep.add_flag(c_rep, "--drop-rejected", rep.drop_rejected, "/drop_rejected",
                  "Exclude readout-rejected rows");
  ov_rep.add(c_rep, "--bootstrap", rep.bootstrap, "/bootstrap", "Bootstrap resamples");
  ov_rep.add(c_rep, "--seed", rep.seed, "/seed", "Seed");
  ov_rep.add(c_rep, "-o,--out-dir", rep.out_dir, "/out_dir", "Output directory");

  CLI::App* c_demo = app.add_subcommand("readout-demo", "Readout asymmetry on GHZ echoes");
  ov_demo.add(c_demo, "-n,--qubits", demo.n, "/n", "GHZ size");
  ov_demo.add(c_demo, "--p10", demo.p10, "/p10", "P(read 1 | 0)");
  ov_demo.add(c_demo, "--p01", demo.p01, "/p01", "P(read 0 | 1)");
  ov_demo.add(c_demo, "--eps", demo.eps, "/eps", "Single-qubit gate weight");
  ov_demo.add(c_demo, "--eta", demo.eta, "/eta", "Two-qubit gate weight");
  ov_demo.add(c_demo, "-o,--out-dir", demo.out_dir, "/out_dir", "Output directory");

  CLI::App* c_replay = app.add_subcommand("replay", "Re-run a manifest and compare checksums");
  c_replay->add_option("--manifest", manifest, "manifest.json")->required();
  c_replay->add_option("-o,--out-dir", replay_out, "Scratch output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return fail("Usage", e.what());
  }

  try {
    if (c_replay->parsed()) {
      ReplayResult r = replay(manifest, replay_out);
      json out = {{"identical", r.identical}, {"mismatched", r.mismatched}};
      std::cout << out.dump() << std::endl;
      return r.identical ? 0 : 3;
    }
    json base;
    if (!config_path.empty()) base = json::parse(read_file(config_path));
    std::string command;
    json config;
    auto resolve = [&](const auto& defaults_and_flags, const Overrides& ov, CLI::App* sub) {
      command = sub->get_name();
      json flags = defaults_and_flags;
      config = base.is_null() ? flags : ov.merge(flags, base);
    };
    if (c_gen->parsed()) resolve(json(gen), ov_gen, c_gen);
    if (c_sw->parsed()) resolve(json(sw), ov_sw, c_sw);
    if (c_an->parsed()) resolve(json(an), ov_an, c_an);
    if (c_rep->parsed()) resolve(json(rep), ov_rep, c_rep);
    if (c_demo->parsed()) resolve(json(demo), ov_demo, c_demo);
    std::vector<std::string> outputs = run_command(command, config);
    std::string out_dir = config.value("out_dir", std::string());
    write_manifest(command, config, out_dir, outputs);
    json done = {{"command", command}, {"out_dir", out_dir}, {"files", outputs.size()}};
    std::cout << done.dump() << std::endl;
  } catch (const qassign::Error& e) {
    return fail(qassign::error_code_name(e.code()), e.what());
  } catch (const json::exception& e) {
    return fail("Parse", e.what());
  } catch (const std::exception& e) {
    return fail("Internal", e.what());
  }
  return 0;
}
