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

#ifndef QASSIGN_TOOLS_COMMANDS_H_
#define QASSIGN_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qassign/annealer.h"
#include "qassign/circuit.h"
#include "qassign/device_graph.h"
#include "qassign/metrics.h"
#include "qassign/simulator.h"

namespace qassign::cli {

using json = nlohmann::json;

// Every command writes into out_dir and drops a manifest.json listing the
// config, seeds and SHA-256 of each output file.
inline constexpr const char* kManifestName = "manifest.json";

struct CircuitSpec {
  std::string family = "ghz";  // ghz | swapnet | clifford | qft | random | file
  int n = 5;
  uint64_t seed = 0;
  uint64_t j = 0;
  int hops = -1;  // -1: n - 1
  double theta = 1.0471975511965976;  // alpha = cos(theta/2)
  double phase = 0.0;                 // beta = e^{i phase} sin(theta/2)
  int depth = 4;
  std::string file;
};

struct GenNoisemapConfig {
  int rows = 5;
  int cols = 5;
  double eps_min = 0.0;
  double eps_max = 0.02;
  double eta_min = 0.0;
  double eta_max = 0.1;
  double readout_max = 0.0;
  bool planted = false;
  int planted_n = 5;
  double planted_scale = 0.0;
  // Weights off the planted path ramp from planted_scale back to 1 over this
  // many hops; 0 leaves them untouched.
  double planted_radius = 2.0;
  uint64_t seed = 0;
  std::string out_dir;
};

struct SweepConfig {
  std::string layout;
  CircuitSpec circuit;
  std::string noise = "local";  // none | local | global
  uint64_t shots = 0;
  bool confusion = false;
  bool correct = false;
  int ensemble = 0;
  double reject_threshold = 0.15;
  uint64_t max_assignments = 1000000;
  uint64_t seed = 0;
  std::string out_dir;
};

struct AnnealConfig {
  // Neighbourhoods always come from the layout. With a table, costs are
  // 1 - metric read from a sweep CSV; otherwise they are simulated on demand.
  std::string layout;
  std::string table;
  std::string metric = "F_LE";
  CircuitSpec circuit;
  std::string noise = "local";

  std::string schedule = "exponential";  // exponential | logarithmic
  double t0 = 0.10;
  double alpha = 0.987;
  int steps = 150;
  int k = 2;
  int trials = 500;
  int baseline_draws = 20;
  int bootstrap = 1000;
  uint64_t seed = 0;
  bool write_traces = true;
  std::string out_dir;
};

struct ReportConfig {
  std::string sweep;
  std::string layout;  // enables the locality table
  std::vector<int> ks = {0, 1, 2, 3};
  bool drop_rejected = false;
  int bootstrap = 1000;
  uint64_t seed = 0;
  std::string out_dir;
};

struct ReadoutDemoConfig {
  int n = 4;
  double p10 = 0.02;
  double p01 = 0.12;
  double eps = 0.01;
  double eta = 0.03;
  std::string out_dir;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(CircuitSpec, family, n, seed, j, hops, theta,
                                                phase, depth, file)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(GenNoisemapConfig, rows, cols, eps_min, eps_max,
                                                eta_min, eta_max, readout_max, planted,
                                                planted_n, planted_scale, planted_radius, seed,
                                                out_dir)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(SweepConfig, layout, circuit, noise, shots,
                                                confusion, correct, ensemble, reject_threshold,
                                                max_assignments, seed, out_dir)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(AnnealConfig, table, metric, layout, circuit,
                                                noise, schedule, t0, alpha, steps, k, trials,
                                                baseline_draws, bootstrap, seed, write_traces,
                                                out_dir)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(ReportConfig, sweep, layout, ks, drop_rejected,
                                                bootstrap, seed, out_dir)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(ReadoutDemoConfig, n, p10, p01, eps, eta,
                                                out_dir)

Circuit build_circuit(const CircuitSpec& spec);
NoiseModel noise_model(const std::string& name);

struct GeneratedMap {
  NoiseGraph graph;
  std::optional<Assignment> planted;
};
GeneratedMap generate_noisemap(const GenNoisemapConfig& c);

// Number of n-vertex simple paths, stopping once it exceeds cap.
uint64_t count_paths_capped(const NoiseGraph& g, int n, uint64_t cap);

// Sweep CSV columns:
// path,F,F_LE,F0,F_extrap,F_LE_rand_mean,F_LE_rand_std,shots,F_LE_sampled,
// F_LE_sampled_stderr,rejected
std::string sweep_csv(const std::vector<MetricsRecord>& rows);
std::vector<MetricsRecord> parse_sweep_csv(const std::string& text);

std::string format_double(double v);
std::string sha256_hex(const std::string& bytes);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

// Each run_* returns the relative names of the files written (manifest
// excluded).
std::vector<std::string> run_gen_noisemap(const GenNoisemapConfig& c);
std::vector<std::string> run_sweep(const SweepConfig& c);
std::vector<std::string> run_anneal(const AnnealConfig& c);
std::vector<std::string> run_report(const ReportConfig& c);
std::vector<std::string> run_readout_demo(const ReadoutDemoConfig& c);

// Writes out_dir/manifest.json.
void write_manifest(const std::string& command, const json& config,
                    const std::string& out_dir, const std::vector<std::string>& outputs);

struct ReplayResult {
  bool identical = true;
  std::vector<std::string> mismatched;
};
// Re-runs the manifest's command into out_dir and compares checksums.
ReplayResult replay(const std::string& manifest_path, const std::string& out_dir);

// Dispatches by command name; used by main and replay.
std::vector<std::string> run_command(const std::string& command, const json& config);

}  // namespace qassign::cli

#endif  // QASSIGN_TOOLS_COMMANDS_H_
