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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "commands.h"
#include "qassign/error.h"
#include "qassign/layout_io.h"
#include "qassign/stats.h"

namespace qassign::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    root_ = fs::temp_directory_path() / ("qassign_cli_" + std::string(info->name()));
    fs::remove_all(root_);
    fs::create_directories(root_);
  }
  void TearDown() override { fs::remove_all(root_); }
  std::string dir(const std::string& name) const { return (root_ / name).string(); }

  // Small planted map shared by several tests.
  std::string planted_layout(int rows = 3, int cols = 3, int n = 3) {
    GenNoisemapConfig c;
    c.rows = rows;
    c.cols = cols;
    c.planted = true;
    c.planted_n = n;
    c.seed = 5;
    c.readout_max = 0.05;
    c.out_dir = dir("map");
    run_gen_noisemap(c);
    return dir("map") + "/layout.json";
  }

  fs::path root_;
};

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

TEST(Sha256Test, KnownVectors) {
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(FormatTest, RoundTripsDoubles) {
  for (double v : {0.1, 1.0 / 3, 0.9468797703814152, 1e-300, 0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(CountPathsTest, MatchesEnumeration) {
  NoiseGraph g = NoiseGraph::grid(4, 4);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(count_paths_capped(g, n, 1u << 30), enumerate_simple_paths(g, n).size());
  }
  EXPECT_EQ(count_paths_capped(NoiseGraph::grid(2, 2), 3, 1000), 8u);
  EXPECT_GT(count_paths_capped(g, 6, 10), 10u);
}

TEST_F(CliTest, NoisemapIsDeterministic) {
  GenNoisemapConfig c;
  c.planted = true;
  c.seed = 11;
  c.out_dir = dir("a");
  run_gen_noisemap(c);
  c.out_dir = dir("b");
  run_gen_noisemap(c);
  EXPECT_EQ(read_file(dir("a") + "/layout.json"), read_file(dir("b") + "/layout.json"));
  c.seed = 12;
  c.out_dir = dir("c");
  run_gen_noisemap(c);
  EXPECT_NE(read_file(dir("a") + "/layout.json"), read_file(dir("c") + "/layout.json"));
  NoiseGraph g = load_layout(dir("a") + "/layout.json");
  EXPECT_EQ(g.num_vertices(), 25u);
  EXPECT_EQ(g.num_edges(), 40u);
}

TEST_F(CliTest, NoisemapValidation) {
  GenNoisemapConfig c;
  c.rows = 1;
  c.out_dir = dir("x");
  EXPECT_EQ(code_of([&] { generate_noisemap(c); }), ErrorCode::kInvalidArgument);
  c.rows = 3;
  c.eps_max = 2.0;
  EXPECT_EQ(code_of([&] { generate_noisemap(c); }), ErrorCode::kInvalidArgument);
}

TEST_F(CliTest, PlantedPathIsSweepOptimum) {
  GenNoisemapConfig c;
  c.planted = true;
  c.seed = 1;
  GeneratedMap m = generate_noisemap(c);
  ASSERT_TRUE(m.planted.has_value());
  Circuit ghz = build_ghz(5);
  auto paths = enumerate_simple_paths(m.graph, 5);
  auto rows = sweep(ghz, paths, m.graph, NoiseModel::local(), {});
  double best = 0;
  for (const auto& r : rows) best = std::max(best, r.F_LE);
  for (const auto& r : rows) {
    bool planted = r.assignment == *m.planted || r.assignment == reversed(*m.planted);
    if (planted) EXPECT_NEAR(r.F_LE, 1.0, 1e-12);
    if (!planted) EXPECT_LT(r.F_LE, best - 1e-6) << to_string(r.assignment);
  }
}

TEST_F(CliTest, SweepNoiselessIsAllOnes) {
  SweepConfig c;
  c.layout = planted_layout();
  c.circuit.n = 3;
  c.noise = "none";
  c.shots = 200;
  c.ensemble = 2;
  c.out_dir = dir("sweep");
  run_sweep(c);
  auto rows = parse_sweep_csv(read_file(dir("sweep") + "/sweep.csv"));
  ASSERT_EQ(rows.size(), enumerate_simple_paths(load_layout(c.layout), 3).size());
  for (const auto& r : rows) {
    for (double v : {r.F, r.F_LE, r.F_LE_rand_mean, r.F_LE_sampled}) EXPECT_NEAR(v, 1.0, 1e-12);
    EXPECT_LE(r.F0, 1.0);
    EXPECT_EQ(r.shots, 200u);
    EXPECT_TRUE(r.has_rand);
  }
}

TEST_F(CliTest, SweepCsvRoundTrip) {
  SweepConfig c;
  c.layout = planted_layout();
  c.circuit.n = 3;
  c.shots = 100;
  c.confusion = true;
  c.correct = true;
  c.out_dir = dir("sweep");
  run_sweep(c);
  std::string text = read_file(dir("sweep") + "/sweep.csv");
  EXPECT_EQ(sweep_csv(parse_sweep_csv(text)), text);
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "path,F,F_LE,F0,F_extrap,F_LE_rand_mean,F_LE_rand_std,shots,F_LE_sampled,"
            "F_LE_sampled_stderr,rejected");
}

TEST_F(CliTest, SweepFlagsRejectedRows) {
  NoiseGraph g = NoiseGraph::grid(2, 2);
  g.set_readout(3, {0.0, 0.3});
  save_layout(g, dir("layout.json"));
  SweepConfig c;
  c.layout = dir("layout.json");
  c.circuit.n = 2;
  c.out_dir = dir("sweep");
  run_sweep(c);
  auto rows = parse_sweep_csv(read_file(dir("sweep") + "/sweep.csv"));
  EXPECT_EQ(rows.size(), 8u);
  for (const auto& r : rows) {
    bool touches = r.assignment.path[0] == 3 || r.assignment.path[1] == 3;
    EXPECT_EQ(r.rejected, touches);
  }
}

TEST_F(CliTest, SweepBudgetGuard) {
  SweepConfig c;
  c.layout = planted_layout(5, 5, 5);
  c.circuit.n = 5;
  c.max_assignments = 100;
  c.out_dir = dir("sweep");
  EXPECT_EQ(code_of([&] { run_sweep(c); }), ErrorCode::kBudgetExceeded);
}

TEST_F(CliTest, GhzSweepRanksEchoAboveBenchmarkProduct) {
  GenNoisemapConfig g;
  g.planted = true;
  g.seed = 3;
  g.out_dir = dir("map");
  run_gen_noisemap(g);
  SweepConfig s;
  s.layout = dir("map") + "/layout.json";
  s.circuit.n = 5;
  s.out_dir = dir("sweep");
  run_sweep(s);
  ReportConfig r;
  r.sweep = dir("sweep") + "/sweep.csv";
  r.layout = s.layout;
  r.bootstrap = 100;
  r.out_dir = dir("report");
  run_report(r);
  json rep = json::parse(read_file(dir("report") + "/report.json"));
  EXPECT_GT(rep["tau_b"]["F_LE"]["tau_b"].get<double>(), rep["tau_b"]["F0"]["tau_b"].get<double>());
  ASSERT_EQ(rep["locality"].size(), 4u);
  for (size_t i = 1; i < 4; ++i) {
    EXPECT_GE(rep["locality"][i]["F_LE"].get<double>(),
              rep["locality"][i - 1]["F_LE"].get<double>());
  }
  EXPECT_EQ(rep["conditional_k"].size(), 19u);
  std::string cond = read_file(dir("report") + "/conditional.csv");
  EXPECT_EQ(cond.substr(0, cond.find('\n')), "k,F_LE,F0,F_extrap");
}

TEST_F(CliTest, ReportPerfectConcordanceAndErrors) {
  std::ostringstream os;
  os << "path,F,F_LE,F0,F_extrap,F_LE_rand_mean,F_LE_rand_std,shots,F_LE_sampled,"
        "F_LE_sampled_stderr,rejected\n";
  for (int i = 0; i < 6; ++i) {
    double v = 0.5 + 0.05 * i;
    os << i << "-" << i + 10 << "," << v << "," << v << "," << 1 - v << "," << v << ",,,0,,,0\n";
  }
  write_file(dir("s.csv"), os.str());
  ReportConfig r;
  r.sweep = dir("s.csv");
  r.out_dir = dir("rep");
  run_report(r);
  json rep = json::parse(read_file(dir("rep") + "/report.json"));
  EXPECT_EQ(rep["tau_b"]["F_LE"]["tau_b"].get<double>(), 1.0);
  EXPECT_EQ(rep["tau_b"]["F0"]["tau_b"].get<double>(), -1.0);
  EXPECT_EQ(rep["conditional"]["F_LE"][0].get<double>(), 1.0);

  std::string one = os.str().substr(0, os.str().find('\n', os.str().find('\n') + 1) + 1);
  write_file(dir("one.csv"), one);
  r.sweep = dir("one.csv");
  EXPECT_EQ(code_of([&] { run_report(r); }), ErrorCode::kInsufficientData);
  write_file(dir("bad.csv"), "path,F\n0-1,0.5\n");
  r.sweep = dir("bad.csv");
  EXPECT_EQ(code_of([&] { run_report(r); }), ErrorCode::kParse);
}

TEST_F(CliTest, AnnealSingleStepTrace) {
  AnnealConfig a;
  a.layout = planted_layout();
  a.circuit.n = 3;
  a.trials = 1;
  a.steps = 1;
  a.baseline_draws = 3;
  a.out_dir = dir("anneal");
  auto files = run_anneal(a);
  std::string trace = read_file(dir("anneal") + "/traces/trial_00000.csv");
  EXPECT_EQ(std::count(trace.begin(), trace.end(), '\n'), 3);
  EXPECT_EQ(files.front(), "traces/trial_00000.csv");
  json out = json::parse(read_file(dir("anneal") + "/anneal.json"));
  EXPECT_EQ(out["trials"], 1);
  EXPECT_FALSE(out.contains("improvement_ci95"));
}

TEST_F(CliTest, AnnealOfflineMatchesSweepTable) {
  SweepConfig s;
  s.layout = planted_layout(4, 4, 4);
  s.circuit.n = 4;
  s.out_dir = dir("sweep");
  run_sweep(s);
  auto rows = parse_sweep_csv(read_file(dir("sweep") + "/sweep.csv"));
  std::map<std::string, double> table;
  for (const auto& r : rows) table[to_string(r.assignment)] = r.F_LE;

  AnnealConfig a;
  a.layout = s.layout;
  a.table = dir("sweep") + "/sweep.csv";
  a.trials = 20;
  a.steps = 60;
  a.bootstrap = 200;
  a.write_traces = false;
  a.out_dir = dir("anneal");
  run_anneal(a);
  std::istringstream summary(read_file(dir("anneal") + "/summary.csv"));
  std::string line;
  std::getline(summary, line);
  EXPECT_EQ(line, "trial,n_s,best_score,best_path,baseline_mean_score");
  int count = 0;
  while (std::getline(summary, line)) {
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string x; std::getline(ls, x, ',');) f.push_back(x);
    ASSERT_EQ(f.size(), 5u);
    EXPECT_DOUBLE_EQ(std::stod(f[2]), table.at(f[3]));
    ++count;
  }
  EXPECT_EQ(count, 20);
  json out = json::parse(read_file(dir("anneal") + "/anneal.json"));
  EXPECT_GE(out["optimum_hit_rate"].get<double>(), 0.0);
  EXPECT_LE(out["improvement_ci95"][0].get<double>(), out["improvement_ci95"][1].get<double>());
}

TEST_F(CliTest, ManifestReplayIsByteIdentical) {
  SweepConfig s;
  s.layout = planted_layout();
  s.circuit.n = 3;
  s.shots = 300;
  s.ensemble = 2;
  s.seed = 9;
  s.out_dir = dir("sweep");
  json cfg = s;
  auto files = run_command("sweep", cfg);
  write_manifest("sweep", cfg, s.out_dir, files);
  json m = json::parse(read_file(dir("sweep") + "/manifest.json"));
  EXPECT_EQ(m["command"], "sweep");
  EXPECT_EQ(m["outputs"][0]["file"], "sweep.csv");
  EXPECT_EQ(m["outputs"][0]["sha256"], sha256_hex(read_file(dir("sweep") + "/sweep.csv")));

  ReplayResult r = replay(dir("sweep") + "/manifest.json", dir("replay"));
  EXPECT_TRUE(r.identical);
  EXPECT_EQ(read_file(dir("sweep") + "/sweep.csv"), read_file(dir("replay") + "/sweep.csv"));

  // Changing an input is reported.
  NoiseGraph g = load_layout(s.layout);
  g.set_eps(0, 0.5);
  save_layout(g, s.layout);
  ReplayResult changed = replay(dir("sweep") + "/manifest.json", dir("replay2"));
  EXPECT_FALSE(changed.identical);
  EXPECT_NE(std::find(changed.mismatched.begin(), changed.mismatched.end(), "input:" + s.layout),
            changed.mismatched.end());
}

TEST_F(CliTest, ReadoutDemoShowsAsymmetryBias) {
  ReadoutDemoConfig c;
  c.out_dir = dir("demo");
  run_readout_demo(c);
  std::istringstream is(read_file(dir("demo") + "/readout_demo.csv"));
  std::string line;
  std::getline(is, line);
  std::vector<std::vector<double>> vals;
  while (std::getline(is, line)) {
    std::vector<double> row;
    std::stringstream ls(line.substr(line.find(',') + 1));
    for (std::string x; std::getline(ls, x, ',');) row.push_back(std::stod(x));
    vals.push_back(row);
  }
  ASSERT_EQ(vals.size(), 3u);
  // Columns: p10,p01,F_LE,F_LE_observed,F_LE_corrected,ghz_population,ghz_population_observed.
  EXPECT_DOUBLE_EQ(vals[0][3], vals[0][2]);
  EXPECT_GT(vals[2][3], vals[1][3]);  // asymmetric flips toward 0 inflate the echo
  EXPECT_LT(vals[2][6], vals[2][5]);
  for (const auto& v : vals) EXPECT_NEAR(v[4], v[2], 1e-12);
}

std::string run_binary(const std::string& args, int* status) {
  std::string cmd = std::string(QASSIGN_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[512];
  while (size_t n = fread(buf, 1, sizeof(buf), p)) out.append(buf, n);
  *status = pclose(p);
  return out;
}

TEST_F(CliTest, BinaryReportsErrorsAsJson) {
  int status = 0;
  std::string out = run_binary("sweep --layout " + dir("missing.json") + " -o " + dir("o"), &status);
  EXPECT_NE(status, 0);
  json err = json::parse(out);
  EXPECT_EQ(err["error"]["code"], "Io");
  out = run_binary("sweep --bogus", &status);
  EXPECT_NE(status, 0);
  EXPECT_EQ(json::parse(out)["error"]["code"], "Usage");
}

TEST_F(CliTest, BinaryConfigFileWithFlagOverride) {
  json cfg = {{"rows", 3}, {"cols", 4}, {"seed", 2}, {"out_dir", dir("ignored")}};
  write_file(dir("cfg.json"), cfg.dump());
  int status = 0;
  std::string out = run_binary("--config " + dir("cfg.json") + " gen-noisemap -o " + dir("map"),
                               &status);
  ASSERT_EQ(status, 0) << out;
  NoiseGraph g = load_layout(dir("map") + "/layout.json");
  EXPECT_EQ(g.num_vertices(), 12u);
  EXPECT_FALSE(fs::exists(dir("ignored")));
  json m = json::parse(read_file(dir("map") + "/manifest.json"));
  EXPECT_EQ(m["config"]["cols"], 4);
  out = run_binary("replay --manifest " + dir("map") + "/manifest.json -o " + dir("re"), &status);
  EXPECT_EQ(status, 0) << out;
  EXPECT_TRUE(json::parse(out)["identical"].get<bool>());
}

}  // namespace
}  // namespace qassign::cli
