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

#include "qassign/annealer.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "qassign/error.h"

namespace qassign {
namespace {

std::shared_ptr<CostOracle::Table> random_table(const std::vector<Assignment>& paths,
                                                uint64_t seed) {
  auto t = std::make_shared<CostOracle::Table>();
  Rng rng(seed);
  for (const Assignment& a : paths) (*t)[a] = rng.uniform();
  return t;
}

TEST(ScheduleTest, Temperatures) {
  Schedule e = Schedule::exponential(0.1, 0.987);
  EXPECT_DOUBLE_EQ(e.temperature(0), 0.1);
  EXPECT_NEAR(e.temperature(10), 0.1 * std::pow(0.987, 10), 1e-15);
  Schedule l = Schedule::logarithmic(2.0);
  EXPECT_DOUBLE_EQ(l.temperature(0), 2.0);
  EXPECT_NEAR(l.temperature(5), 2.0 / (1.0 + std::log(6.0)), 1e-15);
  for (const Schedule& s : {e, l}) {
    for (int i = 0; i < 500; ++i) {
      EXPECT_GT(s.temperature(i + 1), 0.0);
      EXPECT_LE(s.temperature(i + 1), s.temperature(i));
    }
  }
  EXPECT_THROW(Schedule::exponential(0.0, 0.9), Error);
  EXPECT_THROW(Schedule::exponential(1.0, 1.0), Error);
  EXPECT_THROW(Schedule::logarithmic(-1.0), Error);
}

TEST(AcceptanceTest, MetropolisRule) {
  EXPECT_EQ(acceptance_probability(-0.3, 0.1), 1.0);
  EXPECT_EQ(acceptance_probability(0.0, 0.1), 1.0);
  EXPECT_NEAR(acceptance_probability(0.1, 0.1), std::exp(-1.0), 1e-15);
  for (double t : {1e-3, 0.1, 2.0}) {
    double last = 1.0;
    for (int i = 0; i <= 100; ++i) {
      double p = acceptance_probability(0.01 * i, t);
      EXPECT_LE(p, last);
      EXPECT_GE(p, 0.0);
      last = p;
    }
  }
}

TEST(CostOracleTest, MemoizesAndCountsUnique) {
  int calls = 0;
  CostOracle o([&](const Assignment& a) {
    ++calls;
    return static_cast<double>(a.path[0]);
  });
  EXPECT_EQ(o.cost({{3, 4}}), 3.0);
  EXPECT_EQ(o.cost({{3, 4}}), 3.0);
  EXPECT_EQ(o.cost({{4, 3}}), 4.0);
  EXPECT_EQ(calls, 2);
  EXPECT_EQ(o.n_s(), 2u);
}

TEST(CostOracleTest, TableRejectsUnknown) {
  auto t = std::make_shared<CostOracle::Table>();
  (*t)[{{0, 1}}] = 0.5;
  CostOracle o = CostOracle::from_table(t);
  EXPECT_EQ(o.cost({{0, 1}}), 0.5);
  try {
    o.cost({{1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidAssignment);
  }
}

TEST(AnnealTest, TraceInvariants) {
  NoiseGraph g = NoiseGraph::grid(4, 4);
  auto paths = enumerate_simple_paths(g, 3);
  CostOracle o = CostOracle::from_table(random_table(paths, 1));
  Rng rng(2);
  AnnealTrace tr = anneal(g, {2}, o, Schedule::exponential(0.1, 0.98), 200, paths[17], rng);
  ASSERT_EQ(tr.steps.size(), 201u);
  EXPECT_EQ(tr.steps[0].assignment, paths[17]);
  EXPECT_EQ(tr.steps[0].n_s, 1u);
  double best = tr.steps[0].cost;
  for (size_t i = 1; i < tr.steps.size(); ++i) {
    const TraceStep& s = tr.steps[i];
    EXPECT_EQ(s.step, static_cast<int>(i));
    EXPECT_DOUBLE_EQ(s.temperature, 0.1 * std::pow(0.98, i - 1));
    EXPECT_GE(s.n_s, tr.steps[i - 1].n_s);
    EXPECT_LE(s.n_s, tr.steps[i - 1].n_s + 1);
    if (!s.accepted) EXPECT_EQ(s.assignment, tr.steps[i - 1].assignment);
    best = std::min(best, s.cost);
  }
  EXPECT_EQ(tr.best_cost, best);
  EXPECT_EQ(tr.n_s, o.n_s());
  EXPECT_LE(tr.n_s, 201u);
}

TEST(AnnealTest, ZeroTemperatureIsGreedy) {
  NoiseGraph g = NoiseGraph::grid(4, 4);
  auto paths = enumerate_simple_paths(g, 4);
  CostOracle o = CostOracle::from_table(random_table(paths, 3));
  Rng rng(4);
  AnnealTrace tr = anneal(g, {1}, o, Schedule::exponential(1e-12, 0.99), 1000, paths[0], rng);
  for (size_t i = 1; i < tr.steps.size(); ++i) {
    EXPECT_LE(tr.steps[i].cost, tr.steps[i - 1].cost);
  }
}

TEST(AnnealTest, FlatLandscapeWalksFreely) {
  NoiseGraph g = NoiseGraph::grid(3, 3);
  CostOracle o([](const Assignment&) { return 0.25; });
  Rng rng(5);
  AnnealTrace tr = anneal(g, {1}, o, Schedule::exponential(0.1, 0.99), 100, {{0, 1, 2}}, rng);
  EXPECT_EQ(tr.best_cost, 0.25);
  for (size_t i = 1; i < tr.steps.size(); ++i) EXPECT_TRUE(tr.steps[i].accepted);
  std::set<Assignment> seen;
  for (const auto& s : tr.steps) seen.insert(s.assignment);
  EXPECT_GT(seen.size(), 10u);
}

TEST(AnnealTest, DeterministicForSeed) {
  NoiseGraph g = NoiseGraph::grid(4, 4);
  auto table = random_table(enumerate_simple_paths(g, 3), 6);
  auto go = [&](uint64_t seed) {
    CostOracle o = CostOracle::from_table(table);
    Rng rng(seed);
    std::ostringstream os;
    write_trace_csv(os, anneal(g, {2}, o, Schedule::logarithmic(0.05), 80, {{5, 6, 7}}, rng));
    return os.str();
  };
  EXPECT_EQ(go(7), go(7));
  EXPECT_NE(go(7), go(8));
}

TEST(AnnealTest, EmptyNeighborhoodPropagates) {
  NoiseGraph g = NoiseGraph::grid(1, 1);
  CostOracle o([](const Assignment&) { return 0.0; });
  Rng rng(1);
  try {
    anneal(g, {0}, o, Schedule::exponential(0.1, 0.9), 5, {{0}}, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyNeighborhood);
  }
}

TEST(AnnealTest, FindsOptimumOnSmallMap) {
  NoiseGraph g = NoiseGraph::grid(3, 3);
  auto paths = enumerate_simple_paths(g, 3);
  auto table = random_table(paths, 9);
  double opt = 1.0;
  for (const auto& [a, c] : *table) opt = std::min(opt, c);
  int hits = 0;
  for (uint64_t t = 0; t < 50; ++t) {
    CostOracle o = CostOracle::from_table(table);
    Rng rng(10, t, "sa");
    Assignment init = uniform_initial(paths, rng);
    AnnealTrace tr = anneal(g, {2}, o, Schedule::exponential(0.1, 0.987), 150, init, rng);
    hits += tr.best_cost == opt;
  }
  EXPECT_GE(hits, 40);
}

TEST(TraceCsvTest, SingleStep) {
  NoiseGraph g = NoiseGraph::grid(2, 2);
  CostOracle o([](const Assignment& a) { return 0.1 * a.path[0]; });
  Rng rng(1);
  AnnealTrace tr = anneal(g, {1}, o, Schedule::exponential(0.1, 0.9), 1, {{0, 1}}, rng);
  std::ostringstream os;
  write_trace_csv(os, tr);
  std::istringstream is(os.str());
  std::vector<std::string> lines;
  for (std::string l; std::getline(is, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "step,temperature,cost,accepted,n_s,path");
  EXPECT_EQ(lines[1].substr(0, 2), "0,");
  EXPECT_NE(lines[1].find("0-1"), std::string::npos);
}

TEST(UniformInitialTest, CoversPopulation) {
  std::vector<Assignment> pop = {{{0}}, {{1}}, {{2}}};
  Rng rng(3);
  std::vector<int> hist(3);
  for (int i = 0; i < 3000; ++i) ++hist[uniform_initial(pop, rng).path[0]];
  for (int h : hist) EXPECT_NEAR(h, 1000, 5 * std::sqrt(3000 * (1.0 / 3) * (2.0 / 3)));
  EXPECT_THROW(uniform_initial({}, rng), Error);
}

// Exact mean of the minimum of n draws without replacement.
double order_statistic_mean(std::vector<double> pop, size_t n) {
  std::sort(pop.begin(), pop.end());
  const size_t m = pop.size();
  auto choose = [](size_t a, size_t b) {
    if (b > a) return 0.0;
    double r = 1;
    for (size_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  double mean = 0;
  for (size_t i = 0; i < m; ++i) mean += pop[i] * choose(m - i - 1, n - 1) / choose(m, n);
  return mean;
}

TEST(RandomBaselineTest, MatchesOrderStatistics) {
  Rng pop_rng(11);
  std::vector<double> pop(17);
  for (double& x : pop) x = pop_rng.uniform();
  for (size_t n : {1u, 3u, 8u}) {
    Rng rng(12, n, "baseline");
    std::vector<double> best = random_baseline(pop, n, 10000, rng);
    double m = 0, ss = 0;
    for (double x : best) m += x / best.size();
    for (double x : best) ss += (x - m) * (x - m);
    double sem = std::sqrt(ss / (best.size() - 1) / best.size());
    EXPECT_LE(std::abs(m - order_statistic_mean(pop, n)), 5 * sem) << n;
  }
}

TEST(RandomBaselineTest, EdgeCases) {
  std::vector<double> pop = {0.4, 0.2, 0.9};
  Rng rng(13);
  for (double x : random_baseline(pop, 3, 20, rng)) EXPECT_EQ(x, 0.2);
  std::set<double> singles;
  for (double x : random_baseline(pop, 1, 200, rng)) singles.insert(x);
  EXPECT_EQ(singles, (std::set<double>{0.2, 0.4, 0.9}));
  try {
    random_baseline(pop, 4, 1, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientStates);
  }
}

TEST(RandomBaselineTest, OracleOverload) {
  NoiseGraph g = NoiseGraph::grid(2, 3);
  auto paths = enumerate_simple_paths(g, 3);
  auto table = random_table(paths, 14);
  CostOracle o = CostOracle::from_table(table);
  Rng rng(15);
  auto best = random_baseline(o, paths, paths.size(), 3, rng);
  double opt = 1;
  for (const auto& [a, c] : *table) opt = std::min(opt, c);
  for (double x : best) EXPECT_EQ(x, opt);
}

TEST(LocalityTest, ToyPopulation) {
  NoiseGraph g = NoiseGraph::grid(1, 3);
  std::vector<Assignment> paths = enumerate_simple_paths(g, 2);
  ASSERT_EQ(paths, (std::vector<Assignment>{{{0, 1}}, {{1, 0}}, {{1, 2}}, {{2, 1}}}));
  std::vector<double> v = {0.1, 0.2, 0.5, 0.9};
  std::vector<double> loc = locality(g, paths, v, {0, 1});
  EXPECT_NEAR(loc[0], 0.25, 1e-15);
  EXPECT_NEAR(loc[1], 0.45, 1e-15);
}

TEST(LocalityTest, ConstantMetricIsZero) {
  NoiseGraph g = NoiseGraph::grid(3, 3);
  auto paths = enumerate_simple_paths(g, 3);
  std::vector<double> v(paths.size(), 0.7);
  for (double x : locality(g, paths, v, {0, 1, 2, 3})) EXPECT_EQ(x, 0.0);
  EXPECT_THROW(locality(g, paths, std::vector<double>(3), {1}), Error);
}

}  // namespace
}  // namespace qassign
