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

#include "qassign/device_graph.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "qassign/error.h"
#include "qassign/layout_io.h"

namespace qassign {
namespace {

// Brute force: every ordered tuple of distinct vertices, kept if consecutive
// pairs are edges.
std::set<Assignment> brute_force_paths(const NoiseGraph& g, int n) {
  std::set<Assignment> out;
  std::vector<QubitId> tuple;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(tuple.size()) == n) {
      Assignment a{tuple};
      if (g.is_valid(a)) out.insert(a);
      return;
    }
    for (QubitId v : g.vertices()) {
      if (std::find(tuple.begin(), tuple.end(), v) != tuple.end()) continue;
      tuple.push_back(v);
      rec();
      tuple.pop_back();
    }
  };
  rec();
  return out;
}

// Neighbourhood by filtering the full enumeration with the set rule.
std::set<Assignment> filtered_neighborhood(const NoiseGraph& g, const Assignment& a, int k) {
  std::set<Assignment> out;
  std::set<QubitId> base(a.path.begin(), a.path.end());
  for (const Assignment& b : enumerate_simple_paths(g, static_cast<int>(a.path.size()))) {
    int diff = 0;
    for (QubitId v : b.path) diff += base.count(v) == 0;
    if (diff > 0 && diff <= k) out.insert(b);
  }
  Assignment r = reversed(a);
  if (r != a) out.insert(r);
  return out;
}

NoiseGraph line(int n) {
  NoiseGraph g;
  for (int i = 0; i < n; ++i) g.add_qubit(i);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

TEST(EnumerateSimplePathsTest, TwoByTwoGridLengthThree) {
  EXPECT_EQ(enumerate_simple_paths(NoiseGraph::grid(2, 2), 3).size(), 8u);
}

TEST(EnumerateSimplePathsTest, SingleVertex) {
  NoiseGraph g;
  g.add_qubit(7);
  auto paths = enumerate_simple_paths(g, 1);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].path, std::vector<QubitId>{7});
}

TEST(EnumerateSimplePathsTest, TooLongIsEmpty) {
  EXPECT_TRUE(enumerate_simple_paths(NoiseGraph::grid(2, 2), 5).empty());
}

TEST(EnumerateSimplePathsTest, RejectsZeroLength) {
  EXPECT_THROW(enumerate_simple_paths(NoiseGraph::grid(2, 2), 0), Error);
}

TEST(EnumerateSimplePathsTest, MatchesBruteForceOnGrids) {
  for (auto [rows, cols, n] : std::vector<std::tuple<int, int, int>>{
           {2, 2, 2}, {2, 3, 3}, {3, 3, 4}, {5, 5, 3}, {5, 5, 4}}) {
    NoiseGraph g = NoiseGraph::grid(rows, cols);
    auto fast = enumerate_simple_paths(g, n);
    std::set<Assignment> fast_set(fast.begin(), fast.end());
    EXPECT_EQ(fast_set.size(), fast.size());
    EXPECT_EQ(fast_set, brute_force_paths(g, n)) << rows << "x" << cols << " n=" << n;
  }
}

TEST(EnumerateSimplePathsTest, FiveByFiveCounts) {
  // Frozen from the brute-force oracle above (n <= 4) and a networkx
  // all_simple_paths count (n = 5, 6).
  NoiseGraph g = NoiseGraph::grid(5, 5);
  const size_t expected[] = {25, 80, 188, 456, 972, 2112};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_simple_paths(g, n).size(), expected[n - 1]);
}

TEST(EnumerateSimplePathsTest, LexicographicAndBothOrientations) {
  auto paths = enumerate_simple_paths(NoiseGraph::grid(3, 3), 4);
  EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end()));
  std::set<Assignment> all(paths.begin(), paths.end());
  for (const auto& a : paths) EXPECT_TRUE(all.count(reversed(a)));
}

TEST(NeighborhoodTest, KZeroIsReversalOnly) {
  NoiseGraph g = NoiseGraph::grid(3, 3);
  for (const auto& a : enumerate_simple_paths(g, 3)) {
    auto nb = neighborhood(g, a, {0});
    ASSERT_EQ(nb.size(), 1u);
    EXPECT_EQ(nb[0], reversed(a));
  }
}

TEST(NeighborhoodTest, TwoByTwoLengthTwoKOne) {
  NoiseGraph g = NoiseGraph::grid(2, 2);
  Assignment a{{0, 1}};
  auto nb = neighborhood(g, a, {1});
  std::set<Assignment> got(nb.begin(), nb.end());
  EXPECT_EQ(got, filtered_neighborhood(g, a, 1));
  // Edges sharing a vertex with {0,1}: 0-2 and 1-3 in both orientations,
  // plus the reversal.
  EXPECT_EQ(got, (std::set<Assignment>{{{0, 2}}, {{2, 0}}, {{1, 3}}, {{3, 1}}, {{1, 0}}}));
}

TEST(NeighborhoodTest, MatchesFilteredEnumeration) {
  NoiseGraph g = NoiseGraph::grid(3, 4);
  for (int n : {2, 3, 4}) {
    auto all = enumerate_simple_paths(g, n);
    for (size_t i = 0; i < all.size(); i += 7) {
      for (int k = 0; k <= n; ++k) {
        auto nb = neighborhood(g, all[i], {k});
        EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
        std::set<Assignment> got(nb.begin(), nb.end());
        ASSERT_EQ(got, filtered_neighborhood(g, all[i], k))
            << to_string(all[i]) << " k=" << k;
      }
    }
  }
}

TEST(NeighborhoodTest, NeverContainsSelfAlwaysContainsReverse) {
  NoiseGraph g = NoiseGraph::grid(3, 3);
  for (const auto& a : enumerate_simple_paths(g, 3)) {
    for (int k = 0; k <= 3; ++k) {
      auto nb = neighborhood(g, a, {k});
      EXPECT_FALSE(std::binary_search(nb.begin(), nb.end(), a));
      EXPECT_TRUE(std::binary_search(nb.begin(), nb.end(), reversed(a)));
    }
  }
}

TEST(NeighborhoodTest, ZeroSetDifferenceOnlyForReversal) {
  NoiseGraph g = NoiseGraph::grid(3, 3);
  for (const auto& a : enumerate_simple_paths(g, 4)) {
    std::set<QubitId> base(a.path.begin(), a.path.end());
    for (const auto& b : neighborhood(g, a, {2})) {
      std::set<QubitId> other(b.path.begin(), b.path.end());
      if (other == base) EXPECT_EQ(b, reversed(a));
    }
  }
}

TEST(NeighborhoodTest, Symmetric) {
  NoiseGraph g = NoiseGraph::grid(3, 3);
  auto all = enumerate_simple_paths(g, 3);
  for (int k = 0; k <= 3; ++k) {
    std::map<Assignment, std::vector<Assignment>> nbs;
    for (const auto& a : all) nbs[a] = neighborhood(g, a, {k});
    for (const auto& [a, nb] : nbs) {
      for (const auto& b : nb) {
        const auto& back = nbs.at(b);
        EXPECT_TRUE(std::binary_search(back.begin(), back.end(), a));
      }
    }
  }
}

TEST(NeighborhoodTest, KOneConnectsAllFivePathsOnFiveByFive) {
  NoiseGraph g = NoiseGraph::grid(5, 5);
  auto all = enumerate_simple_paths(g, 5);
  std::set<Assignment> seen = {all.front()};
  std::deque<Assignment> frontier = {all.front()};
  while (!frontier.empty()) {
    Assignment a = frontier.front();
    frontier.pop_front();
    for (const auto& b : neighborhood(g, a, {1})) {
      if (seen.insert(b).second) frontier.push_back(b);
    }
  }
  EXPECT_EQ(seen.size(), all.size());
}

TEST(SampleNeighborTest, KZeroAlwaysReverses) {
  NoiseGraph g = NoiseGraph::grid(3, 3);
  Rng rng(1);
  Assignment a{{0, 1, 2}};
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sample_neighbor(g, a, {0}, rng), reversed(a));
}

TEST(SampleNeighborTest, UniformOverThreeNeighbours) {
  NoiseGraph g = line(3);
  Assignment a{{0, 1}};
  auto nb = neighborhood(g, a, {1});
  ASSERT_EQ(nb.size(), 3u);
  Rng rng(2024);
  std::map<Assignment, int> hist;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) ++hist[sample_neighbor(g, a, {1}, rng)];
  const double p = 1.0 / 3.0, sigma = std::sqrt(draws * p * (1 - p));
  for (const auto& b : nb) EXPECT_NEAR(hist[b], draws * p, 5 * sigma);
}

TEST(SampleNeighborTest, LoneVertexHasNoNeighbour) {
  NoiseGraph g;
  g.add_qubit(0);
  Rng rng(1);
  try {
    sample_neighbor(g, Assignment{{0}}, {0}, rng);
    FAIL() << "expected EmptyNeighborhood";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyNeighborhood);
  }
}

TEST(NoiseGraphTest, RejectsBadWeightsAndEdges) {
  NoiseGraph g;
  EXPECT_THROW(g.add_qubit(0, 1.5), Error);
  g.add_qubit(0);
  g.add_qubit(1);
  EXPECT_THROW(g.add_edge(0, 2), Error);
  EXPECT_THROW(g.add_edge(0, 0), Error);
  EXPECT_THROW(g.add_edge(0, 1, -0.1), Error);
  g.add_edge(1, 0, 0.2);
  EXPECT_DOUBLE_EQ(g.eta(0, 1), 0.2);
  EXPECT_THROW(g.add_edge(0, 1), Error);
}

TEST(NoiseGraphTest, AssignmentValidity) {
  NoiseGraph g = NoiseGraph::grid(2, 2);
  EXPECT_TRUE(g.is_valid(Assignment{{0, 1, 3}}));
  EXPECT_FALSE(g.is_valid(Assignment{{0, 3}}));
  EXPECT_FALSE(g.is_valid(Assignment{{0, 1, 0}}));
  EXPECT_FALSE(g.is_valid(Assignment{{9}}));
  EXPECT_FALSE(g.is_valid(Assignment{}));
}

TEST(LayoutIoTest, RoundTrip) {
  NoiseGraph g = NoiseGraph::grid(2, 3);
  g.set_eps(4, 0.01);
  g.set_eta(0, 1, 0.03);
  g.set_readout(2, {0.02, 0.05});
  NoiseGraph back = parse_layout(layout_to_json(g));
  EXPECT_EQ(back.vertices(), g.vertices());
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_DOUBLE_EQ(back.eps(4), 0.01);
  EXPECT_DOUBLE_EQ(back.eta(1, 0), 0.03);
  EXPECT_EQ(back.readout(2), (ReadoutRates{0.02, 0.05}));
  EXPECT_EQ(back.coord(5), (GridCoord{1, 2}));
  EXPECT_EQ(layout_to_json(back), layout_to_json(g));
}

TEST(LayoutIoTest, ParseErrors) {
  auto code_of = [](const std::string& text) {
    try {
      parse_layout(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code_of("not json"), ErrorCode::kParse);
  EXPECT_EQ(code_of("{}"), ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"qubits":[{"row":1}]})"), ErrorCode::kParse);
  EXPECT_THROW(load_layout("/nonexistent/layout.json"), Error);
}

TEST(LayoutFilesTest, RainbowPathCounts) {
  NoiseGraph g = load_layout(std::string(QASSIGN_DATA_DIR) + "/layouts/rainbow.json");
  EXPECT_EQ(g.num_vertices(), 23u);
  EXPECT_EQ(enumerate_simple_paths(g, 3).size(), 148u);
  EXPECT_EQ(enumerate_simple_paths(g, 8).size(), 2984u);
  EXPECT_EQ(enumerate_simple_paths(g, 9).size(), 4972u);
}

TEST(LayoutFilesTest, WeberPathCount) {
  NoiseGraph g = load_layout(std::string(QASSIGN_DATA_DIR) + "/layouts/weber.json");
  EXPECT_EQ(g.num_vertices(), 53u);
  EXPECT_EQ(enumerate_simple_paths(g, 4).size(), 1116u);
}

}  // namespace
}  // namespace qassign
