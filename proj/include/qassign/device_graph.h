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

#ifndef QASSIGN_DEVICE_GRAPH_H_
#define QASSIGN_DEVICE_GRAPH_H_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qassign/rng.h"

namespace qassign {

using QubitId = int;

struct GridCoord {
  int row = 0;
  int col = 0;
  auto operator<=>(const GridCoord&) const = default;
};

// Conditional readout flip probabilities: p10 = p(1|0), p01 = p(0|1).
struct ReadoutRates {
  double p10 = 0.0;
  double p01 = 0.0;
  bool operator==(const ReadoutRates&) const = default;
};

// Unordered qubit pair stored with a < b.
struct Edge {
  QubitId a = 0;
  QubitId b = 0;

  static Edge of(QubitId x, QubitId y) {
    return x < y ? Edge{x, y} : Edge{y, x};
  }
  auto operator<=>(const Edge&) const = default;
};

struct Assignment {
  std::vector<QubitId> path;
  auto operator<=>(const Assignment&) const = default;
};

Assignment reversed(const Assignment& a);
std::string to_string(const Assignment& a);

struct NeighborhoodSpec {
  int k = 1;
};

class NoiseGraph {
 public:
  struct Qubit {
    std::optional<GridCoord> coord;
    double eps = 0.0;
    ReadoutRates readout;
    std::vector<QubitId> neighbors;  // sorted
  };

  // rows x cols nearest-neighbour grid with ids r * cols + c and zero weights.
  static NoiseGraph grid(int rows, int cols);

  void add_qubit(QubitId id, double eps = 0.0, ReadoutRates readout = {},
                 std::optional<GridCoord> coord = std::nullopt);
  void add_edge(QubitId a, QubitId b, double eta = 0.0);

  bool has_vertex(QubitId id) const { return qubits_.count(id) > 0; }
  bool has_edge(QubitId a, QubitId b) const {
    return eta_.count(Edge::of(a, b)) > 0;
  }

  double eps(QubitId id) const;
  double eta(QubitId a, QubitId b) const;
  const ReadoutRates& readout(QubitId id) const;
  std::optional<GridCoord> coord(QubitId id) const;
  const std::vector<QubitId>& neighbors(QubitId id) const;

  void set_eps(QubitId id, double eps);
  void set_eta(QubitId a, QubitId b, double eta);
  void set_readout(QubitId id, ReadoutRates rates);

  const std::vector<QubitId>& vertices() const { return vertices_; }
  std::vector<Edge> edges() const;
  const std::map<Edge, double>& eta_map() const { return eta_; }
  size_t num_vertices() const { return vertices_.size(); }
  size_t num_edges() const { return eta_.size(); }

  bool is_valid(const Assignment& a) const;
  // Throws kInvalidAssignment with a reason.
  void check(const Assignment& a) const;

 private:
  const Qubit& qubit(QubitId id) const;
  Qubit& qubit(QubitId id);

  std::map<QubitId, Qubit> qubits_;
  std::vector<QubitId> vertices_;  // sorted
  std::map<Edge, double> eta_;
};

// All ordered simple paths with n vertices, in lexicographic order of the
// vertex-id sequence. Both orientations of every path are included.
std::vector<Assignment> enumerate_simple_paths(const NoiseGraph& g, int n);

// Paths a' with 0 < |set(a') \ set(a)| <= k, plus reverse(a), never a itself.
// Sorted lexicographically.
std::vector<Assignment> neighborhood(const NoiseGraph& g, const Assignment& a,
                                     const NeighborhoodSpec& spec);

// Uniform draw from neighborhood(). Throws kEmptyNeighborhood.
Assignment sample_neighbor(const NoiseGraph& g, const Assignment& a,
                           const NeighborhoodSpec& spec, Rng& rng);

}  // namespace qassign

#endif  // QASSIGN_DEVICE_GRAPH_H_
