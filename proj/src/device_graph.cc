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

#include <algorithm>
#include <set>
#include <sstream>

#include "qassign/error.h"

namespace qassign {
namespace {

void check_probability(double p, const std::string& what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                what + " must lie in [0,1], got " + std::to_string(p));
  }
}

struct PathSearch {
  const NoiseGraph& g;
  int n;
  std::vector<QubitId> path;
  std::vector<Assignment>* out;

  // Restriction used by neighborhood(): at most `budget` vertices outside
  // `anchor`, and at least one.
  const std::set<QubitId>* anchor = nullptr;
  int budget = 0;
  int outside = 0;

  bool in_path(QubitId v) const {
    return std::find(path.begin(), path.end(), v) != path.end();
  }

  void extend() {
    if (static_cast<int>(path.size()) == n) {
      if (anchor == nullptr || outside > 0) out->push_back(Assignment{path});
      return;
    }
    for (QubitId w : g.neighbors(path.back())) {
      if (in_path(w)) continue;
      visit(w);
    }
  }

  void visit(QubitId v) {
    bool is_outside = anchor != nullptr && anchor->count(v) == 0;
    if (is_outside && outside + 1 > budget) return;
    outside += is_outside;
    path.push_back(v);
    extend();
    path.pop_back();
    outside -= is_outside;
  }
};

}  // namespace

Assignment reversed(const Assignment& a) {
  return Assignment{std::vector<QubitId>(a.path.rbegin(), a.path.rend())};
}

std::string to_string(const Assignment& a) {
  std::ostringstream os;
  for (size_t i = 0; i < a.path.size(); ++i) {
    if (i) os << '-';
    os << a.path[i];
  }
  return os.str();
}

NoiseGraph NoiseGraph::grid(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw Error(ErrorCode::kInvalidArgument, "grid dimensions must be positive");
  }
  NoiseGraph g;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) g.add_qubit(r * cols + c, 0.0, {}, GridCoord{r, c});
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  }
  return g;
}

void NoiseGraph::add_qubit(QubitId id, double eps, ReadoutRates readout,
                           std::optional<GridCoord> coord) {
  if (qubits_.count(id)) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate qubit id " + std::to_string(id));
  }
  check_probability(eps, "eps");
  check_probability(readout.p10, "p10");
  check_probability(readout.p01, "p01");
  Qubit q;
  q.coord = coord;
  q.eps = eps;
  q.readout = readout;
  qubits_.emplace(id, std::move(q));
  vertices_.insert(std::upper_bound(vertices_.begin(), vertices_.end(), id), id);
}

void NoiseGraph::add_edge(QubitId a, QubitId b, double eta) {
  if (a == b) throw Error(ErrorCode::kInvalidArgument, "self-loop edge");
  if (!has_vertex(a) || !has_vertex(b)) {
    throw Error(ErrorCode::kInvalidArgument, "edge endpoint is not a vertex");
  }
  check_probability(eta, "eta");
  Edge e = Edge::of(a, b);
  if (eta_.count(e)) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate edge");
  }
  eta_[e] = eta;
  auto insert_sorted = [](std::vector<QubitId>& v, QubitId x) {
    v.insert(std::upper_bound(v.begin(), v.end(), x), x);
  };
  insert_sorted(qubits_.at(a).neighbors, b);
  insert_sorted(qubits_.at(b).neighbors, a);
}

const NoiseGraph::Qubit& NoiseGraph::qubit(QubitId id) const {
  auto it = qubits_.find(id);
  if (it == qubits_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown qubit " + std::to_string(id));
  }
  return it->second;
}

NoiseGraph::Qubit& NoiseGraph::qubit(QubitId id) {
  auto it = qubits_.find(id);
  if (it == qubits_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown qubit " + std::to_string(id));
  }
  return it->second;
}

double NoiseGraph::eps(QubitId id) const { return qubit(id).eps; }

double NoiseGraph::eta(QubitId a, QubitId b) const {
  auto it = eta_.find(Edge::of(a, b));
  if (it == eta_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown edge " + std::to_string(a) +
                                                 "-" + std::to_string(b));
  }
  return it->second;
}

const ReadoutRates& NoiseGraph::readout(QubitId id) const { return qubit(id).readout; }

std::optional<GridCoord> NoiseGraph::coord(QubitId id) const { return qubit(id).coord; }

const std::vector<QubitId>& NoiseGraph::neighbors(QubitId id) const {
  return qubit(id).neighbors;
}

void NoiseGraph::set_eps(QubitId id, double eps) {
  check_probability(eps, "eps");
  qubit(id).eps = eps;
}

void NoiseGraph::set_eta(QubitId a, QubitId b, double eta) {
  check_probability(eta, "eta");
  auto it = eta_.find(Edge::of(a, b));
  if (it == eta_.end()) throw Error(ErrorCode::kInvalidArgument, "unknown edge");
  it->second = eta;
}

void NoiseGraph::set_readout(QubitId id, ReadoutRates rates) {
  check_probability(rates.p10, "p10");
  check_probability(rates.p01, "p01");
  qubit(id).readout = rates;
}

std::vector<Edge> NoiseGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(eta_.size());
  for (const auto& [e, w] : eta_) out.push_back(e);
  return out;
}

void NoiseGraph::check(const Assignment& a) const {
  if (a.path.empty()) throw Error(ErrorCode::kInvalidAssignment, "empty path");
  std::set<QubitId> seen;
  for (size_t i = 0; i < a.path.size(); ++i) {
    QubitId v = a.path[i];
    if (!has_vertex(v)) {
      throw Error(ErrorCode::kInvalidAssignment, "qubit " + std::to_string(v) +
                                                     " is not on the device");
    }
    if (!seen.insert(v).second) {
      throw Error(ErrorCode::kInvalidAssignment, "qubit " + std::to_string(v) +
                                                     " repeated in path");
    }
    if (i > 0 && !has_edge(a.path[i - 1], v)) {
      throw Error(ErrorCode::kInvalidAssignment,
                  "no edge between " + std::to_string(a.path[i - 1]) + " and " +
                      std::to_string(v));
    }
  }
}

bool NoiseGraph::is_valid(const Assignment& a) const {
  try {
    check(a);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<Assignment> enumerate_simple_paths(const NoiseGraph& g, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "path length must be >= 1");
  std::vector<Assignment> out;
  PathSearch search{g, n, {}, &out};
  search.path.reserve(n);
  for (QubitId v : g.vertices()) search.visit(v);
  return out;
}

std::vector<Assignment> neighborhood(const NoiseGraph& g, const Assignment& a,
                                     const NeighborhoodSpec& spec) {
  if (spec.k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 0");
  g.check(a);
  std::vector<Assignment> out;
  if (spec.k > 0) {
    std::set<QubitId> anchor(a.path.begin(), a.path.end());
    PathSearch search{g, static_cast<int>(a.path.size()), {}, &out};
    search.anchor = &anchor;
    search.budget = spec.k;
    for (QubitId v : g.vertices()) search.visit(v);
  }
  Assignment r = reversed(a);
  if (r != a) out.insert(std::lower_bound(out.begin(), out.end(), r), r);
  return out;
}

Assignment sample_neighbor(const NoiseGraph& g, const Assignment& a,
                           const NeighborhoodSpec& spec, Rng& rng) {
  std::vector<Assignment> nb = neighborhood(g, a, spec);
  if (nb.empty()) {
    throw Error(ErrorCode::kEmptyNeighborhood,
                "no neighbour of " + to_string(a) + " at k=" + std::to_string(spec.k));
  }
  return nb[rng.below(nb.size())];
}

}  // namespace qassign
