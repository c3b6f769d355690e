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

#ifndef QASSIGN_ANNEALER_H_
#define QASSIGN_ANNEALER_H_

#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <vector>

#include "qassign/device_graph.h"
#include "qassign/rng.h"

namespace qassign {

class Schedule {
 public:
  enum class Kind { kExponential, kLogarithmic };

  // T_i = T0 alpha^i.
  static Schedule exponential(double t0, double alpha);
  // T_i = T0 / (1 + log(1 + i)).
  static Schedule logarithmic(double t0);

  double temperature(int i) const;
  Kind kind() const { return kind_; }
  double t0() const { return t0_; }
  double alpha() const { return alpha_; }

 private:
  Schedule(Kind kind, double t0, double alpha) : kind_(kind), t0_(t0), alpha_(alpha) {}
  Kind kind_;
  double t0_;
  double alpha_;
};

// Memoizing cost function. n_s counts distinct assignments evaluated.
class CostOracle {
 public:
  using Fn = std::function<double(const Assignment&)>;
  using Table = std::map<Assignment, double>;

  explicit CostOracle(Fn fn) : fn_(std::move(fn)) {}
  // Offline mode over a precomputed table; unknown assignments throw
  // kInvalidAssignment.
  static CostOracle from_table(std::shared_ptr<const Table> table);

  double cost(const Assignment& a);
  size_t n_s() const { return memo_.size(); }

 private:
  Fn fn_;
  Table memo_;
};

// Metropolis rule: 1 if delta <= 0, else exp(-delta / T).
double acceptance_probability(double delta, double temperature);

struct TraceStep {
  int step = 0;
  double temperature = 0.0;
  double cost = 0.0;
  bool accepted = false;
  size_t n_s = 0;
  Assignment assignment;
};

struct AnnealTrace {
  // Row 0 is the initial state; rows 1..N are the iterations.
  std::vector<TraceStep> steps;
  size_t n_s = 0;
  Assignment best;
  double best_cost = 0.0;
};

// Simulated annealing over assignments. Iteration i (1-based) proposes a
// uniform neighbour and accepts it with acceptance_probability(C' - C,
// T_{i-1}). Each trace row records the current state after the iteration.
AnnealTrace anneal(const NoiseGraph& g, const NeighborhoodSpec& spec, CostOracle& oracle,
                   const Schedule& schedule, int steps, const Assignment& init, Rng& rng);

// Uniform initial assignment from a population.
Assignment uniform_initial(const std::vector<Assignment>& population, Rng& rng);

// Best (minimum) of n_s costs drawn without replacement, per trial.
// Throws kInsufficientStates when n_s exceeds the population.
std::vector<double> random_baseline(const std::vector<double>& population_costs, size_t n_s,
                                    int trials, Rng& rng);
std::vector<double> random_baseline(CostOracle& oracle,
                                    const std::vector<Assignment>& population, size_t n_s,
                                    int trials, Rng& rng);

// For each k: mean over assignments a of the mean |v(a) - v(a')| over
// a' in neighborhood(a, k). `values` must cover every neighbour.
std::vector<double> locality(const NoiseGraph& g, const std::vector<Assignment>& assignments,
                             const std::vector<double>& values, const std::vector<int>& ks);

// CSV with header step,temperature,cost,accepted,n_s,path.
void write_trace_csv(std::ostream& os, const AnnealTrace& trace);

}  // namespace qassign

#endif  // QASSIGN_ANNEALER_H_
