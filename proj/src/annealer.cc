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

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>

#include "qassign/error.h"

namespace qassign {

Schedule Schedule::exponential(double t0, double alpha) {
  if (!(t0 > 0.0)) throw Error(ErrorCode::kInvalidArgument, "T0 must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0, 1)");
  }
  return Schedule(Kind::kExponential, t0, alpha);
}

Schedule Schedule::logarithmic(double t0) {
  if (!(t0 > 0.0)) throw Error(ErrorCode::kInvalidArgument, "T0 must be positive");
  return Schedule(Kind::kLogarithmic, t0, 0.0);
}

double Schedule::temperature(int i) const {
  if (i < 0) throw Error(ErrorCode::kInvalidArgument, "step index must be >= 0");
  if (kind_ == Kind::kExponential) return t0_ * std::pow(alpha_, i);
  return t0_ / (1.0 + std::log1p(static_cast<double>(i)));
}

CostOracle CostOracle::from_table(std::shared_ptr<const Table> table) {
  return CostOracle([table](const Assignment& a) {
    auto it = table->find(a);
    if (it == table->end()) {
      throw Error(ErrorCode::kInvalidAssignment, "assignment " + to_string(a) +
                                                     " missing from cost table");
    }
    return it->second;
  });
}

double CostOracle::cost(const Assignment& a) {
  auto it = memo_.find(a);
  if (it != memo_.end()) return it->second;
  double c = fn_(a);
  memo_.emplace(a, c);
  return c;
}

double acceptance_probability(double delta, double temperature) {
  if (delta <= 0.0) return 1.0;
  if (!(temperature > 0.0)) return 0.0;
  return std::exp(-delta / temperature);
}

AnnealTrace anneal(const NoiseGraph& g, const NeighborhoodSpec& spec, CostOracle& oracle,
                   const Schedule& schedule, int steps, const Assignment& init, Rng& rng) {
  if (steps < 1) throw Error(ErrorCode::kInvalidArgument, "steps must be >= 1");
  g.check(init);
  AnnealTrace trace;
  Assignment current = init;
  double current_cost = oracle.cost(current);
  trace.best = current;
  trace.best_cost = current_cost;
  trace.steps.push_back({0, schedule.temperature(0), current_cost, true, oracle.n_s(), current});

  for (int i = 1; i <= steps; ++i) {
    const double t = schedule.temperature(i - 1);
    Assignment proposal = sample_neighbor(g, current, spec, rng);
    double proposal_cost = oracle.cost(proposal);
    double p = acceptance_probability(proposal_cost - current_cost, t);
    // Always draw so the stream position does not depend on the outcome.
    double x = rng.uniform();
    bool accepted = x < p;
    if (accepted) {
      current = std::move(proposal);
      current_cost = proposal_cost;
      if (current_cost < trace.best_cost) {
        trace.best_cost = current_cost;
        trace.best = current;
      }
    }
    trace.steps.push_back({i, t, current_cost, accepted, oracle.n_s(), current});
  }
  trace.n_s = oracle.n_s();
  return trace;
}

Assignment uniform_initial(const std::vector<Assignment>& population, Rng& rng) {
  if (population.empty()) {
    throw Error(ErrorCode::kInsufficientStates, "empty assignment population");
  }
  return population[rng.below(population.size())];
}

std::vector<double> random_baseline(const std::vector<double>& population_costs, size_t n_s,
                                    int trials, Rng& rng) {
  if (n_s < 1) throw Error(ErrorCode::kInvalidArgument, "n_s must be >= 1");
  const size_t pop = population_costs.size();
  if (n_s > pop) {
    throw Error(ErrorCode::kInsufficientStates,
                "n_s = " + std::to_string(n_s) + " exceeds population " + std::to_string(pop));
  }
  std::vector<size_t> idx(pop);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<double> best(trials);
  for (int t = 0; t < trials; ++t) {
    // Partial Fisher-Yates: the first n_s slots are a uniform sample.
    double b = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n_s; ++i) {
      size_t j = i + rng.below(pop - i);
      std::swap(idx[i], idx[j]);
      b = std::min(b, population_costs[idx[i]]);
    }
    best[t] = b;
  }
  return best;
}

std::vector<double> random_baseline(CostOracle& oracle,
                                    const std::vector<Assignment>& population, size_t n_s,
                                    int trials, Rng& rng) {
  std::vector<double> costs;
  costs.reserve(population.size());
  for (const Assignment& a : population) costs.push_back(oracle.cost(a));
  return random_baseline(costs, n_s, trials, rng);
}

std::vector<double> locality(const NoiseGraph& g, const std::vector<Assignment>& assignments,
                             const std::vector<double>& values, const std::vector<int>& ks) {
  if (assignments.size() != values.size()) {
    throw Error(ErrorCode::kLengthMismatch, "assignments and values differ in length");
  }
  std::map<Assignment, double> lookup;
  for (size_t i = 0; i < assignments.size(); ++i) lookup[assignments[i]] = values[i];

  std::vector<double> out;
  for (int k : ks) {
    double total = 0.0;
    int64_t counted = 0;
    std::exception_ptr failure;
    std::mutex mu;
    const int64_t count = static_cast<int64_t>(assignments.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total, counted)
    for (int64_t i = 0; i < count; ++i) {
      try {
        std::vector<Assignment> nb = neighborhood(g, assignments[i], NeighborhoodSpec{k});
        if (nb.empty()) continue;
        double s = 0.0;
        for (const Assignment& b : nb) {
          auto it = lookup.find(b);
          if (it == lookup.end()) {
            throw Error(ErrorCode::kInvalidArgument, "neighbour " + to_string(b) +
                                                         " has no metric value");
          }
          s += std::abs(values[i] - it->second);
        }
        total += s / static_cast<double>(nb.size());
        ++counted;
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    out.push_back(counted ? total / static_cast<double>(counted) : 0.0);
  }
  return out;
}

void write_trace_csv(std::ostream& os, const AnnealTrace& trace) {
  os << "step,temperature,cost,accepted,n_s,path\n";
  os.precision(17);
  for (const TraceStep& s : trace.steps) {
    os << s.step << ',' << s.temperature << ',' << s.cost << ',' << (s.accepted ? 1 : 0)
       << ',' << s.n_s << ',' << to_string(s.assignment) << '\n';
  }
}

}  // namespace qassign
