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

#ifndef QASSIGN_METRICS_H_
#define QASSIGN_METRICS_H_

#include <optional>
#include <vector>

#include "qassign/circuit.h"
#include "qassign/device_graph.h"
#include "qassign/readout.h"
#include "qassign/rng.h"
#include "qassign/simulator.h"

namespace qassign {

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

// <psi|rho|psi> with psi the noiseless output of c.
double fidelity(const Circuit& c, const Assignment& a, const NoiseGraph& g,
                const NoiseModel& nm);

// <0|E_{U^dag}(E_U(|0><0|))|0>.
double loschmidt_exact(const Circuit& c, const Assignment& a, const NoiseGraph& g,
                       const NoiseModel& nm);

struct EchoResult {
  double fidelity = 0.0;
  double loschmidt = 0.0;
  // Outcome distribution after the echo, before readout confusion.
  std::vector<double> echo_probs;
};

// Forward run shared between F and F_LE.
EchoResult evaluate_echo(const Circuit& c, const Assignment& a, const NoiseGraph& g,
                         const NoiseModel& nm);

// Frequency of 0^n over t shots of the echo, optionally with readout
// confusion and linear readout correction. The uncorrected standard error is
// sqrt(p(1 - p) / t); the corrected one is the plug-in multinomial error of
// the weighted estimator.
Estimate loschmidt_sampled(const Circuit& c, const Assignment& a, const NoiseGraph& g,
                           const NoiseModel& nm, uint64_t t,
                           const std::optional<ConfusionMatrix>& confusion,
                           bool correct_readout, Rng& rng);

// Same estimator from a known pre-readout echo distribution.
Estimate loschmidt_from_probs(const std::vector<double>& echo_probs, uint64_t t,
                              const std::optional<ConfusionMatrix>& confusion,
                              bool correct_readout, Rng& rng);

// prod (1 - eps_i)^{n_i} prod (1 - eta_ij)^{n_ij}. Throws kMissingWeight.
double f0(const GateCounts& counts, const NoiseGraph& g);

// Pauli error rate p (1 - 4^{-n}) of an n-qubit depolarizing parameter p.
double pauli_rate(double p, int n);

// 0.5 (F_LE / F_0 + F_0). Throws kZeroF0.
double extrapolate_f(double f_le, double f_0);

// Global-depolarizing closed forms on a register of n qubits.
double global_depol_loschmidt(double f_0, int n);
double global_depol_fidelity(double f_0, int n);

// prod (1 - c x_i)^{n_i}.
double scaled_benchmark_product(const std::vector<double>& x, const std::vector<int>& counts,
                                double c);

struct FlipWitness {
  std::vector<double> eps;
  std::vector<double> eps_prime;
  std::vector<int> counts;
  double c = 1.0;
  double c_prime = 1.0;
};

// Weight vectors whose F_0 ranking flips between two rescalings c, c'.
// Throws kWitnessNotFound when the search budget runs out.
FlipWitness f0_rescaling_flip_witness(uint64_t seed = 7, int max_tries = 200000);

// Mean and sample standard deviation (ddof 1; 0 when r = 1) of the exact
// F_LE over r count-matched random circuits derived from `templ`. Seeds
// depend only on (seed, member) so every assignment sees the same ensemble.
MeanStd loschmidt_rand_avg(const Circuit& templ, const Assignment& a, const NoiseGraph& g,
                           const NoiseModel& nm, int r, uint64_t seed);

struct MetricsRecord {
  Assignment assignment;
  double F = 0.0;
  double F_LE = 0.0;
  double F0 = 0.0;
  double F_extrap = 0.0;
  double F_LE_rand_mean = 0.0;
  double F_LE_rand_std = 0.0;
  bool has_rand = false;
  uint64_t shots = 0;  // 0 = exact
  double F_LE_sampled = 0.0;
  double F_LE_sampled_stderr = 0.0;
  bool rejected = false;
};

struct SweepOptions {
  uint64_t shots = 0;
  bool use_confusion = false;
  bool correct_readout = false;
  int ensemble = 0;  // 0 disables the random-circuit average
  uint64_t seed = 0;
  double reject_threshold = kRejectThreshold;
};

// One record per assignment in input order. Assignments are evaluated in
// parallel; every row uses its own RNG stream keyed by its index.
std::vector<MetricsRecord> sweep(const Circuit& c, const std::vector<Assignment>& assignments,
                                 const NoiseGraph& g, const NoiseModel& nm,
                                 const SweepOptions& opts);

}  // namespace qassign

#endif  // QASSIGN_METRICS_H_
