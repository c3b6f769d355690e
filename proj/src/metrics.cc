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

#include "qassign/metrics.h"

#include <cmath>
#include <exception>
#include <limits>
#include <mutex>

#include "qassign/error.h"

namespace qassign {

EchoResult evaluate_echo(const Circuit& c, const Assignment& a, const NoiseGraph& g,
                         const NoiseModel& nm) {
  g.check(a);
  Circuit physical = assign(c, a);
  physical.validate();
  DensityMatrix rho(physical.num_qubits());
  evolve(rho, physical, g, nm, Direction::kForward);
  EchoResult r;
  r.fidelity = rho.expectation(simulate_statevector(physical));
  evolve(rho, invert(physical), g, nm, Direction::kAdjoint);
  r.echo_probs = rho.diagonal();
  r.loschmidt = r.echo_probs[0];
  return r;
}

double fidelity(const Circuit& c, const Assignment& a, const NoiseGraph& g,
                const NoiseModel& nm) {
  DensityMatrix rho = run(c, a, g, nm);
  return rho.expectation(simulate_statevector(assign(c, a)));
}

double loschmidt_exact(const Circuit& c, const Assignment& a, const NoiseGraph& g,
                       const NoiseModel& nm) {
  return evaluate_echo(c, a, g, nm).loschmidt;
}

Estimate loschmidt_from_probs(const std::vector<double>& echo_probs, uint64_t t,
                              const std::optional<ConfusionMatrix>& confusion,
                              bool correct_readout, Rng& rng) {
  if (t < 1) throw Error(ErrorCode::kInvalidArgument, "shot count must be >= 1");
  std::vector<double> observed = echo_probs;
  if (confusion) observed = apply_confusion(observed, *confusion);
  std::vector<uint64_t> counts = sample_bitstrings(observed, t, rng);
  const double td = static_cast<double>(t);
  Estimate e;
  if (correct_readout && confusion) {
    std::vector<double> w = correction_row(*confusion, 0);
    double m1 = 0.0, m2 = 0.0;
    for (size_t x = 0; x < counts.size(); ++x) {
      double f = static_cast<double>(counts[x]) / td;
      m1 += w[x] * f;
      m2 += w[x] * w[x] * f;
    }
    e.value = m1;
    e.std_error = std::sqrt(std::max(0.0, m2 - m1 * m1) / td);
  } else {
    double p = static_cast<double>(counts[0]) / td;
    e.value = p;
    e.std_error = std::sqrt(p * (1.0 - p) / td);
  }
  return e;
}

Estimate loschmidt_sampled(const Circuit& c, const Assignment& a, const NoiseGraph& g,
                           const NoiseModel& nm, uint64_t t,
                           const std::optional<ConfusionMatrix>& confusion,
                           bool correct_readout, Rng& rng) {
  EchoResult echo = evaluate_echo(c, a, g, nm);
  return loschmidt_from_probs(echo.echo_probs, t, confusion, correct_readout, rng);
}

double f0(const GateCounts& counts, const NoiseGraph& g) {
  double f = 1.0;
  for (const auto& [v, k] : counts.n_i) {
    if (!g.has_vertex(v)) {
      throw Error(ErrorCode::kMissingWeight, "no eps for qubit " + std::to_string(v));
    }
    f *= std::pow(1.0 - g.eps(v), static_cast<double>(k));
  }
  for (const auto& [e, k] : counts.n_ij) {
    if (!g.has_edge(e.a, e.b)) {
      throw Error(ErrorCode::kMissingWeight, "no eta for edge " + std::to_string(e.a) +
                                                 "-" + std::to_string(e.b));
    }
    f *= std::pow(1.0 - g.eta(e.a, e.b), static_cast<double>(k));
  }
  return f;
}

double pauli_rate(double p, int n) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "p outside [0,1]");
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  return p * (1.0 - std::pow(4.0, -n));
}

double extrapolate_f(double f_le, double f_0) {
  if (f_0 == 0.0) throw Error(ErrorCode::kZeroF0, "cannot extrapolate with F_0 = 0");
  return 0.5 * (f_le / f_0 + f_0);
}

double global_depol_loschmidt(double f_0, int n) {
  double d = std::ldexp(1.0, n);
  return (d - 1.0) / d * f_0 * f_0 + 1.0 / d;
}

double global_depol_fidelity(double f_0, int n) {
  double d = std::ldexp(1.0, n);
  return (d - 1.0) / d * f_0 + 1.0 / d;
}

double scaled_benchmark_product(const std::vector<double>& x, const std::vector<int>& counts,
                                double c) {
  if (x.size() != counts.size()) throw Error(ErrorCode::kLengthMismatch, "x and counts differ");
  double f = 1.0;
  for (size_t i = 0; i < x.size(); ++i) f *= std::pow(1.0 - c * x[i], counts[i]);
  return f;
}

FlipWitness f0_rescaling_flip_witness(uint64_t seed, int max_tries) {
  Rng rng(seed, 0, "flip_witness");
  // Depolarizing parameter vs single-qubit Pauli rate: c = 1, c' = 3/4.
  const double c = 1.0, c_prime = 1.0 - std::pow(4.0, -1);
  auto flips = [](const FlipWitness& w) {
    double a = scaled_benchmark_product(w.eps, w.counts, w.c);
    double b = scaled_benchmark_product(w.eps_prime, w.counts, w.c);
    double ap = scaled_benchmark_product(w.eps, w.counts, w.c_prime);
    double bp = scaled_benchmark_product(w.eps_prime, w.counts, w.c_prime);
    return a > b && ap < bp;
  };
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    FlipWitness w;
    int d = 2 + static_cast<int>(rng.below(3));
    // Past half the budget, also search over the rescaling factors.
    w.c = c;
    w.c_prime = c_prime;
    if (attempt > max_tries / 2) {
      w.c = rng.uniform(0.05, 1.0);
      w.c_prime = rng.uniform(0.05, 1.0);
      if (w.c == w.c_prime) continue;
    }
    for (int i = 0; i < d; ++i) {
      w.eps.push_back(rng.uniform());
      w.eps_prime.push_back(rng.uniform());
      w.counts.push_back(1 + static_cast<int>(rng.below(4)));
    }
    if (flips(w)) return w;
    // Try the swapped orientation before discarding the draw.
    std::swap(w.eps, w.eps_prime);
    if (flips(w)) return w;
  }
  throw Error(ErrorCode::kWitnessNotFound, "no rescaling flip found within search budget");
}

MeanStd loschmidt_rand_avg(const Circuit& templ, const Assignment& a, const NoiseGraph& g,
                           const NoiseModel& nm, int r, uint64_t seed) {
  if (r < 1) throw Error(ErrorCode::kInvalidArgument, "ensemble size must be >= 1");
  std::vector<double> v;
  for (int i = 0; i < r; ++i) {
    Rng key(seed, static_cast<uint64_t>(i), "random_ensemble");
    Circuit rc = build_count_matched_random(templ, key.next_u64());
    v.push_back(loschmidt_exact(rc, a, g, nm));
  }
  MeanStd out;
  for (double x : v) out.mean += x;
  out.mean /= r;
  if (r > 1) {
    double ss = 0.0;
    for (double x : v) ss += (x - out.mean) * (x - out.mean);
    out.std = std::sqrt(ss / (r - 1));
  }
  return out;
}

std::vector<MetricsRecord> sweep(const Circuit& c, const std::vector<Assignment>& assignments,
                                 const NoiseGraph& g, const NoiseModel& nm,
                                 const SweepOptions& opts) {
  std::vector<MetricsRecord> rows(assignments.size());
  std::exception_ptr failure;
  std::mutex failure_mu;
  const int64_t count = static_cast<int64_t>(assignments.size());

#pragma omp parallel for schedule(dynamic)
  for (int64_t i = 0; i < count; ++i) {
    try {
      const Assignment& a = assignments[i];
      MetricsRecord& rec = rows[i];
      rec.assignment = a;
      EchoResult echo = evaluate_echo(c, a, g, nm);
      rec.F = echo.fidelity;
      rec.F_LE = echo.loschmidt;
      rec.F0 = f0(gate_counts(assign(c, a)), g);
      rec.F_extrap = rec.F0 > 0.0 ? extrapolate_f(rec.F_LE, rec.F0)
                                  : std::numeric_limits<double>::quiet_NaN();
      ConfusionMatrix cm = ConfusionMatrix::from_assignment(g, a);
      rec.rejected = reject(cm, opts.reject_threshold).rejected;
      if (opts.ensemble > 0) {
        MeanStd ms = loschmidt_rand_avg(c, a, g, nm, opts.ensemble, opts.seed);
        rec.F_LE_rand_mean = ms.mean;
        rec.F_LE_rand_std = ms.std;
        rec.has_rand = true;
      }
      if (opts.shots > 0) {
        Rng rng(opts.seed, static_cast<uint64_t>(i), "sweep_shots");
        std::optional<ConfusionMatrix> conf;
        if (opts.use_confusion) conf = cm;
        Estimate e =
            loschmidt_from_probs(echo.echo_probs, opts.shots, conf, opts.correct_readout, rng);
        rec.shots = opts.shots;
        rec.F_LE_sampled = e.value;
        rec.F_LE_sampled_stderr = e.std_error;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace qassign
