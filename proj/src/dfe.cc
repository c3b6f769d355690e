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

#include "qassign/dfe.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "qassign/error.h"

namespace qassign {
namespace {

// Estimator sum_x f(x) v(x) with per-shot value v and its standard error.
Estimate linear_estimate(const std::vector<double>& f, const std::vector<double>& v,
                         uint64_t shots) {
  double m1 = 0.0, m2 = 0.0;
  for (size_t x = 0; x < f.size(); ++x) {
    m1 += f[x] * v[x];
    m2 += f[x] * v[x] * v[x];
  }
  Estimate e;
  e.value = m1;
  if (shots > 0) e.std_error = std::sqrt(std::max(0.0, m2 - m1 * m1) / shots);
  return e;
}

// Per-shot values for the observable sum_l c_l Z^l.
std::vector<double> shot_values(std::vector<double> coeffs) {
  walsh_hadamard(coeffs);
  return coeffs;
}

MeasurementSetting uniform_setting(int n, bool z, double phi) {
  MeasurementSetting s;
  s.bases.assign(n, QubitBasis{z, phi});
  return s;
}

}  // namespace

void walsh_hadamard(std::vector<double>& v) {
  const size_t n = v.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "Walsh-Hadamard length must be a power of 2");
  }
  for (size_t h = 1; h < n; h <<= 1) {
    for (size_t i = 0; i < n; i += 2 * h) {
      for (size_t k = i; k < i + h; ++k) {
        double a = v[k], b = v[k + h];
        v[k] = a + b;
        v[k + h] = a - b;
      }
    }
  }
}

std::vector<double> DensityMatrixSource::measure(const MeasurementSetting& s) {
  const int n = rho_.num_qubits();
  if (static_cast<int>(s.bases.size()) != n) {
    throw Error(ErrorCode::kLengthMismatch, "setting size differs from register");
  }
  DensityMatrix work = rho_;
  for (int p = 0; p < n; ++p) {
    if (s.bases[p].z_basis) continue;
    apply_gate(work, Gate::one(GateKind::kRz, p, -s.bases[p].phi));
    apply_gate(work, Gate::one(GateKind::kH, p));
  }
  std::vector<double> probs = work.diagonal();
  if (shots_ == 0) return probs;
  Rng stream = rng_.substream(draws_++);
  std::vector<uint64_t> counts = sample_bitstrings(probs, shots_, stream);
  std::vector<double> freq(counts.size());
  for (size_t x = 0; x < counts.size(); ++x) {
    freq[x] = static_cast<double>(counts[x]) / static_cast<double>(shots_);
  }
  return freq;
}

Estimate ghz_dfe(ShotSource& source, int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "GHZ DFE needs n >= 2");
  const size_t dim = size_t{1} << n;

  std::vector<double> cz(dim);
  for (size_t l = 0; l < dim; ++l) {
    double sign = (std::popcount(l) % 2 == 0) ? 1.0 : -1.0;
    cz[l] = (1.0 + sign) / std::ldexp(1.0, n + 1);
  }
  Estimate fz = linear_estimate(source.frequencies(uniform_setting(n, true, 0.0)),
                                shot_values(cz), source.shots());

  std::vector<double> parity(dim);
  for (size_t x = 0; x < dim; ++x) parity[x] = (std::popcount(x) % 2 == 0) ? 1.0 : -1.0;
  double fxy = 0.0, var = fz.std_error * fz.std_error;
  for (int k = 1; k <= n; ++k) {
    double phi = k * std::numbers::pi / n;
    Estimate mk = linear_estimate(source.frequencies(uniform_setting(n, false, phi)), parity,
                                  source.shots());
    double w = ((k % 2 == 0) ? 1.0 : -1.0) / (2.0 * n);
    fxy += w * mk.value;
    var += w * w * mk.std_error * mk.std_error;
  }
  return Estimate{fz.value + fxy, std::sqrt(var)};
}

Estimate qft_dfe(ShotSource& source, int n, uint64_t j) {
  if (n < 1 || n >= 63 || j >= (uint64_t{1} << n)) {
    throw Error(ErrorCode::kInvalidArgument, "j must lie in [0, 2^n)");
  }
  MeasurementSetting s;
  for (int p = 0; p < n; ++p) {
    double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / std::ldexp(1.0, p + 1);
    s.bases.push_back(QubitBasis{false, -theta});
  }
  const size_t dim = size_t{1} << n;
  std::vector<double> coeffs(dim, 1.0 / static_cast<double>(dim));
  return linear_estimate(source.frequencies(s), shot_values(coeffs), source.shots());
}

Estimate swapnet_fidelity(const DensityMatrix& rho, int pos, std::complex<double> alpha,
                          std::complex<double> beta, uint64_t shots, Rng& rng) {
  if (pos < 0 || pos >= rho.num_qubits()) {
    throw Error(ErrorCode::kInvalidArgument, "position outside register");
  }
  double norm = std::norm(alpha) + std::norm(beta);
  if (!(std::abs(norm - 1.0) <= 1e-9)) {
    throw Error(ErrorCode::kInvalidAmplitudes, "amplitudes are not normalized");
  }
  Mat2 r = rho.reduced_1q(pos);
  std::complex<double> psi[2] = {alpha, beta};
  std::complex<double> overlap = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) overlap += std::conj(psi[a]) * r[a * 2 + b] * psi[b];
  double p = std::clamp(overlap.real(), 0.0, 1.0);
  if (shots == 0) return Estimate{overlap.real(), 0.0};
  std::vector<uint64_t> counts = sample_bitstrings({p, 1.0 - p}, shots, rng);
  double f = static_cast<double>(counts[0]) / static_cast<double>(shots);
  return Estimate{f, std::sqrt(f * (1.0 - f) / static_cast<double>(shots))};
}

Estimate clifford_fidelity(ShotSource& source, int n, uint64_t expected_bits) {
  const size_t dim = size_t{1} << n;
  if (expected_bits >= dim) throw Error(ErrorCode::kInvalidArgument, "bitstring out of range");
  std::vector<double> v(dim, 0.0);
  v[expected_bits] = 1.0;
  return linear_estimate(source.frequencies(uniform_setting(n, true, 0.0)), v, source.shots());
}

}  // namespace qassign
