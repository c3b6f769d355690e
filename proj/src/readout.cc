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

#include "qassign/readout.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qassign/error.h"

namespace qassign {
namespace {

// v -> (M_0 (x) ... (x) M_{n-1}) v with position k on bit n-1-k.
std::vector<double> apply_tensor(const std::vector<double>& v, int n,
                                 const std::vector<std::array<double, 4>>& mats) {
  if (v.size() != (size_t{1} << n)) {
    throw Error(ErrorCode::kLengthMismatch, "distribution length is not 2^n");
  }
  std::vector<double> out = v;
  const size_t dim = out.size();
  for (int pos = 0; pos < n; ++pos) {
    const auto& m = mats[pos];
    const size_t mask = size_t{1} << (n - 1 - pos);
    for (size_t i = 0; i < dim; ++i) {
      if (i & mask) continue;
      double x = out[i], y = out[i | mask];
      out[i] = m[0] * x + m[1] * y;
      out[i | mask] = m[2] * x + m[3] * y;
    }
  }
  return out;
}

}  // namespace

ConfusionMatrix ConfusionMatrix::from_assignment(const NoiseGraph& g, const Assignment& a) {
  ConfusionMatrix cm;
  for (QubitId q : a.path) cm.rates.push_back(g.readout(q));
  return cm;
}

ConfusionMatrix ConfusionMatrix::identity(int n) {
  ConfusionMatrix cm;
  cm.rates.assign(n, ReadoutRates{});
  return cm;
}

std::array<double, 4> ConfusionMatrix::matrix(int pos) const {
  const ReadoutRates& r = rates.at(pos);
  return {1.0 - r.p10, r.p01, r.p10, 1.0 - r.p01};
}

std::array<double, 4> ConfusionMatrix::inverse(int pos) const {
  auto m = matrix(pos);
  double det = m[0] * m[3] - m[1] * m[2];
  if (std::abs(det) < kSingularDet) {
    throw Error(ErrorCode::kSingularConfusion,
                "confusion matrix for position " + std::to_string(pos) + " is singular");
  }
  return {m[3] / det, -m[1] / det, -m[2] / det, m[0] / det};
}

std::vector<double> apply_confusion(const std::vector<double>& probs,
                                    const ConfusionMatrix& cm) {
  std::vector<std::array<double, 4>> mats;
  for (int k = 0; k < cm.num_qubits(); ++k) mats.push_back(cm.matrix(k));
  return apply_tensor(probs, cm.num_qubits(), mats);
}

std::vector<double> correct(const std::vector<double>& observed, const ConfusionMatrix& cm) {
  std::vector<std::array<double, 4>> mats;
  for (int k = 0; k < cm.num_qubits(); ++k) mats.push_back(cm.inverse(k));
  return apply_tensor(observed, cm.num_qubits(), mats);
}

std::vector<double> correction_row(const ConfusionMatrix& cm, uint64_t bits) {
  const int n = cm.num_qubits();
  std::vector<std::array<double, 4>> inv;
  for (int k = 0; k < n; ++k) inv.push_back(cm.inverse(k));
  std::vector<double> w(size_t{1} << n, 1.0);
  for (size_t x = 0; x < w.size(); ++x) {
    for (int k = 0; k < n; ++k) {
      int row = (bits >> (n - 1 - k)) & 1;
      int col = (x >> (n - 1 - k)) & 1;
      w[x] *= inv[k][row * 2 + col];
    }
  }
  return w;
}

RejectVerdict reject(const ConfusionMatrix& cm, double threshold) {
  RejectVerdict v;
  for (const ReadoutRates& r : cm.rates) {
    bool bad = std::max(r.p01, r.p10) > threshold;
    v.qubit_rejected.push_back(bad);
    v.rejected = v.rejected || bad;
  }
  return v;
}

double condition_number(const ReadoutRates& rates) {
  // Singular values of a 2x2 matrix from the eigenvalues of M^T M.
  double a = 1.0 - rates.p10, b = rates.p01, c = rates.p10, d = 1.0 - rates.p01;
  double s1 = a * a + b * b + c * c + d * d;
  double det = a * d - b * c;
  double disc = std::sqrt(std::max(0.0, s1 * s1 - 4.0 * det * det));
  double smax = std::sqrt((s1 + disc) / 2.0);
  if (det == 0.0) return std::numeric_limits<double>::infinity();
  return smax * smax / std::abs(det);
}

}  // namespace qassign
