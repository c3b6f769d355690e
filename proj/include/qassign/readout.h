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

#ifndef QASSIGN_READOUT_H_
#define QASSIGN_READOUT_H_

#include <array>
#include <vector>

#include "qassign/device_graph.h"

namespace qassign {

// Uncorrelated readout model: one column-stochastic 2x2 matrix per register
// position, [[p(0|0), p(0|1)], [p(1|0), p(1|1)]].
struct ConfusionMatrix {
  std::vector<ReadoutRates> rates;

  static ConfusionMatrix from_assignment(const NoiseGraph& g, const Assignment& a);
  static ConfusionMatrix identity(int n);

  int num_qubits() const { return static_cast<int>(rates.size()); }
  // Row-major matrix for one position.
  std::array<double, 4> matrix(int pos) const;
  // Row-major inverse; throws kSingularConfusion if |det| < 1e-9.
  std::array<double, 4> inverse(int pos) const;
};

inline constexpr double kRejectThreshold = 0.15;
inline constexpr double kSingularDet = 1e-9;

// Observed distribution for a true distribution over 2^n outcomes.
std::vector<double> apply_confusion(const std::vector<double>& probs,
                                    const ConfusionMatrix& cm);

// Tensor product of per-position inverses applied to an observed distribution.
// No projection onto the simplex.
std::vector<double> correct(const std::vector<double>& observed,
                            const ConfusionMatrix& cm);

// Row of the inverse confusion map for outcome `bits`: the corrected
// probability of `bits` is sum_x w[x] * observed[x].
std::vector<double> correction_row(const ConfusionMatrix& cm, uint64_t bits);

struct RejectVerdict {
  std::vector<bool> qubit_rejected;
  bool rejected = false;
};

// A position is rejected iff max(p01, p10) > threshold (strict).
RejectVerdict reject(const ConfusionMatrix& cm, double threshold = kRejectThreshold);

// 2-norm condition number of one position's confusion matrix.
double condition_number(const ReadoutRates& rates);

}  // namespace qassign

#endif  // QASSIGN_READOUT_H_
