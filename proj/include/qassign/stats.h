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

#ifndef QASSIGN_STATS_H_
#define QASSIGN_STATS_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "qassign/rng.h"

namespace qassign {

struct PairedSample {
  std::vector<double> x;
  std::vector<double> y;

  size_t size() const { return x.size(); }
  // Throws kLengthMismatch, kInvalidArgument (non-finite) or
  // kInsufficientData (fewer than min_size rows).
  void validate(size_t min_size = 2) const;
};

// Pair tallies behind tau_b. n0 = n(n-1)/2, n1 / n2 = pairs tied in x / y,
// n3 = pairs tied in both, s = concordant - discordant.
struct KendallCounts {
  int64_t n0 = 0;
  int64_t n1 = 0;
  int64_t n2 = 0;
  int64_t n3 = 0;
  int64_t s = 0;
  bool operator==(const KendallCounts&) const = default;
};

// O(n log n) tallies (sort plus merge-sort inversion count).
KendallCounts kendall_counts(const PairedSample& s);

// s / sqrt((n0 - n1)(n0 - n2)). Throws kAllTied if either side is constant.
double kendall_tau_b(const PairedSample& s);

// Nearest-rank percentile: the ceil(k/100 N)-th smallest value, 0 < k < 100.
double percentile_nearest_rank(std::vector<double> v, double k);

// P(X > X_k, Y > Y_k) / P(X > X_k) with nearest-rank percentiles.
// Throws kEmptyCondition when no x exceeds X_k.
double conditional_percentile_prob(const PairedSample& s, double k);

using Statistic = std::function<double(const PairedSample&)>;

// Standard deviation (ddof 1) of the statistic over row resamples drawn
// with replacement. Resample b uses rng.substream(b); resamples on which the
// statistic throws are skipped. Requires resamples >= 100.
double bootstrap_std(const Statistic& statistic, const PairedSample& s, int resamples,
                     const Rng& rng);

// Percentile-method confidence interval of the mean of v.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};
Interval bootstrap_mean_ci(const std::vector<double>& v, int resamples, double level,
                           const Rng& rng);

}  // namespace qassign

#endif  // QASSIGN_STATS_H_
