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

#include "qassign/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qassign/error.h"

namespace qassign {
namespace {

int64_t tied_pairs(const std::vector<double>& sorted_values) {
  int64_t total = 0;
  size_t i = 0;
  while (i < sorted_values.size()) {
    size_t j = i;
    while (j < sorted_values.size() && sorted_values[j] == sorted_values[i]) ++j;
    int64_t t = static_cast<int64_t>(j - i);
    total += t * (t - 1) / 2;
    i = j;
  }
  return total;
}

// Sorts v ascending and returns the number of strict inversions.
int64_t merge_count(std::vector<double>& v, std::vector<double>& buf, size_t lo, size_t hi) {
  if (hi - lo < 2) return 0;
  size_t mid = lo + (hi - lo) / 2;
  int64_t inv = merge_count(v, buf, lo, mid) + merge_count(v, buf, mid, hi);
  size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      inv += static_cast<int64_t>(mid - i);
      buf[k++] = v[j++];
    } else {
      buf[k++] = v[i++];
    }
  }
  while (i < mid) buf[k++] = v[i++];
  while (j < hi) buf[k++] = v[j++];
  std::copy(buf.begin() + lo, buf.begin() + hi, v.begin() + lo);
  return inv;
}

}  // namespace

void PairedSample::validate(size_t min_size) const {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch, "paired sample columns differ in length");
  }
  if (x.size() < min_size) {
    throw Error(ErrorCode::kInsufficientData,
                "need at least " + std::to_string(min_size) + " rows");
  }
  for (size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw Error(ErrorCode::kInvalidArgument, "paired sample has a non-finite entry");
    }
  }
}

KendallCounts kendall_counts(const PairedSample& s) {
  s.validate(2);
  const size_t n = s.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (s.x[a] != s.x[b]) return s.x[a] < s.x[b];
    return s.y[a] < s.y[b];
  });

  KendallCounts k;
  k.n0 = static_cast<int64_t>(n) * static_cast<int64_t>(n - 1) / 2;

  std::vector<double> xs(n), ys(n);
  for (size_t i = 0; i < n; ++i) {
    xs[i] = s.x[order[i]];
    ys[i] = s.y[order[i]];
  }
  k.n1 = tied_pairs(xs);

  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j < n && xs[j] == xs[i] && ys[j] == ys[i]) ++j;
    int64_t t = static_cast<int64_t>(j - i);
    k.n3 += t * (t - 1) / 2;
    i = j;
  }

  std::vector<double> buf(n);
  int64_t swaps = merge_count(ys, buf, 0, n);
  k.n2 = tied_pairs(ys);  // ys is sorted now
  k.s = k.n0 - k.n1 - k.n2 + k.n3 - 2 * swaps;
  return k;
}

double kendall_tau_b(const PairedSample& s) {
  KendallCounts k = kendall_counts(s);
  double den = static_cast<double>(k.n0 - k.n1) * static_cast<double>(k.n0 - k.n2);
  if (den <= 0.0) throw Error(ErrorCode::kAllTied, "all x or all y values are tied");
  return static_cast<double>(k.s) / std::sqrt(den);
}

double percentile_nearest_rank(std::vector<double> v, double k) {
  if (v.empty()) throw Error(ErrorCode::kInsufficientData, "percentile of empty sample");
  if (!(k > 0.0 && k < 100.0)) {
    throw Error(ErrorCode::kInvalidArgument, "percentile must lie in (0, 100)");
  }
  std::sort(v.begin(), v.end());
  auto rank = static_cast<size_t>(std::ceil(k / 100.0 * static_cast<double>(v.size())));
  rank = std::clamp<size_t>(rank, 1, v.size());
  return v[rank - 1];
}

double conditional_percentile_prob(const PairedSample& s, double k) {
  s.validate(1);
  const double xk = percentile_nearest_rank(s.x, k);
  const double yk = percentile_nearest_rank(s.y, k);
  int64_t den = 0, num = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s.x[i] > xk) {
      ++den;
      if (s.y[i] > yk) ++num;
    }
  }
  if (den == 0) {
    throw Error(ErrorCode::kEmptyCondition, "no sample exceeds the x percentile");
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

double bootstrap_std(const Statistic& statistic, const PairedSample& s, int resamples,
                     const Rng& rng) {
  if (resamples < 100) throw Error(ErrorCode::kInvalidArgument, "need >= 100 resamples");
  s.validate(1);
  const size_t n = s.size();
  std::vector<double> values(resamples, 0.0);
  std::vector<char> ok(resamples, 0);

#pragma omp parallel for schedule(static)
  for (int b = 0; b < resamples; ++b) {
    Rng r = rng.substream(static_cast<uint64_t>(b));
    PairedSample rs;
    rs.x.resize(n);
    rs.y.resize(n);
    for (size_t i = 0; i < n; ++i) {
      size_t row = r.below(n);
      rs.x[i] = s.x[row];
      rs.y[i] = s.y[row];
    }
    try {
      values[b] = statistic(rs);
      ok[b] = 1;
    } catch (const Error&) {
    }
  }

  // Shifted by the first valid value so a constant statistic gives exactly 0.
  double shift = 0.0, mean = 0.0;
  int m = 0;
  for (int b = 0; b < resamples; ++b) {
    if (!ok[b]) continue;
    if (m == 0) shift = values[b];
    mean += values[b] - shift;
    ++m;
  }
  if (m < 2) throw Error(ErrorCode::kInsufficientData, "too few valid resamples");
  mean /= m;
  double ss = 0.0;
  for (int b = 0; b < resamples; ++b) {
    if (ok[b]) ss += (values[b] - shift - mean) * (values[b] - shift - mean);
  }
  return std::sqrt(ss / (m - 1));
}

Interval bootstrap_mean_ci(const std::vector<double>& v, int resamples, double level,
                           const Rng& rng) {
  if (v.empty()) throw Error(ErrorCode::kInsufficientData, "empty sample");
  if (resamples < 100) throw Error(ErrorCode::kInvalidArgument, "need >= 100 resamples");
  if (!(level > 0.0 && level < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "level must lie in (0, 1)");
  }
  const size_t n = v.size();
  std::vector<double> means(resamples);

#pragma omp parallel for schedule(static)
  for (int b = 0; b < resamples; ++b) {
    Rng r = rng.substream(static_cast<uint64_t>(b));
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += v[r.below(n)];
    means[b] = s / static_cast<double>(n);
  }
  std::sort(means.begin(), means.end());
  auto at = [&](double q) {
    size_t idx = static_cast<size_t>(std::floor(q * (resamples - 1)));
    return means[std::min(idx, means.size() - 1)];
  };
  double tail = (1.0 - level) / 2.0;
  return Interval{at(tail), at(1.0 - tail)};
}

}  // namespace qassign
