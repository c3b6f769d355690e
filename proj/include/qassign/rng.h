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

#ifndef QASSIGN_RNG_H_
#define QASSIGN_RNG_H_

#include <cstdint>
#include <limits>
#include <string_view>
#include <utility>
#include <vector>

namespace qassign {

uint64_t fnv1a64(std::string_view text);

// SplitMix64 output function.
uint64_t mix64(uint64_t x);

// Counter-based generator. The stream is a pure function of the key and the
// counter, so a stream named by (seed, trial, purpose) is reproducible no
// matter which thread draws it or in what order streams are created.
class Rng {
 public:
  using result_type = uint64_t;

  explicit Rng(uint64_t key = 0) : key_(mix64(key)), counter_(0) {}
  Rng(uint64_t seed, uint64_t trial, std::string_view purpose);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return next_u64(); }

  uint64_t next_u64() {
    return mix64(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). n must be positive.
  uint64_t below(uint64_t n);

  // Standard normal via Box-Muller.
  double normal();

  // Independent child stream; does not advance this generator.
  Rng substream(uint64_t index) const;

  uint64_t key() const { return key_; }
  uint64_t counter() const { return counter_; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t key_;
  uint64_t counter_;
};

}  // namespace qassign

#endif  // QASSIGN_RNG_H_
