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

#include <gtest/gtest.h>

#include "qassign/error.h"
#include "qassign/rng.h"

namespace qassign {
namespace {

std::vector<double> random_distribution(int n, Rng& rng) {
  std::vector<double> p(size_t{1} << n);
  double s = 0;
  for (double& x : p) s += (x = rng.uniform());
  for (double& x : p) x /= s;
  return p;
}

TEST(CorrectTest, IdentityConfusionIsNoOp) {
  Rng rng(1);
  auto p = random_distribution(3, rng);
  auto q = correct(p, ConfusionMatrix::identity(3));
  for (size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(q[i], p[i], 1e-15);
}

TEST(CorrectTest, SingleQubitHandExample) {
  ConfusionMatrix cm;
  cm.rates = {{0.05, 0.1}};
  auto observed = apply_confusion({0.9, 0.1}, cm);
  EXPECT_NEAR(observed[0], 0.865, 1e-15);
  EXPECT_NEAR(correct(observed, cm)[0], 0.9, 1e-12);
}

TEST(CorrectTest, RoundTripFourQubits) {
  Rng rng(2);
  ConfusionMatrix cm;
  for (int k = 0; k < 4; ++k) cm.rates.push_back({rng.uniform(0, 0.2), rng.uniform(0, 0.2)});
  auto p = random_distribution(4, rng);
  auto back = correct(apply_confusion(p, cm), cm);
  for (size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(back[i], p[i], 1e-12);
}

TEST(CorrectTest, NegativeEntriesAreKept) {
  ConfusionMatrix cm;
  cm.rates = {{0.1, 0.1}};
  // Fewer 1 outcomes than the flip rate alone would produce.
  auto q = correct({0.95, 0.05}, cm);
  EXPECT_LT(q[1], 0.0);
  EXPECT_NEAR(q[0] + q[1], 1.0, 1e-12);
}

TEST(CorrectTest, SingularConfusion) {
  ConfusionMatrix cm;
  cm.rates = {{0.0, 0.0}, {0.5, 0.5}};
  try {
    correct({0.25, 0.25, 0.25, 0.25}, cm);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularConfusion);
  }
}

TEST(CorrectTest, CorrectionRowMatchesFullCorrection) {
  Rng rng(3);
  ConfusionMatrix cm;
  for (int k = 0; k < 3; ++k) cm.rates.push_back({rng.uniform(0, 0.1), rng.uniform(0, 0.1)});
  auto obs = random_distribution(3, rng);
  auto full = correct(obs, cm);
  for (uint64_t bits : {0u, 5u, 7u}) {
    auto w = correction_row(cm, bits);
    double s = 0;
    for (size_t x = 0; x < obs.size(); ++x) s += w[x] * obs[x];
    EXPECT_NEAR(s, full[bits], 1e-12);
  }
}

TEST(RejectTest, Thresholds) {
  ConfusionMatrix ok = ConfusionMatrix::identity(3);
  EXPECT_FALSE(reject(ok).rejected);
  ConfusionMatrix bad = ok;
  bad.rates[1].p01 = 0.2;
  RejectVerdict v = reject(bad);
  EXPECT_TRUE(v.rejected);
  EXPECT_EQ(v.qubit_rejected, (std::vector<bool>{false, true, false}));
  ConfusionMatrix edge = ok;
  edge.rates[2].p10 = 0.15;
  EXPECT_FALSE(reject(edge).rejected);
}

TEST(ConditionNumberTest, SymmetricClosedForm) {
  for (double p : {0.0, 0.05, 0.1, 0.3}) {
    EXPECT_NEAR(condition_number({p, p}), 1.0 / (1.0 - 2.0 * p), 1e-12);
  }
}

TEST(ConditionNumberTest, MonotoneInMaxFlipRate) {
  for (double ratio : {1.0, 0.5, 0.0}) {
    double last = 0.0;
    for (int i = 0; i <= 45; ++i) {
      double r = 0.01 * i;
      double c = condition_number({r, ratio * r});
      EXPECT_GE(c, last - 1e-12) << r << " " << ratio;
      last = c;
    }
  }
}

}  // namespace
}  // namespace qassign
