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

#ifndef QASSIGN_DFE_H_
#define QASSIGN_DFE_H_

#include <complex>
#include <vector>

#include "qassign/metrics.h"
#include "qassign/rng.h"
#include "qassign/simulator.h"

namespace qassign {

// Measurement basis of one position: Z, or the equatorial observable
// cos(phi) X + sin(phi) Y, read out by Rz(-phi) then H.
struct QubitBasis {
  bool z_basis = true;
  double phi = 0.0;
};

struct MeasurementSetting {
  std::vector<QubitBasis> bases;
};

// Supplies outcome frequencies for a measurement setting.
class ShotSource {
 public:
  virtual ~ShotSource() = default;
  // Frequencies over 2^n outcomes, summing to 1.
  std::vector<double> frequencies(const MeasurementSetting& s) {
    ++settings_used_;
    return measure(s);
  }
  // Shots per setting; 0 means exact expectations.
  virtual uint64_t shots() const = 0;
  size_t settings_used() const { return settings_used_; }

 protected:
  virtual std::vector<double> measure(const MeasurementSetting& s) = 0;

 private:
  size_t settings_used_ = 0;
};

// Measures a fixed density matrix. Each setting draws from its own substream.
class DensityMatrixSource : public ShotSource {
 public:
  DensityMatrixSource(DensityMatrix rho, uint64_t shots, Rng rng)
      : rho_(std::move(rho)), shots_(shots), rng_(rng) {}
  uint64_t shots() const override { return shots_; }

 protected:
  std::vector<double> measure(const MeasurementSetting& s) override;

 private:
  DensityMatrix rho_;
  uint64_t shots_;
  Rng rng_;
  uint64_t draws_ = 0;
};

// f_Z + f_XY from n + 1 settings (one Z setting, n equatorial settings).
Estimate ghz_dfe(ShotSource& source, int n);

// Single setting: position p measured along phi_p = -2 pi j / 2^(p+1).
Estimate qft_dfe(ShotSource& source, int n, uint64_t j);

// Projective overlap of one position with alpha|0> + beta|1>.
Estimate swapnet_fidelity(const DensityMatrix& rho, int pos, std::complex<double> alpha,
                          std::complex<double> beta, uint64_t shots, Rng& rng);

// Probability of the predicted computational-basis outcome.
Estimate clifford_fidelity(ShotSource& source, int n, uint64_t expected_bits);

// In-place Walsh-Hadamard transform (unnormalised); size must be a power of 2.
void walsh_hadamard(std::vector<double>& v);

}  // namespace qassign

#endif  // QASSIGN_DFE_H_
