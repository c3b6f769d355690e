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

#ifndef QASSIGN_SIMULATOR_H_
#define QASSIGN_SIMULATOR_H_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qassign/circuit.h"
#include "qassign/device_graph.h"
#include "qassign/gates.h"
#include "qassign/readout.h"
#include "qassign/rng.h"

namespace qassign {

inline constexpr int kMaxQubits = 12;

class DensityMatrix {
 public:
  // |0...0><0...0| on n qubits.
  explicit DensityMatrix(int n);
  static DensityMatrix from_statevector(const std::vector<cplx>& psi);

  int num_qubits() const { return n_; }
  size_t dim() const { return size_t{1} << n_; }
  cplx* data() { return m_.data(); }
  const cplx* data() const { return m_.data(); }
  cplx at(size_t r, size_t c) const { return m_[r * dim() + c]; }
  cplx& at(size_t r, size_t c) { return m_[r * dim() + c]; }

  double trace() const;
  std::vector<double> diagonal() const;
  // <psi|rho|psi>, real part.
  double expectation(const std::vector<cplx>& psi) const;
  // max |rho - rho^dag| entry.
  double hermiticity_error() const;
  // Reduced state of one position, row-major 2x2.
  Mat2 reduced_1q(int pos) const;

 private:
  int n_;
  std::vector<cplx> m_;
};

enum class NoiseMode { kNone, kLocalDepolarizing, kGlobalDepolarizing, kUnitaryAdjointError };

// Fixed perturbation unitaries W for the adjoint-error model. Site entries
// override kind entries. Two-qubit W uses the gate's target order.
struct UnitaryErrors {
  std::map<GateKind, Mat2> one_qubit;
  std::map<GateKind, Mat4> two_qubit;
  std::map<std::pair<GateKind, QubitId>, Mat2> one_qubit_site;
  std::map<std::pair<GateKind, Edge>, Mat4> two_qubit_site;

  const Mat2* find(GateKind kind, QubitId q) const;
  const Mat4* find(GateKind kind, Edge e) const;
};

struct NoiseModel {
  NoiseMode mode = NoiseMode::kNone;
  UnitaryErrors unitary;

  static NoiseModel none() { return {}; }
  static NoiseModel local() { return {NoiseMode::kLocalDepolarizing, {}}; }
  static NoiseModel global() { return {NoiseMode::kGlobalDepolarizing, {}}; }
  static NoiseModel adjoint_error(UnitaryErrors w) {
    return {NoiseMode::kUnitaryAdjointError, std::move(w)};
  }
};

enum class Direction { kForward, kAdjoint };

// Gate targets are register positions.
void apply_gate(DensityMatrix& rho, const Gate& g);
void apply_depolarizing(DensityMatrix& rho, double p, const std::vector<int>& positions);
void apply_global_depolarizing(DensityMatrix& rho, double p);

// Applies a physical circuit (targets are qubit ids of c.qubits) with noise
// attached after each gate. In kAdjoint direction the circuit must be the
// inverse of a forward circuit; unitary errors are then undone as W^dag
// before each gate, which makes the noisy adjoint exactly the inverse of the
// noisy forward circuit.
void evolve(DensityMatrix& rho, const Circuit& physical, const NoiseGraph& g,
            const NoiseModel& nm, Direction dir = Direction::kForward);

// Validates the assignment and runs assign(c, a) from |0...0>.
DensityMatrix run(const Circuit& c, const Assignment& a, const NoiseGraph& g,
                  const NoiseModel& nm);

// Noiseless output state of c from |0...0>.
std::vector<cplx> simulate_statevector(const Circuit& c);

// Diagonal of rho, optionally pushed through per-position readout confusion.
std::vector<double> measure_probs(const DensityMatrix& rho,
                                  const std::optional<ConfusionMatrix>& confusion);

// t categorical draws; dense counts indexed by outcome. Throws kNonNormalized.
std::vector<uint64_t> sample_bitstrings(const std::vector<double>& probs, uint64_t t,
                                        Rng& rng);

}  // namespace qassign

#endif  // QASSIGN_SIMULATOR_H_
