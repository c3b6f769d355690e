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

#include "qassign/simulator.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qassign/error.h"
#include "qassign/kernels.h"

namespace qassign {
namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw Error(ErrorCode::kInvalidArgument,
                "register size must lie in [1, " + std::to_string(kMaxQubits) + "]");
  }
}

// Gate with targets rewritten as register positions.
Gate to_positions(const Gate& g, const std::map<QubitId, int>& pos) {
  Gate r = g;
  r.targets[0] = pos.at(g.targets[0]);
  r.targets[1] = pos.at(g.targets[1]);
  return r;
}

}  // namespace

DensityMatrix::DensityMatrix(int n) : n_(n) {
  check_size(n);
  m_.assign(dim() * dim(), 0.0);
  m_[0] = 1.0;
}

DensityMatrix DensityMatrix::from_statevector(const std::vector<cplx>& psi) {
  int n = 0;
  while ((size_t{1} << n) < psi.size()) ++n;
  if ((size_t{1} << n) != psi.size()) {
    throw Error(ErrorCode::kInvalidArgument, "state length is not a power of two");
  }
  DensityMatrix rho(n);
  for (size_t r = 0; r < psi.size(); ++r)
    for (size_t c = 0; c < psi.size(); ++c) rho.at(r, c) = psi[r] * std::conj(psi[c]);
  return rho;
}

double DensityMatrix::trace() const {
  double t = 0;
  for (size_t i = 0; i < dim(); ++i) t += at(i, i).real();
  return t;
}

std::vector<double> DensityMatrix::diagonal() const {
  std::vector<double> d(dim());
  for (size_t i = 0; i < dim(); ++i) d[i] = at(i, i).real();
  return d;
}

double DensityMatrix::expectation(const std::vector<cplx>& psi) const {
  if (psi.size() != dim()) throw Error(ErrorCode::kLengthMismatch, "state size mismatch");
  cplx s = 0;
  for (size_t r = 0; r < dim(); ++r) {
    cplx row = 0;
    const cplx* m = m_.data() + r * dim();
    for (size_t c = 0; c < dim(); ++c) row += m[c] * psi[c];
    s += std::conj(psi[r]) * row;
  }
  return s.real();
}

double DensityMatrix::hermiticity_error() const {
  double err = 0;
  for (size_t r = 0; r < dim(); ++r)
    for (size_t c = r; c < dim(); ++c) err = std::max(err, std::abs(at(r, c) - std::conj(at(c, r))));
  return err;
}

Mat2 DensityMatrix::reduced_1q(int pos) const {
  const size_t mask = size_t{1} << (n_ - 1 - pos);
  Mat2 out{};
  for (size_t r = 0; r < dim(); ++r) {
    for (size_t c = 0; c < dim(); ++c) {
      if ((r & ~mask) != (c & ~mask)) continue;
      int br = (r & mask) ? 1 : 0, bc = (c & mask) ? 1 : 0;
      out[br * 2 + bc] += at(r, c);
    }
  }
  return out;
}

const Mat2* UnitaryErrors::find(GateKind kind, QubitId q) const {
  if (auto it = one_qubit_site.find({kind, q}); it != one_qubit_site.end()) return &it->second;
  if (auto it = one_qubit.find(kind); it != one_qubit.end()) return &it->second;
  return nullptr;
}

const Mat4* UnitaryErrors::find(GateKind kind, Edge e) const {
  if (auto it = two_qubit_site.find({kind, e}); it != two_qubit_site.end()) return &it->second;
  if (auto it = two_qubit.find(kind); it != two_qubit.end()) return &it->second;
  return nullptr;
}

void apply_gate(DensityMatrix& rho, const Gate& g) {
  const int n = rho.num_qubits();
  for (int k = 0; k < g.arity(); ++k) {
    if (g.targets[k] < 0 || g.targets[k] >= n) {
      throw Error(ErrorCode::kInvalidArgument, "gate target outside register");
    }
  }
  if (g.arity() == 1) {
    kernels::apply_1q(rho.data(), n, g.targets[0], matrix_1q(g));
  } else {
    kernels::apply_2q(rho.data(), n, g.targets[0], g.targets[1], matrix_2q(g));
  }
}

void apply_depolarizing(DensityMatrix& rho, double p, const std::vector<int>& positions) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "depolarizing probability outside [0,1]");
  }
  kernels::depolarize(rho.data(), rho.num_qubits(), positions, p);
}

void apply_global_depolarizing(DensityMatrix& rho, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "depolarizing probability outside [0,1]");
  }
  kernels::depolarize_global(rho.data(), rho.num_qubits(), p);
}

void evolve(DensityMatrix& rho, const Circuit& physical, const NoiseGraph& g,
            const NoiseModel& nm, Direction dir) {
  const int n = rho.num_qubits();
  if (physical.num_qubits() != n) {
    throw Error(ErrorCode::kLengthMismatch, "circuit register differs from state size");
  }
  std::map<QubitId, int> pos;
  for (int k = 0; k < n; ++k) pos[physical.qubits[k]] = k;

  for (const Gate& gate : physical.gates) {
    Gate local = to_positions(gate, pos);
    const bool one = gate.arity() == 1;
    const Edge edge = Edge::of(gate.targets[0], gate.targets[1]);

    if (nm.mode == NoiseMode::kUnitaryAdjointError && dir == Direction::kAdjoint) {
      GateKind key = inverse_kind(gate.kind);
      if (one) {
        if (const Mat2* w = nm.unitary.find(key, gate.targets[0])) {
          kernels::apply_1q(rho.data(), n, local.targets[0], adjoint(*w));
        }
      } else if (const Mat4* w = nm.unitary.find(key, edge)) {
        kernels::apply_2q(rho.data(), n, local.targets[0], local.targets[1], adjoint(*w));
      }
    }

    apply_gate(rho, local);

    switch (nm.mode) {
      case NoiseMode::kNone:
        break;
      case NoiseMode::kLocalDepolarizing:
        if (one) {
          apply_depolarizing(rho, g.eps(gate.targets[0]), {local.targets[0]});
        } else {
          apply_depolarizing(rho, g.eta(gate.targets[0], gate.targets[1]),
                             {local.targets[0], local.targets[1]});
        }
        break;
      case NoiseMode::kGlobalDepolarizing:
        apply_global_depolarizing(
            rho, one ? g.eps(gate.targets[0]) : g.eta(gate.targets[0], gate.targets[1]));
        break;
      case NoiseMode::kUnitaryAdjointError:
        if (dir == Direction::kForward) {
          if (one) {
            if (const Mat2* w = nm.unitary.find(gate.kind, gate.targets[0])) {
              kernels::apply_1q(rho.data(), n, local.targets[0], *w);
            }
          } else if (const Mat4* w = nm.unitary.find(gate.kind, edge)) {
            kernels::apply_2q(rho.data(), n, local.targets[0], local.targets[1], *w);
          }
        }
        break;
    }
  }
}

DensityMatrix run(const Circuit& c, const Assignment& a, const NoiseGraph& g,
                  const NoiseModel& nm) {
  g.check(a);
  Circuit physical = assign(c, a);
  physical.validate();
  DensityMatrix rho(physical.num_qubits());
  evolve(rho, physical, g, nm, Direction::kForward);
  return rho;
}

std::vector<cplx> simulate_statevector(const Circuit& c) {
  const int n = c.num_qubits();
  check_size(n);
  std::map<QubitId, int> pos;
  for (int k = 0; k < n; ++k) pos[c.qubits[k]] = k;
  std::vector<cplx> psi(size_t{1} << n, 0.0);
  psi[0] = 1.0;
  for (const Gate& gate : c.gates) {
    Gate local = to_positions(gate, pos);
    if (gate.arity() == 1) {
      kernels::apply_1q_state(psi.data(), n, local.targets[0], matrix_1q(local));
    } else {
      kernels::apply_2q_state(psi.data(), n, local.targets[0], local.targets[1],
                              matrix_2q(local));
    }
  }
  return psi;
}

std::vector<double> measure_probs(const DensityMatrix& rho,
                                  const std::optional<ConfusionMatrix>& confusion) {
  std::vector<double> p = rho.diagonal();
  if (!confusion) return p;
  if (confusion->num_qubits() != rho.num_qubits()) {
    throw Error(ErrorCode::kLengthMismatch, "confusion size differs from register");
  }
  return apply_confusion(p, *confusion);
}

std::vector<uint64_t> sample_bitstrings(const std::vector<double>& probs, uint64_t t,
                                        Rng& rng) {
  if (probs.empty()) throw Error(ErrorCode::kNonNormalized, "empty distribution");
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    // Round-off from the simulator can leave tiny negative entries.
    if (probs[i] < -1e-12 || !std::isfinite(probs[i])) {
      throw Error(ErrorCode::kNonNormalized, "distribution has a negative entry");
    }
    acc += std::max(0.0, probs[i]);
    cdf[i] = acc;
  }
  if (std::abs(acc - 1.0) > 1e-9) {
    throw Error(ErrorCode::kNonNormalized,
                "distribution sums to " + std::to_string(acc) + ", expected 1");
  }
  std::vector<uint64_t> counts(probs.size(), 0);
  for (uint64_t s = 0; s < t; ++s) {
    double u = rng.uniform() * acc;
    size_t k = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    // Skip zero-probability tail entries that share the final cdf value.
    if (k >= cdf.size()) k = cdf.size() - 1;
    while (k > 0 && probs[k] <= 0.0) --k;
    ++counts[k];
  }
  return counts;
}

}  // namespace qassign
