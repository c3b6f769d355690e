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

#ifndef QASSIGN_CIRCUIT_H_
#define QASSIGN_CIRCUIT_H_

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qassign/device_graph.h"

namespace qassign {

enum class GateKind {
  kRx,
  kRy,
  kRz,
  kPhasedXZ,
  kH,
  kX,
  kY,
  kZ,
  kCNOT,
  kSqrtISwap,
  kSqrtISwapInv,
  kSwap,
  kCZ,
};

int gate_arity(GateKind kind);
int gate_num_params(GateKind kind);
const char* gate_kind_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
// Kind of the inverse gate (angles are negated separately by inverse()).
GateKind inverse_kind(GateKind kind);

// Rx, Ry, Rz(t) = exp(-i t sigma / 2).
// PhasedXZ(a, b, c) = Rz(a) Rx(b) Rz(c); Rz(c) acts first.
// CNOT targets are (control, target). Two-qubit matrices use targets[0] as
// the more significant bit.
struct Gate {
  GateKind kind = GateKind::kH;
  std::array<double, 3> params{};
  std::array<QubitId, 2> targets{};

  static Gate one(GateKind kind, QubitId q, double a = 0, double b = 0, double c = 0);
  static Gate two(GateKind kind, QubitId q0, QubitId q1);

  int arity() const { return gate_arity(kind); }
  bool operator==(const Gate&) const = default;
};

struct Circuit {
  std::vector<QubitId> qubits;
  std::vector<Gate> gates;

  int num_qubits() const { return static_cast<int>(qubits.size()); }
  // Register position of a qubit id; throws if absent.
  int position(QubitId q) const;
  // Throws kInvalidArgument on unknown targets, repeated targets, non-finite
  // angles or two-qubit gates between non-adjacent line positions.
  void validate() const;
  bool operator==(const Circuit&) const = default;
};

// Logical line 0, 1, ..., n-1.
Circuit empty_line(int n);

struct GateCounts {
  std::map<QubitId, int64_t> n_i;
  std::map<Edge, int64_t> n_ij;

  int64_t total() const;
  bool operator==(const GateCounts&) const = default;
};

Gate inverse(const Gate& g);
Circuit invert(const Circuit& c);
// Gates of a followed by gates of b; b must act on the same register.
Circuit concat(const Circuit& a, const Circuit& b);
GateCounts gate_counts(const Circuit& c);
// Relabels c.qubits[k] -> a.path[k]. Throws kLengthMismatch.
Circuit assign(const Circuit& c, const Assignment& a);

// Native lowering: CNOT, CZ and SWAP become SQRT_ISWAP plus single-qubit
// gates. Single-qubit and SQRT_ISWAP(_INV) gates pass through.
void append_native_cnot(std::vector<Gate>& out, QubitId control, QubitId target);
void append_native_cz(std::vector<Gate>& out, QubitId a, QubitId b);
void append_native_swap(std::vector<Gate>& out, QubitId a, QubitId b);
// diag(1, 1, 1, exp(i phi)) up to global phase.
void append_native_cphase(std::vector<Gate>& out, QubitId a, QubitId b, double phi);
Circuit lower_to_native(const Circuit& c);
bool is_native(const Circuit& c);

Circuit build_ghz(int n);

// alpha|0> + beta|1> prepared on position 0 and moved `hops` positions to the
// right with two SQRT_ISWAP gates per hop. Throws kInvalidAmplitudes.
Circuit build_swapnet(int n, std::complex<double> alpha, std::complex<double> beta,
                      int hops);

enum class CliffordOp { kH, kS, kCZ };

struct CliffordGate {
  CliffordOp op = CliffordOp::kH;
  int q = 0;  // CZ acts on (q, q + 1)
  bool operator==(const CliffordGate&) const = default;
};

// Logical description of H^n C^dag P C H^n.
struct CliffordConjugation {
  int n = 0;
  std::vector<CliffordGate> clifford;  // C, first gate first
  std::vector<char> pauli;             // 'I', 'X', 'Y' or 'Z' per position
};

CliffordConjugation sample_clifford_conjugation(int n, uint64_t seed, int layers = -1);
Circuit build_clifford_conjugation(const CliffordConjugation& spec);
Circuit build_clifford_conjugation(int n, uint64_t seed);
// Deterministic output bitstring; bit of position k is bit (n - 1 - k).
uint64_t clifford_expected_bitstring(const CliffordConjugation& spec);

// X gates preparing |j> (position 0 holds the most significant bit) followed by
// a line QFT. Position p ends in (|0> + exp(-2 pi i j / 2^(p+1)) |1>)/sqrt 2.
Circuit build_qft_basis(int n, uint64_t j);

// `depth` layers alternating random PhasedXZ on every qubit and SQRT_ISWAP on
// alternating adjacent pairs.
Circuit build_random_circuit(int n, int depth, uint64_t seed);

// Random native circuit whose GateCounts equal those of `templ` exactly:
// single-qubit slots get random PhasedXZ rotations, two-qubit slots keep
// SQRT_ISWAP, and the slot order is shuffled.
Circuit build_count_matched_random(const Circuit& templ, uint64_t seed);

}  // namespace qassign

#endif  // QASSIGN_CIRCUIT_H_
