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

#include "qassign/circuit.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qassign/error.h"
#include "qassign/rng.h"

namespace qassign {
namespace {

constexpr double kPi = std::numbers::pi;

struct KindInfo {
  GateKind kind;
  const char* name;
  int arity;
  int params;
};

constexpr KindInfo kKinds[] = {
    {GateKind::kRx, "Rx", 1, 1},
    {GateKind::kRy, "Ry", 1, 1},
    {GateKind::kRz, "Rz", 1, 1},
    {GateKind::kPhasedXZ, "PhasedXZ", 1, 3},
    {GateKind::kH, "H", 1, 0},
    {GateKind::kX, "X", 1, 0},
    {GateKind::kY, "Y", 1, 0},
    {GateKind::kZ, "Z", 1, 0},
    {GateKind::kCNOT, "CNOT", 2, 0},
    {GateKind::kSqrtISwap, "SQRT_ISWAP", 2, 0},
    {GateKind::kSqrtISwapInv, "SQRT_ISWAP_INV", 2, 0},
    {GateKind::kSwap, "SWAP", 2, 0},
    {GateKind::kCZ, "CZ", 2, 0},
};

const KindInfo& info(GateKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k;
  throw Error(ErrorCode::kInvalidArgument, "unknown gate kind");
}

void check_n(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
}

}  // namespace

int gate_arity(GateKind kind) { return info(kind).arity; }
int gate_num_params(GateKind kind) { return info(kind).params; }
const char* gate_kind_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto& k : kKinds)
    if (name == k.name) return k.kind;
  return std::nullopt;
}

GateKind inverse_kind(GateKind kind) {
  if (kind == GateKind::kSqrtISwap) return GateKind::kSqrtISwapInv;
  if (kind == GateKind::kSqrtISwapInv) return GateKind::kSqrtISwap;
  return kind;
}

Gate Gate::one(GateKind kind, QubitId q, double a, double b, double c) {
  if (gate_arity(kind) != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(gate_kind_name(kind)) + " is not a one-qubit gate");
  }
  Gate g;
  g.kind = kind;
  g.params = {a, b, c};
  g.targets = {q, q};
  return g;
}

Gate Gate::two(GateKind kind, QubitId q0, QubitId q1) {
  if (gate_arity(kind) != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(gate_kind_name(kind)) + " is not a two-qubit gate");
  }
  Gate g;
  g.kind = kind;
  g.targets = {q0, q1};
  return g;
}

int Circuit::position(QubitId q) const {
  auto it = std::find(qubits.begin(), qubits.end(), q);
  if (it == qubits.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "qubit " + std::to_string(q) + " not in circuit register");
  }
  return static_cast<int>(it - qubits.begin());
}

void Circuit::validate() const {
  std::vector<QubitId> sorted = qubits;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "circuit register has repeated qubits");
  }
  for (const Gate& g : gates) {
    for (double p : g.params) {
      if (!std::isfinite(p)) throw Error(ErrorCode::kInvalidArgument, "non-finite angle");
    }
    int p0 = position(g.targets[0]);
    if (g.arity() == 2) {
      int p1 = position(g.targets[1]);
      if (p0 == p1) throw Error(ErrorCode::kInvalidArgument, "repeated gate target");
      if (std::abs(p0 - p1) != 1) {
        throw Error(ErrorCode::kInvalidArgument,
                    std::string(gate_kind_name(g.kind)) +
                        " acts on non-adjacent line positions");
      }
    }
  }
}

Circuit empty_line(int n) {
  Circuit c;
  for (int i = 0; i < n; ++i) c.qubits.push_back(i);
  return c;
}

int64_t GateCounts::total() const {
  int64_t t = 0;
  for (const auto& [v, k] : n_i) t += k;
  for (const auto& [e, k] : n_ij) t += k;
  return t;
}

Gate inverse(const Gate& g) {
  Gate r = g;
  r.kind = inverse_kind(g.kind);
  switch (g.kind) {
    case GateKind::kRx:
    case GateKind::kRy:
    case GateKind::kRz:
      r.params[0] = -g.params[0];
      break;
    case GateKind::kPhasedXZ:
      r.params = {-g.params[2], -g.params[1], -g.params[0]};
      break;
    default:
      break;
  }
  return r;
}

Circuit invert(const Circuit& c) {
  Circuit r;
  r.qubits = c.qubits;
  r.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) r.gates.push_back(inverse(*it));
  return r;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  if (a.qubits != b.qubits) {
    throw Error(ErrorCode::kInvalidArgument, "concat: registers differ");
  }
  Circuit r = a;
  r.gates.insert(r.gates.end(), b.gates.begin(), b.gates.end());
  return r;
}

GateCounts gate_counts(const Circuit& c) {
  GateCounts counts;
  for (const Gate& g : c.gates) {
    if (g.arity() == 1) {
      ++counts.n_i[g.targets[0]];
    } else {
      ++counts.n_ij[Edge::of(g.targets[0], g.targets[1])];
    }
  }
  return counts;
}

Circuit assign(const Circuit& c, const Assignment& a) {
  if (a.path.size() != c.qubits.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "assignment has " + std::to_string(a.path.size()) +
                    " qubits, circuit has " + std::to_string(c.qubits.size()));
  }
  std::map<QubitId, QubitId> relabel;
  for (size_t k = 0; k < c.qubits.size(); ++k) relabel[c.qubits[k]] = a.path[k];
  Circuit r;
  r.qubits = a.path;
  r.gates = c.gates;
  for (Gate& g : r.gates) {
    g.targets[0] = relabel.at(g.targets[0]);
    g.targets[1] = relabel.at(g.targets[1]);
  }
  return r;
}

void append_native_cnot(std::vector<Gate>& out, QubitId control, QubitId target) {
  out.push_back(Gate::one(GateKind::kPhasedXZ, control, kPi / 2, kPi / 2, -kPi / 2));
  out.push_back(Gate::one(GateKind::kPhasedXZ, target, 0, -kPi / 2, 0));
  out.push_back(Gate::two(GateKind::kSqrtISwap, control, target));
  out.push_back(Gate::one(GateKind::kPhasedXZ, target, 0, kPi, 0));
  out.push_back(Gate::two(GateKind::kSqrtISwap, control, target));
  out.push_back(Gate::one(GateKind::kPhasedXZ, control, 0, kPi / 2, kPi / 2));
}

void append_native_cz(std::vector<Gate>& out, QubitId a, QubitId b) {
  out.push_back(Gate::one(GateKind::kH, b));
  append_native_cnot(out, a, b);
  out.push_back(Gate::one(GateKind::kH, b));
}

void append_native_swap(std::vector<Gate>& out, QubitId a, QubitId b) {
  append_native_cnot(out, a, b);
  append_native_cnot(out, b, a);
  append_native_cnot(out, a, b);
}

void append_native_cphase(std::vector<Gate>& out, QubitId a, QubitId b, double phi) {
  out.push_back(Gate::one(GateKind::kRz, a, phi / 2));
  append_native_cnot(out, a, b);
  out.push_back(Gate::one(GateKind::kRz, b, -phi / 2));
  append_native_cnot(out, a, b);
  out.push_back(Gate::one(GateKind::kRz, b, phi / 2));
}

Circuit lower_to_native(const Circuit& c) {
  Circuit r;
  r.qubits = c.qubits;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::kCNOT:
        append_native_cnot(r.gates, g.targets[0], g.targets[1]);
        break;
      case GateKind::kCZ:
        append_native_cz(r.gates, g.targets[0], g.targets[1]);
        break;
      case GateKind::kSwap:
        append_native_swap(r.gates, g.targets[0], g.targets[1]);
        break;
      default:
        r.gates.push_back(g);
    }
  }
  return r;
}

bool is_native(const Circuit& c) {
  return std::all_of(c.gates.begin(), c.gates.end(), [](const Gate& g) {
    return g.arity() == 1 || g.kind == GateKind::kSqrtISwap ||
           g.kind == GateKind::kSqrtISwapInv;
  });
}

Circuit build_ghz(int n) {
  check_n(n);
  Circuit c = empty_line(n);
  c.gates.push_back(Gate::one(GateKind::kH, 0));
  for (int q = 0; q + 1 < n; ++q) append_native_cnot(c.gates, q, q + 1);
  return c;
}

Circuit build_swapnet(int n, std::complex<double> alpha, std::complex<double> beta,
                      int hops) {
  check_n(n);
  if (hops < 0 || hops > n - 1) {
    throw Error(ErrorCode::kInvalidArgument, "hops must lie in [0, n-1]");
  }
  double norm = std::norm(alpha) + std::norm(beta);
  if (!(std::abs(norm - 1.0) <= 1e-9)) {
    throw Error(ErrorCode::kInvalidAmplitudes,
                "|alpha|^2 + |beta|^2 = " + std::to_string(norm) + ", expected 1");
  }
  Circuit c = empty_line(n);
  double theta = 2.0 * std::atan2(std::abs(beta), std::abs(alpha));
  // Each iSWAP hop multiplies the |1> amplitude by i; pre-rotate it away.
  double phase = std::arg(beta) - std::arg(alpha) - hops * kPi / 2;
  if (std::abs(beta) == 0.0) phase = 0.0;
  c.gates.push_back(Gate::one(GateKind::kRy, 0, theta));
  c.gates.push_back(Gate::one(GateKind::kRz, 0, phase));
  for (int h = 0; h < hops; ++h) {
    c.gates.push_back(Gate::two(GateKind::kSqrtISwap, h, h + 1));
    c.gates.push_back(Gate::two(GateKind::kSqrtISwap, h, h + 1));
  }
  return c;
}

CliffordConjugation sample_clifford_conjugation(int n, uint64_t seed, int layers) {
  check_n(n);
  if (layers < 0) layers = n;
  Rng rng(seed, 0, "clifford_conjugation");
  CliffordConjugation spec;
  spec.n = n;
  for (int layer = 0; layer < layers; ++layer) {
    for (int q = 0; q < n; ++q) {
      uint64_t pick = rng.below(3);
      if (pick == 1) spec.clifford.push_back({CliffordOp::kH, q});
      if (pick == 2) spec.clifford.push_back({CliffordOp::kS, q});
    }
    for (int q = layer % 2; q + 1 < n; q += 2) {
      if (rng.below(2)) spec.clifford.push_back({CliffordOp::kCZ, q});
    }
  }
  static constexpr char kPaulis[] = {'I', 'X', 'Y', 'Z'};
  for (int q = 0; q < n; ++q) spec.pauli.push_back(kPaulis[rng.below(4)]);
  return spec;
}

Circuit build_clifford_conjugation(const CliffordConjugation& spec) {
  check_n(spec.n);
  if (static_cast<int>(spec.pauli.size()) != spec.n) {
    throw Error(ErrorCode::kLengthMismatch, "Pauli string length differs from n");
  }
  Circuit c = empty_line(spec.n);
  auto emit = [&](const CliffordGate& g, bool dagger) {
    if (g.q < 0 || g.q >= spec.n || (g.op == CliffordOp::kCZ && g.q + 1 >= spec.n)) {
      throw Error(ErrorCode::kInvalidArgument, "Clifford gate outside register");
    }
    switch (g.op) {
      case CliffordOp::kH:
        c.gates.push_back(Gate::one(GateKind::kH, g.q));
        break;
      case CliffordOp::kS:
        c.gates.push_back(Gate::one(GateKind::kRz, g.q, dagger ? -kPi / 2 : kPi / 2));
        break;
      case CliffordOp::kCZ:
        append_native_cz(c.gates, g.q, g.q + 1);
        break;
    }
  };
  for (int q = 0; q < spec.n; ++q) c.gates.push_back(Gate::one(GateKind::kH, q));
  for (const auto& g : spec.clifford) emit(g, false);
  for (int q = 0; q < spec.n; ++q) {
    switch (spec.pauli[q]) {
      case 'I':
        break;
      case 'X':
        c.gates.push_back(Gate::one(GateKind::kX, q));
        break;
      case 'Y':
        c.gates.push_back(Gate::one(GateKind::kY, q));
        break;
      case 'Z':
        c.gates.push_back(Gate::one(GateKind::kZ, q));
        break;
      default:
        throw Error(ErrorCode::kInvalidArgument, "Pauli letters must be I, X, Y or Z");
    }
  }
  for (auto it = spec.clifford.rbegin(); it != spec.clifford.rend(); ++it) emit(*it, true);
  for (int q = 0; q < spec.n; ++q) c.gates.push_back(Gate::one(GateKind::kH, q));
  return c;
}

Circuit build_clifford_conjugation(int n, uint64_t seed) {
  return build_clifford_conjugation(sample_clifford_conjugation(n, seed));
}

uint64_t clifford_expected_bitstring(const CliffordConjugation& spec) {
  // Heisenberg-propagate P through C (last gate first) to get C^dag P C up to
  // sign. H^n C^dag P C H^n |0> is then the basis state given by its Z part.
  std::vector<int> x(spec.n), z(spec.n);
  for (int q = 0; q < spec.n; ++q) {
    char p = spec.pauli.at(q);
    x[q] = (p == 'X' || p == 'Y');
    z[q] = (p == 'Z' || p == 'Y');
  }
  for (auto it = spec.clifford.rbegin(); it != spec.clifford.rend(); ++it) {
    int q = it->q;
    switch (it->op) {
      case CliffordOp::kH:
        std::swap(x[q], z[q]);
        break;
      case CliffordOp::kS:
        z[q] ^= x[q];
        break;
      case CliffordOp::kCZ:
        z[q] ^= x[q + 1];
        z[q + 1] ^= x[q];
        break;
    }
  }
  uint64_t bits = 0;
  for (int q = 0; q < spec.n; ++q) {
    if (z[q]) bits |= uint64_t{1} << (spec.n - 1 - q);
  }
  return bits;
}

Circuit build_qft_basis(int n, uint64_t j) {
  check_n(n);
  if (n >= 63 || j >= (uint64_t{1} << n)) {
    throw Error(ErrorCode::kInvalidArgument, "j must lie in [0, 2^n)");
  }
  Circuit c = empty_line(n);
  for (int p = 0; p < n; ++p) {
    if ((j >> (n - 1 - p)) & 1) c.gates.push_back(Gate::one(GateKind::kX, p));
  }
  // Round r: the qubit at position 0 holds bit n-1-r. It is Hadamarded, then
  // walked right, picking up a controlled phase from each lower bit it passes,
  // and comes to rest at position n-1-r.
  for (int r = 0; r < n; ++r) {
    int width = n - r;
    c.gates.push_back(Gate::one(GateKind::kH, 0));
    for (int m = 1; m < width; ++m) {
      append_native_cphase(c.gates, m - 1, m, -kPi / std::ldexp(1.0, m));
      append_native_swap(c.gates, m - 1, m);
    }
  }
  return c;
}

Circuit build_random_circuit(int n, int depth, uint64_t seed) {
  check_n(n);
  if (depth < 0) throw Error(ErrorCode::kInvalidArgument, "depth must be >= 0");
  Rng rng(seed, 0, "random_circuit");
  Circuit c = empty_line(n);
  for (int layer = 0; layer < depth; ++layer) {
    if (layer % 2 == 0) {
      for (int q = 0; q < n; ++q) {
        double a = rng.uniform(-kPi, kPi);
        double b = rng.uniform(-kPi, kPi);
        double cc = rng.uniform(-kPi, kPi);
        c.gates.push_back(Gate::one(GateKind::kPhasedXZ, q, a, b, cc));
      }
    } else {
      int offset = (layer / 2) % 2;
      for (int q = offset; q + 1 < n; q += 2) {
        c.gates.push_back(Gate::two(GateKind::kSqrtISwap, q, q + 1));
      }
    }
  }
  return c;
}

Circuit build_count_matched_random(const Circuit& templ, uint64_t seed) {
  Rng rng(seed, 0, "count_matched_random");
  std::vector<Gate> slots;
  slots.reserve(templ.gates.size());
  for (const Gate& g : templ.gates) {
    if (g.arity() == 1) {
      slots.push_back(Gate::one(GateKind::kPhasedXZ, g.targets[0]));
    } else {
      slots.push_back(Gate::two(GateKind::kSqrtISwap, g.targets[0], g.targets[1]));
    }
  }
  rng.shuffle(slots);
  for (Gate& g : slots) {
    if (g.kind == GateKind::kPhasedXZ) {
      g.params = {rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi)};
    }
  }
  Circuit c;
  c.qubits = templ.qubits;
  c.gates = std::move(slots);
  return c;
}

}  // namespace qassign
