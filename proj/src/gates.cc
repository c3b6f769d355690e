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

#include "qassign/gates.h"

#include <cmath>
#include <numbers>

#include "qassign/error.h"

namespace qassign {
namespace {

constexpr cplx kI{0.0, 1.0};

Mat2 rx(double t) {
  double c = std::cos(t / 2), s = std::sin(t / 2);
  return {c, -kI * s, -kI * s, c};
}

Mat2 ry(double t) {
  double c = std::cos(t / 2), s = std::sin(t / 2);
  return {c, -s, s, c};
}

Mat2 rz(double t) { return {std::exp(-kI * (t / 2)), 0.0, 0.0, std::exp(kI * (t / 2))}; }

}  // namespace

Mat2 multiply(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i * 2 + j] = a[i * 2] * b[j] + a[i * 2 + 1] * b[2 + j];
  return r;
}

Mat4 multiply(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0;
      for (int k = 0; k < 4; ++k) s += a[i * 4 + k] * b[k * 4 + j];
      r[i * 4 + j] = s;
    }
  return r;
}

Mat2 adjoint(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

Mat4 adjoint(const Mat4& m) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i * 4 + j] = std::conj(m[j * 4 + i]);
  return r;
}

Mat2 matrix_1q(const Gate& g) {
  const double s2 = std::numbers::sqrt2 / 2;
  switch (g.kind) {
    case GateKind::kRx:
      return rx(g.params[0]);
    case GateKind::kRy:
      return ry(g.params[0]);
    case GateKind::kRz:
      return rz(g.params[0]);
    case GateKind::kPhasedXZ:
      return multiply(rz(g.params[0]), multiply(rx(g.params[1]), rz(g.params[2])));
    case GateKind::kH:
      return {s2, s2, s2, -s2};
    case GateKind::kX:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::kY:
      return {0.0, -kI, kI, 0.0};
    case GateKind::kZ:
      return {1.0, 0.0, 0.0, -1.0};
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("not a one-qubit gate: ") + gate_kind_name(g.kind));
  }
}

Mat4 matrix_2q(const Gate& g) {
  Mat4 m{};
  const double s2 = std::numbers::sqrt2 / 2;
  switch (g.kind) {
    case GateKind::kCNOT:
      m[0] = m[5] = m[11] = m[14] = 1.0;
      return m;
    case GateKind::kSqrtISwap:
    case GateKind::kSqrtISwapInv: {
      cplx off = g.kind == GateKind::kSqrtISwap ? kI * s2 : -kI * s2;
      m[0] = m[15] = 1.0;
      m[5] = m[10] = s2;
      m[6] = m[9] = off;
      return m;
    }
    case GateKind::kSwap:
      m[0] = m[6] = m[9] = m[15] = 1.0;
      return m;
    case GateKind::kCZ:
      m[0] = m[5] = m[10] = 1.0;
      m[15] = -1.0;
      return m;
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("not a two-qubit gate: ") + gate_kind_name(g.kind));
  }
}

}  // namespace qassign
