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

#ifndef QASSIGN_GATES_H_
#define QASSIGN_GATES_H_

#include <array>
#include <complex>

#include "qassign/circuit.h"

namespace qassign {

using cplx = std::complex<double>;
// Row-major 2x2 and 4x4 matrices.
using Mat2 = std::array<cplx, 4>;
using Mat4 = std::array<cplx, 16>;

Mat2 matrix_1q(const Gate& g);
// Basis |t0 t1> with targets[0] as the high bit.
Mat4 matrix_2q(const Gate& g);

Mat2 adjoint(const Mat2& m);
Mat4 adjoint(const Mat4& m);
Mat2 multiply(const Mat2& a, const Mat2& b);
Mat4 multiply(const Mat4& a, const Mat4& b);

}  // namespace qassign

#endif  // QASSIGN_GATES_H_
