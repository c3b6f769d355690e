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

#ifndef QASSIGN_KERNELS_H_
#define QASSIGN_KERNELS_H_

#include <span>

#include "qassign/gates.h"

// Density-matrix kernels on a row-major 2^n x 2^n buffer. Register position k
// is bit (n - 1 - k) of the basis index, so position 0 is the most
// significant bit.
namespace qassign::kernels {

// rho -> U rho U^dag on one position.
void apply_1q(cplx* rho, int n, int pos, const Mat2& u);
// rho -> U rho U^dag; pos_a is the high bit of U's basis.
void apply_2q(cplx* rho, int n, int pos_a, int pos_b, const Mat4& u);
// rho -> (1 - p) rho + p Tr_T(rho) (x) I_T / d_T on the positions T.
void depolarize(cplx* rho, int n, std::span<const int> positions, double p);
// rho -> (1 - p) rho + p Tr(rho) I / 2^n.
void depolarize_global(cplx* rho, int n, double p);

// psi -> U psi for state vectors.
void apply_1q_state(cplx* psi, int n, int pos, const Mat2& u);
void apply_2q_state(cplx* psi, int n, int pos_a, int pos_b, const Mat4& u);

// Serial dense implementations used as a cross-check: full Kronecker-product
// unitaries and the Pauli Kraus form of the depolarizing channel. O(8^n).
namespace reference {

void apply_1q(cplx* rho, int n, int pos, const Mat2& u);
void apply_2q(cplx* rho, int n, int pos_a, int pos_b, const Mat4& u);
void depolarize(cplx* rho, int n, std::span<const int> positions, double p);
void depolarize_global(cplx* rho, int n, double p);

}  // namespace reference
}  // namespace qassign::kernels

#endif  // QASSIGN_KERNELS_H_
