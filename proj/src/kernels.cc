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

#include "qassign/kernels.h"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace qassign::kernels {
namespace {

// Parallel regions only pay off once the matrix has a few thousand entries.
constexpr int64_t kParallelDim = 64;

inline uint64_t insert_zero(uint64_t i, int bit) {
  uint64_t low = i & ((uint64_t{1} << bit) - 1);
  return ((i >> bit) << (bit + 1)) | low;
}

inline int bit_of(int n, int pos) { return n - 1 - pos; }

}  // namespace

void apply_1q(cplx* rho, int n, int pos, const Mat2& u) {
  const int64_t dim = int64_t{1} << n;
  const int bit = bit_of(n, pos);
  const uint64_t mask = uint64_t{1} << bit;
  const cplx u00 = u[0], u01 = u[1], u10 = u[2], u11 = u[3];
  const cplx c00 = std::conj(u00), c01 = std::conj(u01);
  const cplx c10 = std::conj(u10), c11 = std::conj(u11);

#pragma omp parallel for schedule(static) if (dim >= kParallelDim)
  for (int64_t i = 0; i < dim / 2; ++i) {
    uint64_t r0 = insert_zero(i, bit), r1 = r0 | mask;
    cplx* a = rho + r0 * dim;
    cplx* b = rho + r1 * dim;
    for (int64_t c = 0; c < dim; ++c) {
      cplx x = a[c], y = b[c];
      a[c] = u00 * x + u01 * y;
      b[c] = u10 * x + u11 * y;
    }
  }

#pragma omp parallel for schedule(static) if (dim >= kParallelDim)
  for (int64_t r = 0; r < dim; ++r) {
    cplx* row = rho + r * dim;
    for (int64_t j = 0; j < dim / 2; ++j) {
      uint64_t k0 = insert_zero(j, bit), k1 = k0 | mask;
      cplx x = row[k0], y = row[k1];
      row[k0] = x * c00 + y * c01;
      row[k1] = x * c10 + y * c11;
    }
  }
}

void apply_2q(cplx* rho, int n, int pos_a, int pos_b, const Mat4& u) {
  const int64_t dim = int64_t{1} << n;
  const int ba = bit_of(n, pos_a), bb = bit_of(n, pos_b);
  const int lo = std::min(ba, bb), hi = std::max(ba, bb);
  const uint64_t ma = uint64_t{1} << ba, mb = uint64_t{1} << bb;
  const uint64_t offs[4] = {0, mb, ma, ma | mb};
  Mat4 uc;
  for (int k = 0; k < 16; ++k) uc[k] = std::conj(u[k]);

#pragma omp parallel for schedule(static) if (dim >= kParallelDim)
  for (int64_t i = 0; i < dim / 4; ++i) {
    uint64_t base = insert_zero(insert_zero(i, lo), hi);
    cplx* rows[4];
    for (int k = 0; k < 4; ++k) rows[k] = rho + (base | offs[k]) * dim;
    for (int64_t c = 0; c < dim; ++c) {
      cplx v[4] = {rows[0][c], rows[1][c], rows[2][c], rows[3][c]};
      for (int k = 0; k < 4; ++k) {
        rows[k][c] = u[k * 4] * v[0] + u[k * 4 + 1] * v[1] + u[k * 4 + 2] * v[2] +
                     u[k * 4 + 3] * v[3];
      }
    }
  }

#pragma omp parallel for schedule(static) if (dim >= kParallelDim)
  for (int64_t r = 0; r < dim; ++r) {
    cplx* row = rho + r * dim;
    for (int64_t j = 0; j < dim / 4; ++j) {
      uint64_t base = insert_zero(insert_zero(j, lo), hi);
      cplx v[4];
      for (int k = 0; k < 4; ++k) v[k] = row[base | offs[k]];
      for (int k = 0; k < 4; ++k) {
        row[base | offs[k]] = v[0] * uc[k * 4] + v[1] * uc[k * 4 + 1] +
                              v[2] * uc[k * 4 + 2] + v[3] * uc[k * 4 + 3];
      }
    }
  }
}

void depolarize(cplx* rho, int n, std::span<const int> positions, double p) {
  if (p == 0.0 || positions.empty()) return;
  const int64_t dim = int64_t{1} << n;
  const int m = static_cast<int>(positions.size());
  const int64_t dt = int64_t{1} << m;
  std::vector<int> bits;
  for (int pos : positions) bits.push_back(bit_of(n, pos));
  std::vector<int> sorted_bits = bits;
  std::sort(sorted_bits.begin(), sorted_bits.end());
  std::vector<uint64_t> offs(dt, 0);
  for (int64_t t = 0; t < dt; ++t) {
    for (int k = 0; k < m; ++k) {
      if ((t >> k) & 1) offs[t] |= uint64_t{1} << bits[k];
    }
  }
  auto spread = [&](uint64_t i) {
    for (int b : sorted_bits) i = insert_zero(i, b);
    return i;
  };
  const double keep = 1.0 - p;
  const double mix = p / static_cast<double>(dt);
  const int64_t rest = dim / dt;

#pragma omp parallel for schedule(static) if (dim >= kParallelDim)
  for (int64_t ir = 0; ir < rest; ++ir) {
    uint64_t i0 = spread(ir);
    for (int64_t jr = 0; jr < rest; ++jr) {
      uint64_t j0 = spread(jr);
      cplx s = 0;
      for (int64_t t = 0; t < dt; ++t) s += rho[(i0 | offs[t]) * dim + (j0 | offs[t])];
      for (int64_t t = 0; t < dt; ++t) {
        for (int64_t t2 = 0; t2 < dt; ++t2) {
          cplx& e = rho[(i0 | offs[t]) * dim + (j0 | offs[t2])];
          e *= keep;
          if (t == t2) e += mix * s;
        }
      }
    }
  }
}

void depolarize_global(cplx* rho, int n, double p) {
  if (p == 0.0) return;
  const int64_t dim = int64_t{1} << n;
  cplx tr = 0;
  for (int64_t i = 0; i < dim; ++i) tr += rho[i * dim + i];
  const double keep = 1.0 - p;
  const cplx add = p * tr / static_cast<double>(dim);

#pragma omp parallel for schedule(static) if (dim >= kParallelDim)
  for (int64_t r = 0; r < dim; ++r) {
    cplx* row = rho + r * dim;
    for (int64_t c = 0; c < dim; ++c) row[c] *= keep;
    row[r] += add;
  }
}

void apply_1q_state(cplx* psi, int n, int pos, const Mat2& u) {
  const int64_t dim = int64_t{1} << n;
  const int bit = bit_of(n, pos);
  const uint64_t mask = uint64_t{1} << bit;
  for (int64_t i = 0; i < dim / 2; ++i) {
    uint64_t i0 = insert_zero(i, bit), i1 = i0 | mask;
    cplx x = psi[i0], y = psi[i1];
    psi[i0] = u[0] * x + u[1] * y;
    psi[i1] = u[2] * x + u[3] * y;
  }
}

void apply_2q_state(cplx* psi, int n, int pos_a, int pos_b, const Mat4& u) {
  const int64_t dim = int64_t{1} << n;
  const int ba = bit_of(n, pos_a), bb = bit_of(n, pos_b);
  const int lo = std::min(ba, bb), hi = std::max(ba, bb);
  const uint64_t ma = uint64_t{1} << ba, mb = uint64_t{1} << bb;
  const uint64_t offs[4] = {0, mb, ma, ma | mb};
  for (int64_t i = 0; i < dim / 4; ++i) {
    uint64_t base = insert_zero(insert_zero(i, lo), hi);
    cplx v[4];
    for (int k = 0; k < 4; ++k) v[k] = psi[base | offs[k]];
    for (int k = 0; k < 4; ++k) {
      psi[base | offs[k]] =
          u[k * 4] * v[0] + u[k * 4 + 1] * v[1] + u[k * 4 + 2] * v[2] + u[k * 4 + 3] * v[3];
    }
  }
}

namespace reference {
namespace {

using Dense = std::vector<cplx>;

// Full 2^n x 2^n operator acting as `op` (d_op = 2^k) on the listed positions.
Dense embed(int n, std::span<const int> positions, const cplx* op) {
  const int64_t dim = int64_t{1} << n;
  const int k = static_cast<int>(positions.size());
  uint64_t tmask = 0;
  for (int pos : positions) tmask |= uint64_t{1} << bit_of(n, pos);
  auto local = [&](uint64_t idx) {
    uint64_t v = 0;
    for (int q = 0; q < k; ++q) v = (v << 1) | ((idx >> bit_of(n, positions[q])) & 1);
    return v;
  };
  const int64_t dop = int64_t{1} << k;
  Dense full(dim * dim, 0.0);
  for (int64_t i = 0; i < dim; ++i) {
    for (int64_t j = 0; j < dim; ++j) {
      if ((i & ~tmask) != (j & ~tmask)) continue;
      full[i * dim + j] = op[local(i) * dop + local(j)];
    }
  }
  return full;
}

Dense matmul(const Dense& a, const Dense& b, int64_t dim) {
  Dense c(dim * dim, 0.0);
  for (int64_t i = 0; i < dim; ++i)
    for (int64_t k = 0; k < dim; ++k) {
      cplx aik = a[i * dim + k];
      if (aik == cplx(0.0)) continue;
      for (int64_t j = 0; j < dim; ++j) c[i * dim + j] += aik * b[k * dim + j];
    }
  return c;
}

Dense dagger(const Dense& a, int64_t dim) {
  Dense r(dim * dim);
  for (int64_t i = 0; i < dim; ++i)
    for (int64_t j = 0; j < dim; ++j) r[i * dim + j] = std::conj(a[j * dim + i]);
  return r;
}

void conjugate(cplx* rho, int n, const Dense& u) {
  const int64_t dim = int64_t{1} << n;
  Dense r(rho, rho + dim * dim);
  Dense out = matmul(matmul(u, r, dim), dagger(u, dim), dim);
  std::copy(out.begin(), out.end(), rho);
}

}  // namespace

void apply_1q(cplx* rho, int n, int pos, const Mat2& u) {
  int positions[1] = {pos};
  conjugate(rho, n, embed(n, positions, u.data()));
}

void apply_2q(cplx* rho, int n, int pos_a, int pos_b, const Mat4& u) {
  int positions[2] = {pos_a, pos_b};
  conjugate(rho, n, embed(n, positions, u.data()));
}

void depolarize(cplx* rho, int n, std::span<const int> positions, double p) {
  static const Mat2 kPaulis[4] = {
      {1.0, 0.0, 0.0, 1.0},
      {0.0, 1.0, 1.0, 0.0},
      {0.0, cplx(0, -1), cplx(0, 1), 0.0},
      {1.0, 0.0, 0.0, -1.0},
  };
  const int64_t dim = int64_t{1} << n;
  const int m = static_cast<int>(positions.size());
  const int64_t terms = int64_t{1} << (2 * m);
  Dense acc(dim * dim, 0.0);
  const Dense orig(rho, rho + dim * dim);
  for (int64_t code = 0; code < terms; ++code) {
    Dense work = orig;
    for (int q = 0; q < m; ++q) {
      int which = static_cast<int>((code >> (2 * q)) & 3);
      int pos[1] = {positions[q]};
      conjugate(work.data(), n, embed(n, pos, kPaulis[which].data()));
    }
    for (int64_t k = 0; k < dim * dim; ++k) acc[k] += work[k];
  }
  for (int64_t k = 0; k < dim * dim; ++k) {
    rho[k] = (1.0 - p) * orig[k] + p * acc[k] / static_cast<double>(terms);
  }
}

void depolarize_global(cplx* rho, int n, double p) {
  std::vector<int> all(n);
  for (int q = 0; q < n; ++q) all[q] = q;
  depolarize(rho, n, all, p);
}

}  // namespace reference
}  // namespace qassign::kernels
