// Copyright 2026 The leo-lab Authors
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

#include "leolab/kernels.hpp"

#include <algorithm>

namespace leolab::kernels {

namespace {

// Index pairs (i0, i0 + stride) enumerate the two amplitudes touched by a
// one-qubit operator; i0 has the selected bit clear.
inline std::size_t pair_base(std::size_t k, std::size_t stride) {
    return (k / stride) * 2 * stride + (k % stride);
}

inline cplx conj_mul(cplx a, cplx b) { return a * std::conj(b); }

} // namespace

namespace serial {

void matmul(std::span<const cplx> a, std::span<const cplx> b,
            std::span<cplx> out, std::size_t rows, std::size_t inner,
            std::size_t cols) {
    std::fill(out.begin(), out.end(), cplx{});
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            const cplx aik = a[i * inner + k];
            if (aik == cplx{})
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                out[i * cols + j] += aik * b[k * cols + j];
        }
    }
}

void matmul_adjoint_rhs(std::span<const cplx> a, std::span<const cplx> b,
                        std::span<cplx> out, std::size_t rows,
                        std::size_t inner, std::size_t cols) {
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            cplx acc{};
            for (std::size_t k = 0; k < inner; ++k)
                acc += conj_mul(a[i * inner + k], b[j * inner + k]);
            out[i * cols + j] = acc;
        }
    }
}

void accumulate_1q_conjugation(std::span<const cplx> rho, std::span<cplx> out,
                               std::size_t dim, std::size_t stride,
                               const Mat2 &k) {
    const std::size_t half = dim / 2;
    for (std::size_t r = 0; r < half; ++r) {
        const std::size_t r0 = pair_base(r, stride);
        const std::size_t r1 = r0 + stride;
        for (std::size_t c = 0; c < half; ++c) {
            const std::size_t c0 = pair_base(c, stride);
            const std::size_t c1 = c0 + stride;
            const cplx m00 = rho[r0 * dim + c0], m01 = rho[r0 * dim + c1];
            const cplx m10 = rho[r1 * dim + c0], m11 = rho[r1 * dim + c1];
            // t = K m
            const cplx t00 = k[0] * m00 + k[1] * m10;
            const cplx t01 = k[0] * m01 + k[1] * m11;
            const cplx t10 = k[2] * m00 + k[3] * m10;
            const cplx t11 = k[2] * m01 + k[3] * m11;
            // out += t K^dagger
            out[r0 * dim + c0] += conj_mul(t00, k[0]) + conj_mul(t01, k[1]);
            out[r0 * dim + c1] += conj_mul(t00, k[2]) + conj_mul(t01, k[3]);
            out[r1 * dim + c0] += conj_mul(t10, k[0]) + conj_mul(t11, k[1]);
            out[r1 * dim + c1] += conj_mul(t10, k[2]) + conj_mul(t11, k[3]);
        }
    }
}

void apply_1q_vector(std::span<cplx> psi, std::size_t stride, const Mat2 &u) {
    const std::size_t half = psi.size() / 2;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = pair_base(k, stride);
        const std::size_t i1 = i0 + stride;
        const cplx v0 = psi[i0], v1 = psi[i1];
        psi[i0] = u[0] * v0 + u[1] * v1;
        psi[i1] = u[2] * v0 + u[3] * v1;
    }
}

} // namespace serial

namespace parallel {

void matmul(std::span<const cplx> a, std::span<const cplx> b,
            std::span<cplx> out, std::size_t rows, std::size_t inner,
            std::size_t cols) {
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < rows; ++i) {
        cplx *row = out.data() + i * cols;
        std::fill(row, row + cols, cplx{});
        for (std::size_t k = 0; k < inner; ++k) {
            const cplx aik = a[i * inner + k];
            if (aik == cplx{})
                continue;
            const cplx *brow = b.data() + k * cols;
            for (std::size_t j = 0; j < cols; ++j)
                row[j] += aik * brow[j];
        }
    }
}

void matmul_adjoint_rhs(std::span<const cplx> a, std::span<const cplx> b,
                        std::span<cplx> out, std::size_t rows,
                        std::size_t inner, std::size_t cols) {
#pragma omp parallel for collapse(2) schedule(static)
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            cplx acc{};
            for (std::size_t k = 0; k < inner; ++k)
                acc += conj_mul(a[i * inner + k], b[j * inner + k]);
            out[i * cols + j] = acc;
        }
    }
}

void accumulate_1q_conjugation(std::span<const cplx> rho, std::span<cplx> out,
                               std::size_t dim, std::size_t stride,
                               const Mat2 &k) {
    const std::size_t half = dim / 2;
    // each (r, c) pair owns a disjoint 2x2 block of `out`
#pragma omp parallel for collapse(2) schedule(static)
    for (std::size_t r = 0; r < half; ++r) {
        for (std::size_t c = 0; c < half; ++c) {
            const std::size_t r0 = pair_base(r, stride);
            const std::size_t r1 = r0 + stride;
            const std::size_t c0 = pair_base(c, stride);
            const std::size_t c1 = c0 + stride;
            const cplx m00 = rho[r0 * dim + c0], m01 = rho[r0 * dim + c1];
            const cplx m10 = rho[r1 * dim + c0], m11 = rho[r1 * dim + c1];
            const cplx t00 = k[0] * m00 + k[1] * m10;
            const cplx t01 = k[0] * m01 + k[1] * m11;
            const cplx t10 = k[2] * m00 + k[3] * m10;
            const cplx t11 = k[2] * m01 + k[3] * m11;
            out[r0 * dim + c0] += conj_mul(t00, k[0]) + conj_mul(t01, k[1]);
            out[r0 * dim + c1] += conj_mul(t00, k[2]) + conj_mul(t01, k[3]);
            out[r1 * dim + c0] += conj_mul(t10, k[0]) + conj_mul(t11, k[1]);
            out[r1 * dim + c1] += conj_mul(t10, k[2]) + conj_mul(t11, k[3]);
        }
    }
}

void apply_1q_vector(std::span<cplx> psi, std::size_t stride, const Mat2 &u) {
    const std::size_t half = psi.size() / 2;
#pragma omp parallel for schedule(static)
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = pair_base(k, stride);
        const std::size_t i1 = i0 + stride;
        const cplx v0 = psi[i0], v1 = psi[i1];
        psi[i0] = u[0] * v0 + u[1] * v1;
        psi[i1] = u[2] * v0 + u[3] * v1;
    }
}

} // namespace parallel

void matmul(std::span<const cplx> a, std::span<const cplx> b,
            std::span<cplx> out, std::size_t rows, std::size_t inner,
            std::size_t cols) {
    if (rows * cols * inner >= kParallelThreshold * 16)
        parallel::matmul(a, b, out, rows, inner, cols);
    else
        serial::matmul(a, b, out, rows, inner, cols);
}

void matmul_adjoint_rhs(std::span<const cplx> a, std::span<const cplx> b,
                        std::span<cplx> out, std::size_t rows,
                        std::size_t inner, std::size_t cols) {
    if (rows * cols * inner >= kParallelThreshold * 16)
        parallel::matmul_adjoint_rhs(a, b, out, rows, inner, cols);
    else
        serial::matmul_adjoint_rhs(a, b, out, rows, inner, cols);
}

void accumulate_1q_conjugation(std::span<const cplx> rho, std::span<cplx> out,
                               std::size_t dim, std::size_t stride,
                               const Mat2 &k) {
    if (dim * dim >= kParallelThreshold)
        parallel::accumulate_1q_conjugation(rho, out, dim, stride, k);
    else
        serial::accumulate_1q_conjugation(rho, out, dim, stride, k);
}

void apply_1q_vector(std::span<cplx> psi, std::size_t stride, const Mat2 &u) {
    if (psi.size() >= kParallelThreshold)
        parallel::apply_1q_vector(psi, stride, u);
    else
        serial::apply_1q_vector(psi, stride, u);
}

} // namespace leolab::kernels
