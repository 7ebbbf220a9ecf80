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
/**
 * @file
 * Dense complex kernels behind the simulator.
 *
 * Every kernel exists twice: a plain serial loop nest in `serial::`, kept as
 * the reference the tests compare against, and an OpenMP version in
 * `parallel::`. The unqualified entry points dispatch on problem size.
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace leolab {

using cplx = std::complex<double>;

namespace kernels {

/// Row-major 2x2 operator acting on one qubit.
using Mat2 = std::array<cplx, 4>;

/// Below this many output entries the dispatcher stays serial.
inline constexpr std::size_t kParallelThreshold = 4096;

namespace serial {

/// out[rows x cols] = a[rows x inner] * b[inner x cols]
void matmul(std::span<const cplx> a, std::span<const cplx> b,
            std::span<cplx> out, std::size_t rows, std::size_t inner,
            std::size_t cols);

/// out[rows x cols] = a[rows x inner] * b^dagger, b stored as [cols x inner].
void matmul_adjoint_rhs(std::span<const cplx> a, std::span<const cplx> b,
                        std::span<cplx> out, std::size_t rows,
                        std::size_t inner, std::size_t cols);

/**
 * out += K rho K^dagger where K acts on the bit selected by `stride` of a
 * dim x dim density matrix. `stride` is the distance between the two basis
 * indices that differ only in that bit.
 */
void accumulate_1q_conjugation(std::span<const cplx> rho, std::span<cplx> out,
                               std::size_t dim, std::size_t stride,
                               const Mat2 &k);

/// psi <- U psi on the bit selected by `stride`.
void apply_1q_vector(std::span<cplx> psi, std::size_t stride, const Mat2 &u);

} // namespace serial

namespace parallel {

void matmul(std::span<const cplx> a, std::span<const cplx> b,
            std::span<cplx> out, std::size_t rows, std::size_t inner,
            std::size_t cols);

void matmul_adjoint_rhs(std::span<const cplx> a, std::span<const cplx> b,
                        std::span<cplx> out, std::size_t rows,
                        std::size_t inner, std::size_t cols);

void accumulate_1q_conjugation(std::span<const cplx> rho, std::span<cplx> out,
                               std::size_t dim, std::size_t stride,
                               const Mat2 &k);

void apply_1q_vector(std::span<cplx> psi, std::size_t stride, const Mat2 &u);

} // namespace parallel

void matmul(std::span<const cplx> a, std::span<const cplx> b,
            std::span<cplx> out, std::size_t rows, std::size_t inner,
            std::size_t cols);

void matmul_adjoint_rhs(std::span<const cplx> a, std::span<const cplx> b,
                        std::span<cplx> out, std::size_t rows,
                        std::size_t inner, std::size_t cols);

void accumulate_1q_conjugation(std::span<const cplx> rho, std::span<cplx> out,
                               std::size_t dim, std::size_t stride,
                               const Mat2 &k);

void apply_1q_vector(std::span<cplx> psi, std::size_t stride, const Mat2 &u);

} // namespace kernels
} // namespace leolab
