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

// Serial reference vs OpenMP kernels across register sizes.

#include "leolab/kernels.hpp"
#include "leolab/random.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using leolab::cplx;
namespace kernels = leolab::kernels;

std::vector<cplx> random_entries(std::size_t n, std::uint64_t seed) {
    leolab::Rng rng(seed);
    std::vector<cplx> v(n);
    for (auto &x : v)
        x = {leolab::standard_normal(rng), leolab::standard_normal(rng)};
    return v;
}

const kernels::Mat2 kDamping{1.0, 0.0, 0.0, 0.9};

template <auto Kernel> void BM_Matmul(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_entries(n * n, 1);
    const auto b = random_entries(n * n, 2);
    std::vector<cplx> out(n * n);
    for (auto _ : state) {
        Kernel(a, b, out, n, n, n);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(n * n * n));
}

template <auto Kernel> void BM_Conjugation1q(benchmark::State &state) {
    const auto qubits = static_cast<std::size_t>(state.range(0));
    const std::size_t dim = std::size_t{1} << qubits;
    const auto rho = random_entries(dim * dim, 3);
    std::vector<cplx> out(dim * dim);
    for (auto _ : state) {
        Kernel(rho, out, dim, dim / 2, kDamping);
        benchmark::DoNotOptimize(out.data());
    }
}

template <auto Kernel> void BM_Vector1q(benchmark::State &state) {
    const auto qubits = static_cast<std::size_t>(state.range(0));
    auto psi = random_entries(std::size_t{1} << qubits, 4);
    for (auto _ : state) {
        Kernel(psi, 1, kDamping);
        benchmark::DoNotOptimize(psi.data());
    }
}

} // namespace

BENCHMARK(BM_Matmul<kernels::serial::matmul>)->RangeMultiplier(2)->Range(8, 256);
BENCHMARK(BM_Matmul<kernels::parallel::matmul>)->RangeMultiplier(2)->Range(8, 256);
BENCHMARK(BM_Conjugation1q<kernels::serial::accumulate_1q_conjugation>)->DenseRange(3, 11, 2);
BENCHMARK(BM_Conjugation1q<kernels::parallel::accumulate_1q_conjugation>)->DenseRange(3, 11, 2);
BENCHMARK(BM_Vector1q<kernels::serial::apply_1q_vector>)->DenseRange(10, 22, 4);
BENCHMARK(BM_Vector1q<kernels::parallel::apply_1q_vector>)->DenseRange(10, 22, 4);

BENCHMARK_MAIN();
