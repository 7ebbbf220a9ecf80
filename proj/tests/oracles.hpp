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

// Test-only reference computations. Nothing here calls into the code path
// it is used to check.

#pragma once

#include "leolab/qcore.hpp"
#include "leolab/random.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using leolab::ComplexMatrix;
using leolab::cplx;

/// exp(-i h t) by summing the Taylor series until terms drop below 1e-18.
inline ComplexMatrix expm_series(const ComplexMatrix &h, double t) {
    const std::size_t n = h.rows();
    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    const cplx factor{0.0, -t};
    for (int k = 1; k < 200; ++k) {
        ComplexMatrix next(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                cplx acc{};
                for (std::size_t l = 0; l < n; ++l)
                    acc += term(i, l) * h(l, j);
                next(i, j) = acc * factor / static_cast<double>(k);
            }
        term = next;
        double mag = 0.0;
        for (auto e : term.entries())
            mag = std::max(mag, std::abs(e));
        sum += term;
        if (mag < 1e-18)
            break;
    }
    return sum;
}

/// Plain triple loop.
inline ComplexMatrix naive_matmul(const ComplexMatrix &a,
                                  const ComplexMatrix &b) {
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k)
                out(i, j) += a(i, k) * b(k, j);
    return out;
}

/**
 * E / E_perp / L split for a codespace spanned by computational basis
 * states: an entry (i, j) belongs to E when both indices are in the set, to
 * E_perp when neither is, and to L otherwise.
 */
struct BlockSplit {
    ComplexMatrix e, eperp, l;
};

inline BlockSplit split_by_index(const ComplexMatrix &m,
                                 const std::set<std::size_t> &in_code) {
    const std::size_t n = m.rows();
    BlockSplit s{ComplexMatrix(n, n), ComplexMatrix(n, n), ComplexMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool ci = in_code.contains(i), cj = in_code.contains(j);
            if (ci && cj)
                s.e(i, j) = m(i, j);
            else if (!ci && !cj)
                s.eperp(i, j) = m(i, j);
            else
                s.l(i, j) = m(i, j);
        }
    return s;
}

inline leolab::QState random_density(std::size_t qubits, leolab::Rng &rng) {
    const std::size_t d = std::size_t{1} << qubits;
    ComplexMatrix a(d, d);
    for (auto &e : a.entries())
        e = {leolab::standard_normal(rng), leolab::standard_normal(rng)};
    ComplexMatrix rho = naive_matmul(a, a.adjoint());
    rho *= 1.0 / rho.trace().real();
    return leolab::QState::from_density(qubits, rho);
}

inline double binomial_sigma(double p, std::size_t shots) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
}

} // namespace oracle
