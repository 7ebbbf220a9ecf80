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

#include "leolab/algebra.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace leolab {

namespace {

double wrap_phase(double phi) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    phi = std::fmod(phi, two_pi) + 0.0; // folds -0 into +0
    if (phi < 0.0)
        phi += two_pi;
    // fmod can return two_pi - epsilon for tiny negative inputs
    if (phi >= two_pi)
        phi = 0.0;
    return phi;
}

ComplexMatrix cnot_matrix() {
    return {{1.0, 0.0, 0.0, 0.0},
            {0.0, 1.0, 0.0, 0.0},
            {0.0, 0.0, 0.0, 1.0},
            {0.0, 0.0, 1.0, 0.0}};
}

} // namespace

OperatorDecomposition decompose(const ComplexMatrix &m, const CodeSpace &cs) {
    if (!m.is_square() || m.rows() != cs.ambient_dim())
        throw std::invalid_argument(
            "decompose: operator dimension " + std::to_string(m.rows()) +
            " does not match codespace dimension " +
            std::to_string(cs.ambient_dim()));
    const ComplexMatrix &p = cs.projector();
    const ComplexMatrix q = cs.complement_projector();
    const ComplexMatrix pm = matmul(p, m);
    const ComplexMatrix qm = matmul(q, m);
    return {matmul(pm, p), matmul(qm, q), matmul(pm, q) + matmul(qm, p), cs};
}

std::array<ComplexMatrix, 3> logical_paulis(const CodeSpace &cs) {
    if (cs.rank() != 2)
        throw std::invalid_argument(
            "logical_paulis: codespace must be two-dimensional, got rank " +
            std::to_string(cs.rank()));
    const ComplexMatrix &b0 = cs.basis()[0];
    const ComplexMatrix &b1 = cs.basis()[1];
    const ComplexMatrix k01 = matmul(b0, b1.adjoint());
    const ComplexMatrix k10 = matmul(b1, b0.adjoint());
    const cplx i{0.0, 1.0};
    return {k01 + k10, (-i) * k01 + i * k10,
            matmul(b0, b0.adjoint()) - matmul(b1, b1.adjoint())};
}

// LeoOperator

LeoOperator LeoOperator::make(ComplexMatrix matrix, CodeSpace cs) {
    if (!matrix.is_square() || matrix.rows() != cs.ambient_dim())
        throw std::invalid_argument("LeoOperator: dimension mismatch");
    const ComplexMatrix &c0 = cs.basis().front();
    const cplx diag = hs_inner(c0, matmul(matrix, c0));
    LeoOperator r = unchecked(std::move(matrix), std::arg(-diag), std::move(cs));
    try {
        r.validate();
    } catch (const std::domain_error &e) {
        throw std::invalid_argument(e.what());
    }
    return r;
}

LeoOperator LeoOperator::unchecked(ComplexMatrix matrix, double phase,
                                   CodeSpace cs) {
    LeoOperator r;
    r.matrix_ = std::move(matrix);
    r.phase_ = wrap_phase(phase);
    r.cs_ = std::move(cs);
    return r;
}

void LeoOperator::validate(double tol) const {
    if (!is_unitary(matrix_, tol))
        throw std::domain_error("LEO: matrix is not unitary");
    const cplx eiphi = std::polar(1.0, phase_);
    for (const auto &c : cs_.basis())
        if (max_abs_diff(matmul(matrix_, c), (-eiphi) * c) > tol)
            throw std::domain_error(
                "LEO: codespace vector is not mapped to -e^{i phi} times itself");
    for (const auto &c : cs_.complement_basis())
        if (max_abs_diff(matmul(matrix_, c), eiphi * c) > tol)
            throw std::domain_error(
                "LEO: complement vector is not mapped to +e^{i phi} times itself");
    const ComplexMatrix unphased = std::conj(eiphi) * matrix_;
    if (!is_hermitian(unphased, tol))
        throw std::domain_error("LEO: not Hermitian up to global phase");
    if (max_abs_diff(matmul(unphased, unphased),
                     ComplexMatrix::identity(matrix_.rows())) > tol)
        throw std::domain_error("LEO: (R e^{-i phi})^2 != I");
}

bool LeoOperator::equivalent(const LeoOperator &other, bool strict,
                             double tol) const {
    if (matrix_.rows() != other.matrix_.rows())
        return false;
    if (strict)
        return max_abs_diff(matrix_, other.matrix_) <= tol;
    return phase_insensitive_diff(matrix_, other.matrix_) <= tol;
}

// LeoGenerator

LeoGenerator LeoGenerator::from_sigma(ComplexMatrix sigma_l, CodeSpace cs) {
    if (!sigma_l.is_square() || sigma_l.rows() != cs.ambient_dim())
        throw std::invalid_argument("LeoGenerator: dimension mismatch");
    if (!is_hermitian(sigma_l))
        throw std::invalid_argument("LeoGenerator: sigma_L is not Hermitian");
    const ComplexMatrix &p = cs.projector();
    const ComplexMatrix squared_on_c = matmul(matmul(p, matmul(sigma_l, sigma_l)), p);
    if (max_abs_diff(squared_on_c, p) > kStructuralTol)
        throw std::invalid_argument(
            "LeoGenerator: sigma_L^2 is not the identity on the codespace");
    if (max_abs(matmul(sigma_l, cs.complement_projector())) > kStructuralTol)
        throw std::invalid_argument(
            "LeoGenerator: sigma_L does not annihilate the complement");
    LeoGenerator g;
    g.sigma_l_ = std::move(sigma_l);
    g.cs_ = std::move(cs);
    return g;
}

LeoGenerator LeoGenerator::from_direction(const CodeSpace &cs,
                                          const Direction &n) {
    const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (std::abs(norm - 1.0) > kStructuralTol)
        throw std::invalid_argument("LeoGenerator: direction is not a unit vector");
    auto paulis = logical_paulis(cs);
    ComplexMatrix sigma(cs.ambient_dim(), cs.ambient_dim());
    for (std::size_t k = 0; k < 3; ++k)
        sigma += cplx{n[k]} * paulis[k];
    // n . sigma_vec already vanishes on the complement; the trailing P is a
    // no-op kept to mirror the construction.
    sigma = matmul(sigma, cs.projector());
    LeoGenerator g = from_sigma(std::move(sigma), cs);
    g.direction_ = n;
    g.paulis_ = std::move(paulis);
    return g;
}

LeoOperator leo_from_projector(const CodeSpace &cs, const Direction &n,
                               int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("leo_from_projector: sign must be +1 or -1");
    const LeoGenerator g = LeoGenerator::from_direction(cs, n);
    // exp(-i A t) with t = -sign*pi gives exp(sign * i pi A)
    return LeoOperator::make(
        expm_hermitian(g.sigma_l(), -sign * std::numbers::pi), cs);
}

LeoOperator leo_from_sigma(const LeoGenerator &g) {
    return LeoOperator::make(expm_hermitian(g.sigma_l(), std::numbers::pi),
                             g.codespace());
}

ComplexMatrix random_hermitian(std::size_t dim, Rng &rng) {
    ComplexMatrix h(dim, dim);
    const double off = 1.0 / std::sqrt(2.0);
    for (std::size_t r = 0; r < dim; ++r) {
        h(r, r) = standard_normal(rng);
        for (std::size_t c = r + 1; c < dim; ++c) {
            const double re = standard_normal(rng) * off;
            const double im = standard_normal(rng) * off;
            h(r, c) = {re, im};
            h(c, r) = {re, -im};
        }
    }
    return h;
}

LeoVerification verify_leo(const LeoOperator &r, std::size_t trials,
                           std::uint64_t seed) {
    if (trials == 0)
        throw std::invalid_argument("verify_leo: trials must be >= 1");
    Rng rng(seed);
    const ComplexMatrix &rm = r.matrix();
    const CodeSpace &cs = r.codespace();
    LeoVerification report;
    report.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto e = decompose(random_hermitian(cs.ambient_dim(), rng), cs);
        const auto eperp = decompose(random_hermitian(cs.ambient_dim(), rng), cs);
        const auto l = decompose(random_hermitian(cs.ambient_dim(), rng), cs);
        report.max_commutator_e =
            std::max(report.max_commutator_e, max_abs(commutator(rm, e.e_part)));
        report.max_commutator_eperp =
            std::max(report.max_commutator_eperp,
                     max_abs(commutator(rm, eperp.eperp_part)));
        report.max_anticommutator_l = std::max(
            report.max_anticommutator_l, max_abs(anticommutator(rm, l.l_part)));
    }
    report.passed = report.max_commutator_e <= report.tolerance &&
                    report.max_commutator_eperp <= report.tolerance &&
                    report.max_anticommutator_l <= report.tolerance;
    return report;
}

ComplexMatrix rotated_cnot_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{1.0, 0.0, 0.0, 0.0},
            {0.0, 1.0, 0.0, 0.0},
            {0.0, 0.0, s, s},
            {0.0, 0.0, s, -s}};
}

ComplexMatrix cnot_in_rotated_basis() {
    const ComplexMatrix v = rotated_cnot_basis();
    return matmul(v.adjoint(), matmul(cnot_matrix(), v));
}

std::optional<LeoKind> parse_leo_kind(std::string_view name) {
    if (name == "z2")
        return LeoKind::z2;
    if (name == "z3")
        return LeoKind::z3;
    if (name == "cnot")
        return LeoKind::cnot;
    return std::nullopt;
}

std::string_view to_string(LeoKind kind) {
    switch (kind) {
    case LeoKind::z2:
        return "z2";
    case LeoKind::z3:
        return "z3";
    case LeoKind::cnot:
        return "cnot";
    }
    return "?";
}

std::size_t qubit_count(LeoKind kind) { return kind == LeoKind::z3 ? 3 : 2; }

CodeSpace protected_subspace(LeoKind kind) {
    switch (kind) {
    case LeoKind::z2:
        return CodeSpace::from_labels({"01", "10"});
    case LeoKind::z3:
        return CodeSpace::from_labels({"001", "010", "100", "111"});
    case LeoKind::cnot: {
        const double s = 1.0 / std::sqrt(2.0);
        const std::array<cplx, 4> phi{0.0, 0.0, s, -s};
        return CodeSpace::from_basis({ComplexMatrix::column(phi)});
    }
    }
    throw std::invalid_argument("protected_subspace: unknown kind");
}

LeoOperator standard_leo(LeoKind kind) {
    using namespace pauli;
    switch (kind) {
    case LeoKind::z2:
        return LeoOperator::make(kron(Z(), Z()), protected_subspace(kind));
    case LeoKind::z3:
        return LeoOperator::make(kron_all({Z(), Z(), Z()}),
                                 protected_subspace(kind));
    case LeoKind::cnot:
        return LeoOperator::make(cnot_matrix(), protected_subspace(kind));
    }
    throw std::invalid_argument("standard_leo: unknown kind");
}

} // namespace leolab
