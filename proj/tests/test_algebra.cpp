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

#include "doctest.h"
#include "oracles.hpp"

#include "leolab/algebra.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

using namespace leolab;

namespace {

const CodeSpace &c2() {
    static const CodeSpace cs = CodeSpace::from_labels({"01", "10"});
    return cs;
}

ComplexMatrix diag(std::initializer_list<cplx> d) {
    const std::vector<cplx> v(d);
    return ComplexMatrix::diagonal(v);
}

ComplexMatrix phi_projector() {
    const double s = 1 / std::sqrt(2.0);
    const auto phi = ComplexMatrix::column(std::vector<cplx>{0, 0, s, -s});
    return matmul(phi, phi.adjoint());
}

} // namespace

TEST_SUITE("decompose") {
    TEST_CASE("Z (x) Z against {01,10}") {
        const auto d = decompose(kron(pauli::Z(), pauli::Z()), c2());
        CHECK(max_abs(d.l_part) < 1e-12);
        CHECK(max_abs_diff(d.e_part, -1.0 * c2().projector()) < 1e-12);
        CHECK(max_abs_diff(d.eperp_part, c2().complement_projector()) < 1e-12);
    }
    TEST_CASE("X (x) I is pure leakage, X (x) X is not") {
        const std::set<std::size_t> idx{1, 2};
        for (const auto &m : {kron(pauli::X(), pauli::I()),
                              kron(pauli::X(), pauli::X())}) {
            const auto d = decompose(m, c2());
            const auto want = oracle::split_by_index(m, idx);
            CHECK(max_abs_diff(d.e_part, want.e) < 1e-12);
            CHECK(max_abs_diff(d.eperp_part, want.eperp) < 1e-12);
            CHECK(max_abs_diff(d.l_part, want.l) < 1e-12);
        }
        const auto xi = decompose(kron(pauli::X(), pauli::I()), c2());
        CHECK(max_abs(xi.e_part) < 1e-12);
        CHECK(max_abs(xi.eperp_part) < 1e-12);
        CHECK(max_abs(decompose(kron(pauli::X(), pauli::X()), c2()).l_part) <
              1e-12);
    }
    TEST_CASE("random operators: reconstruction and block structure") {
        Rng rng(17);
        const auto cs = protected_subspace(LeoKind::z3);
        const std::set<std::size_t> idx{1, 2, 4, 7};
        const auto p = cs.projector(), q = cs.complement_projector();
        for (int trial = 0; trial < 20; ++trial) {
            const auto m = random_hermitian(8, rng);
            const auto d = decompose(m, cs);
            CHECK(max_abs_diff(d.reconstruct(), m) < 1e-12);
            const auto want = oracle::split_by_index(m, idx);
            CHECK(max_abs_diff(d.l_part, want.l) < 1e-12);
            CHECK(max_abs(matmul(d.e_part, q)) < 1e-12);
            CHECK(max_abs(matmul(d.eperp_part, p)) < 1e-12);
            CHECK(max_abs(matmul(p, matmul(d.l_part, p))) < 1e-12);
            CHECK(max_abs(matmul(q, matmul(d.l_part, q))) < 1e-12);
        }
    }
    TEST_CASE("non-computational codespace") {
        Rng rng(2);
        const auto cs = protected_subspace(LeoKind::cnot);
        const auto m = random_hermitian(4, rng);
        const auto d = decompose(m, cs);
        CHECK(max_abs_diff(d.reconstruct(), m) < 1e-12);
        CHECK(max_abs_diff(d.e_part,
                           matmul(phi_projector(), matmul(m, phi_projector()))) <
              1e-12);
    }
}

TEST_SUITE("leo construction") {
    TEST_CASE("z direction gives Z (x) Z") {
        const auto r = leo_from_projector(c2(), {0, 0, 1});
        CHECK(phase_insensitive_diff(r.matrix(), kron(pauli::Z(), pauli::Z())) <
              1e-10);
    }
    TEST_CASE("x direction gives the same canonical form") {
        const auto r = leo_from_projector(c2(), {1, 0, 0});
        CHECK(phase_insensitive_diff(r.matrix(), diag({1, -1, -1, 1})) < 1e-10);
        r.validate();
    }
    TEST_CASE("sign flip only changes a global phase") {
        const Direction n{0.48, -0.6, 0.64};
        const auto a = leo_from_projector(c2(), n, +1);
        const auto b = leo_from_projector(c2(), n, -1);
        CHECK(a.equivalent(b));
    }
    TEST_CASE("non-unit direction is rejected") {
        CHECK_THROWS_AS(LeoGenerator::from_direction(c2(), {1, 1, 0}),
                        std::invalid_argument);
    }
    TEST_CASE("sigma = P gives diag(1,-1,-1,1)") {
        const auto r =
            leo_from_sigma(LeoGenerator::from_sigma(c2().projector(), c2()));
        CHECK(max_abs_diff(r.matrix(), diag({1, -1, -1, 1})) < 1e-10);
        CHECK(r.phase() == doctest::Approx(0.0));
    }
    TEST_CASE("sigma = P_Phi gives CNOT") {
        const auto cs = protected_subspace(LeoKind::cnot);
        const auto r = leo_from_sigma(LeoGenerator::from_sigma(phi_projector(), cs));
        const ComplexMatrix cnot{
            {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
        CHECK(max_abs_diff(r.matrix(), cnot) < 1e-10);
    }
    TEST_CASE("invalid sigma is rejected") {
        CHECK_THROWS_AS(LeoGenerator::from_sigma(ComplexMatrix(4, 4), c2()),
                        std::invalid_argument);
        CHECK_THROWS_AS(
            LeoGenerator::from_sigma(kron(pauli::X(), pauli::I()), c2()),
            std::invalid_argument);
    }
    TEST_CASE("projector and sigma paths agree") {
        for (const Direction &n : {Direction{0, 0, 1}, Direction{1, 0, 0},
                                   Direction{0, 1, 0}, Direction{0.6, 0, 0.8}}) {
            const auto g = LeoGenerator::from_direction(c2(), n);
            CHECK(leo_from_sigma(g).equivalent(leo_from_projector(c2(), n)));
        }
    }
    TEST_CASE("non-LEO matrix fails make") {
        CHECK_THROWS(LeoOperator::make(kron(pauli::X(), pauli::I()), c2()));
    }
    TEST_CASE("conjugation keeps E and flips L") {
        Rng rng(31);
        for (auto kind : {LeoKind::z2, LeoKind::z3, LeoKind::cnot}) {
            const auto r = standard_leo(kind);
            const auto &u = r.matrix();
            for (int trial = 0; trial < 10; ++trial) {
                const auto d = decompose(
                    random_hermitian(r.codespace().ambient_dim(), rng),
                    r.codespace());
                const auto e = d.e_part + d.eperp_part;
                CHECK(max_abs_diff(matmul(u.adjoint(), matmul(e, u)), e) < 1e-10);
                CHECK(max_abs_diff(matmul(u.adjoint(), matmul(d.l_part, u)),
                                   -1.0 * d.l_part) < 1e-10);
            }
        }
    }
}

TEST_SUITE("verify_leo") {
    TEST_CASE("standard LEOs pass") {
        for (auto kind : {LeoKind::z2, LeoKind::z3, LeoKind::cnot}) {
            const auto rep = verify_leo(standard_leo(kind), 100, 7);
            CHECK(rep.passed);
            CHECK(rep.trials == 100);
            CHECK(rep.max_commutator_e <= 1e-12);
            CHECK(rep.max_commutator_eperp <= 1e-12);
            CHECK(rep.max_anticommutator_l <= 1e-12);
        }
    }
    TEST_CASE("standard LEOs have the expected matrices") {
        CHECK(max_abs_diff(standard_leo(LeoKind::z2).matrix(),
                           kron(pauli::Z(), pauli::Z())) == 0.0);
        CHECK(max_abs_diff(standard_leo(LeoKind::z3).matrix(),
                           kron_all({pauli::Z(), pauli::Z(), pauli::Z()})) == 0.0);
    }
    TEST_CASE("X (x) I posing as an LEO fails") {
        const auto fake =
            LeoOperator::unchecked(kron(pauli::X(), pauli::I()), 0.0, c2());
        const auto rep = verify_leo(fake, 100, 7);
        CHECK_FALSE(rep.passed);
        CHECK(rep.max_commutator_e > 1e-3);
    }
    TEST_CASE("same seed reproduces the report") {
        const auto a = verify_leo(standard_leo(LeoKind::cnot), 10, 99);
        const auto b = verify_leo(standard_leo(LeoKind::cnot), 10, 99);
        CHECK(a.max_anticommutator_l == b.max_anticommutator_l);
    }
}

TEST_SUITE("rotated cnot") {
    TEST_CASE("diag(1,1,1,-1)") {
        CHECK(max_abs_diff(cnot_in_rotated_basis(), diag({1, 1, 1, -1})) <=
              1e-12);
    }
    TEST_CASE("basis is unitary and commutes with diagonal matrices") {
        CHECK(is_unitary(rotated_cnot_basis(), 1e-12));
        const auto d = diag({0.3, {0, 2}, -1, 5});
        CHECK(max_abs(commutator(cnot_in_rotated_basis(), d)) < 1e-12);
    }
}

TEST_CASE("leo kind names") {
    CHECK(parse_leo_kind("z3") == LeoKind::z3);
    CHECK(!parse_leo_kind("bogus"));
    CHECK(to_string(LeoKind::cnot) == "cnot");
    CHECK(qubit_count(LeoKind::z3) == 3);
}
