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
 * Operator classification against a codespace and construction of leakage
 * elimination operators (LEOs).
 *
 * Relative to a codespace C with projector P and Q = I - P, every operator M
 * splits into a logical part PMP, a complement part QMQ and a leakage part
 * PMQ + QMP. An LEO acts as -e^{i phi} on C and +e^{i phi} on its
 * complement, so it commutes with the first two parts and anticommutes with
 * the third.
 */

#pragma once

#include "leolab/qcore.hpp"
#include "leolab/random.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace leolab {

struct OperatorDecomposition {
    ComplexMatrix e_part;     ///< P M P
    ComplexMatrix eperp_part; ///< Q M Q
    ComplexMatrix l_part;     ///< P M Q + Q M P
    CodeSpace codespace;

    [[nodiscard]] ComplexMatrix reconstruct() const {
        return e_part + eperp_part + l_part;
    }
};

/// Throws std::invalid_argument when m is not square of the ambient size.
OperatorDecomposition decompose(const ComplexMatrix &m, const CodeSpace &cs);

/// Unit vector on the Bloch sphere of a logical qubit.
using Direction = std::array<double, 3>;

/**
 * Logical Pauli operators on a two-dimensional codespace, defined in the
 * codespace's ordered basis (basis()[0] is logical |0>). Each is zero on the
 * complement.
 */
std::array<ComplexMatrix, 3> logical_paulis(const CodeSpace &cs);

class LeoOperator {
  public:
    /**
     * Wraps `matrix` as an LEO for `cs`, reading the global phase off the
     * first codespace vector. Throws std::invalid_argument if the matrix
     * is not -e^{i phi} on C and +e^{i phi} on the complement.
     */
    static LeoOperator make(ComplexMatrix matrix, CodeSpace cs);

    /// No checks. Used to present candidate operators to verify_leo.
    static LeoOperator unchecked(ComplexMatrix matrix, double phase,
                                 CodeSpace cs);

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    /// Global phase in [0, 2 pi).
    [[nodiscard]] double phase() const noexcept { return phase_; }
    [[nodiscard]] const CodeSpace &codespace() const noexcept { return cs_; }

    /// Throws std::domain_error naming the first violated invariant.
    void validate(double tol = kPropagatedTol) const;

    /// Compares matrices modulo global phase unless `strict`.
    [[nodiscard]] bool equivalent(const LeoOperator &other,
                                  bool strict = false,
                                  double tol = kPropagatedTol) const;

  private:
    ComplexMatrix matrix_;
    double phase_ = 0.0;
    CodeSpace cs_;
};

/// sigma_L from which an LEO is exponentiated as exp(-i pi sigma_L).
class LeoGenerator {
  public:
    /**
     * Checks sigma_L Hermitian, sigma_L^2 = I on C and sigma_L |c_perp> = 0
     * (1e-12 each). Throws std::invalid_argument otherwise.
     */
    static LeoGenerator from_sigma(ComplexMatrix sigma_l, CodeSpace cs);

    /// sigma_L = n . sigma_vec P for a two-dimensional codespace.
    static LeoGenerator from_direction(const CodeSpace &cs,
                                       const Direction &n);

    [[nodiscard]] const ComplexMatrix &sigma_l() const noexcept {
        return sigma_l_;
    }
    [[nodiscard]] const CodeSpace &codespace() const noexcept { return cs_; }
    [[nodiscard]] const std::optional<Direction> &direction() const noexcept {
        return direction_;
    }
    /// Empty unless built from a direction.
    [[nodiscard]] const std::optional<std::array<ComplexMatrix, 3>> &
    pauli_vector() const noexcept {
        return paulis_;
    }

  private:
    ComplexMatrix sigma_l_;
    CodeSpace cs_;
    std::optional<Direction> direction_;
    std::optional<std::array<ComplexMatrix, 3>> paulis_;
};

/// exp(sign * i pi n . sigma_vec P). Requires rank(C) = 2 and |n| = 1.
LeoOperator leo_from_projector(const CodeSpace &cs, const Direction &n,
                               int sign = +1);

/// exp(-i pi sigma_L)
LeoOperator leo_from_sigma(const LeoGenerator &g);

struct LeoVerification {
    std::size_t trials = 0;
    double max_commutator_e = 0.0;     ///< max ||[R, E]||_max
    double max_commutator_eperp = 0.0; ///< max ||[R, E_perp]||_max
    double max_anticommutator_l = 0.0; ///< max ||{R, L}||_max
    double tolerance = kPropagatedTol;
    bool passed = false;
};

/**
 * Draws `trials` random Hermitian matrices for each block type, projects
 * them onto pure E, E_perp and L parts and records the worst
 * (anti)commutator against r.
 */
LeoVerification verify_leo(const LeoOperator &r, std::size_t trials,
                           std::uint64_t seed);

/// GUE-distributed Hermitian matrix.
ComplexMatrix random_hermitian(std::size_t dim, Rng &rng);

/// Columns |00>, |01>, (|10>+|11>)/sqrt2, (|10>-|11>)/sqrt2.
ComplexMatrix rotated_cnot_basis();

/// Computational CNOT(q0 -> q1) expressed in rotated_cnot_basis().
ComplexMatrix cnot_in_rotated_basis();

/// The three LEOs exercised by the experiments.
enum class LeoKind { z2, z3, cnot };

std::optional<LeoKind> parse_leo_kind(std::string_view name);
std::string_view to_string(LeoKind kind);

/// span{01,10}, span{001,010,100,111} and span{(|10>-|11>)/sqrt2}.
CodeSpace protected_subspace(LeoKind kind);
/// Z(x)Z, Z(x)Z(x)Z and CNOT on the corresponding subspace.
LeoOperator standard_leo(LeoKind kind);
std::size_t qubit_count(LeoKind kind);

} // namespace leolab
