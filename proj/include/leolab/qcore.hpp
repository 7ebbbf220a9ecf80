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
 * Dense complex matrices, quantum states and codespaces.
 *
 * Qubit 0 is the leftmost ket label and the most significant bit of a basis
 * index. Bath factors, when present, follow the system qubits in tensor
 * products.
 */

#pragma once

#include "leolab/kernels.hpp"

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace leolab {

using cplx = std::complex<double>;

inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kPropagatedTol = 1e-10;

/// Row-major dense complex matrix. Column vectors are n x 1 matrices.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols,
                  std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix diagonal(std::span<const cplx> diag);
    static ComplexMatrix column(std::span<const cplx> values);
    /// |index> in a space of dimension `dim`.
    static ComplexMatrix basis_vector(std::size_t dim, std::size_t index);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    cplx &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    [[nodiscard]] std::span<const cplx> entries() const noexcept {
        return entries_;
    }
    [[nodiscard]] std::span<cplx> entries() noexcept { return entries_; }

    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] cplx trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(cplx scalar);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(cplx s, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

/// Standard matrix product; throws std::invalid_argument on a.cols != b.rows.
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

/// Tensor product with the block convention a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// U rho U^dagger
ComplexMatrix conjugate(const ComplexMatrix &u, const ComplexMatrix &rho);

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b);

/// exp(-i h t) via Hermitian eigendecomposition. Rejects non-Hermitian h.
ComplexMatrix expm_hermitian(const ComplexMatrix &h, double t);

/// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> eigenvalues_hermitian(const ComplexMatrix &h);

/// Largest absolute entry.
double max_abs(const ComplexMatrix &m);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
/// Largest singular value.
double spectral_norm(const ComplexMatrix &m);
/// tr(a^dagger b)
cplx hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);

bool is_hermitian(const ComplexMatrix &m, double tol = kStructuralTol);
bool is_unitary(const ComplexMatrix &m, double tol = kPropagatedTol);

/**
 * Distance between a and b modulo a global phase: min over theta of
 * max|a - e^{i theta} b|, with theta aligned on the largest entry of b.
 */
double phase_insensitive_diff(const ComplexMatrix &a, const ComplexMatrix &b);

namespace pauli {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
ComplexMatrix H();
} // namespace pauli

/// Kronecker product of a list of factors, left to right.
ComplexMatrix kron_all(std::initializer_list<ComplexMatrix> factors);

enum class Representation { statevector, density_matrix };

/**
 * System (plus optional bath) state. The statevector form stores a
 * dim x 1 column, the density form a dim x dim matrix.
 */
struct QState {
    std::size_t num_qubits = 0;
    std::vector<std::size_t> bath_dims;
    Representation representation = Representation::statevector;
    ComplexMatrix data;

    [[nodiscard]] std::size_t system_dim() const noexcept {
        return std::size_t{1} << num_qubits;
    }
    [[nodiscard]] std::size_t bath_dim() const noexcept;
    [[nodiscard]] std::size_t dim() const noexcept {
        return system_dim() * bath_dim();
    }

    /// Validates norm (statevector) or Hermiticity/trace/positivity.
    static QState from_statevector(std::size_t num_qubits, ComplexMatrix psi,
                                   std::vector<std::size_t> bath_dims = {});
    static QState from_density(std::size_t num_qubits, ComplexMatrix rho,
                               std::vector<std::size_t> bath_dims = {});
    /// |label> on the system with every bath factor in its |0>.
    static QState basis(std::string_view label,
                        std::vector<std::size_t> bath_dims = {});

    [[nodiscard]] QState to_density() const;
    /// Throws std::domain_error when an invariant is violated beyond tol.
    void validate(double tol = kPropagatedTol) const;
};

/// Z-basis outcome probabilities over the system qubits, bath traced out.
std::vector<double> measure_probabilities(const QState &s);

/// Reduced system density matrix.
ComplexMatrix trace_out_bath(const QState &s);

/// Basis label for index `i` over `n` qubits, qubit 0 first.
std::string basis_label(std::size_t i, std::size_t n);
std::size_t label_index(std::string_view label);

/// Protected subspace C described by an orthonormal basis and its projector.
class CodeSpace {
  public:
    CodeSpace() = default;
    /// Throws std::invalid_argument unless the columns are orthonormal.
    static CodeSpace from_basis(std::vector<ComplexMatrix> basis);
    /// Span of computational basis states given as bit labels.
    static CodeSpace from_labels(std::initializer_list<std::string_view> labels);

    [[nodiscard]] std::size_t ambient_dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t rank() const noexcept { return basis_.size(); }
    [[nodiscard]] const std::vector<ComplexMatrix> &basis() const noexcept {
        return basis_;
    }
    [[nodiscard]] const ComplexMatrix &projector() const noexcept {
        return projector_;
    }
    /// Q = I - P
    [[nodiscard]] ComplexMatrix complement_projector() const;
    /// Orthonormal basis of the complement, from the eigenvectors of Q.
    [[nodiscard]] std::vector<ComplexMatrix> complement_basis() const;
    /// C tensored with a bath of dimension `bath_dim` (projector P x I).
    [[nodiscard]] CodeSpace extended(std::size_t bath_dim) const;
    /// True when ||Q psi|| <= tol.
    [[nodiscard]] bool contains(const ComplexMatrix &psi,
                                double tol = kPropagatedTol) const;

  private:
    std::size_t dim_ = 0;
    std::vector<ComplexMatrix> basis_;
    ComplexMatrix projector_;
};

} // namespace leolab
