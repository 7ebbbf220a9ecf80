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

#include "leolab/qcore.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace leolab {

namespace {

using EigenMat =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenMat> as_eigen(const ComplexMatrix &m) {
    return {m.entries().data(), static_cast<Eigen::Index>(m.rows()),
            static_cast<Eigen::Index>(m.cols())};
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd &m) {
    ComplexMatrix out(static_cast<std::size_t>(m.rows()),
                      static_cast<std::size_t>(m.cols()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                m(r, c);
    return out;
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b,
                        const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

} // namespace

// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("ComplexMatrix: entry count != rows*cols");
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
    return {rows, cols};
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const cplx> values) {
    return {values.size(), 1, std::vector<cplx>(values.begin(), values.end())};
}

ComplexMatrix ComplexMatrix::basis_vector(std::size_t dim, std::size_t index) {
    if (index >= dim)
        throw std::out_of_range("basis_vector: index out of range");
    ComplexMatrix v(dim, 1);
    v(index, 0) = 1.0;
    return v;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(c, r) = std::conj((*this)(r, c));
    return out;
}

cplx ComplexMatrix::trace() const {
    if (!is_square())
        throw std::invalid_argument("trace: matrix not square");
    cplx t{};
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+=");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-=");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx scalar) {
    for (auto &e : entries_)
        e *= scalar;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    return a += b;
}
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    return a -= b;
}
ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    return matmul(a, b);
}

// Free operations

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: dimension mismatch (" +
                                    std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + ")");
    ComplexMatrix out(a.rows(), b.cols());
    kernels::matmul(a.entries(), b.entries(), out.entries(), a.rows(),
                    a.cols(), b.cols());
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix kron_all(std::initializer_list<ComplexMatrix> factors) {
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (const auto &f : factors)
        out = kron(out, f);
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix &u, const ComplexMatrix &rho) {
    if (u.cols() != rho.rows() || !rho.is_square())
        throw std::invalid_argument("conjugate: dimension mismatch");
    const ComplexMatrix tmp = matmul(u, rho);
    ComplexMatrix out(u.rows(), u.rows());
    kernels::matmul_adjoint_rhs(tmp.entries(), u.entries(), out.entries(),
                                u.rows(), u.cols(), u.rows());
    return out;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return matmul(a, b) - matmul(b, a);
}

ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return matmul(a, b) + matmul(b, a);
}

ComplexMatrix expm_hermitian(const ComplexMatrix &h, double t) {
    if (!h.is_square() || !is_hermitian(h))
        throw std::invalid_argument("expm_hermitian: input is not Hermitian");
    const Eigen::MatrixXcd dense = as_eigen(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("expm_hermitian: eigendecomposition failed");
    const Eigen::VectorXd &w = solver.eigenvalues();
    Eigen::VectorXcd phases(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i)
        phases(i) = std::polar(1.0, -w(i) * t);
    const Eigen::MatrixXcd &v = solver.eigenvectors();
    return from_eigen(v * phases.asDiagonal() * v.adjoint());
}

std::vector<double> eigenvalues_hermitian(const ComplexMatrix &h) {
    if (!h.is_square() || !is_hermitian(h, 1e-9))
        throw std::invalid_argument(
            "eigenvalues_hermitian: input is not Hermitian");
    const Eigen::MatrixXcd dense = as_eigen(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        dense, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd &w = solver.eigenvalues();
    return {w.data(), w.data() + w.size()};
}

double max_abs(const ComplexMatrix &m) {
    double best = 0.0;
    for (const auto &e : m.entries())
        best = std::max(best, std::abs(e));
    return best;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double best = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        best = std::max(best, std::abs(a.entries()[i] - b.entries()[i]));
    return best;
}

double spectral_norm(const ComplexMatrix &m) {
    if (m.entries().empty())
        return 0.0;
    const Eigen::MatrixXcd dense = as_eigen(m);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dense);
    return svd.singularValues()(0);
}

cplx hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "hs_inner");
    cplx acc{};
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        acc += std::conj(a.entries()[i]) * b.entries()[i];
    return acc;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    if (!m.is_square())
        return false;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = r; c < m.cols(); ++c)
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol)
                return false;
    return true;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    if (!m.is_square())
        return false;
    return max_abs_diff(matmul(m.adjoint(), m),
                        ComplexMatrix::identity(m.rows())) <= tol;
}

double phase_insensitive_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "phase_insensitive_diff");
    const auto eb = b.entries();
    const auto pivot = static_cast<std::size_t>(std::distance(
        eb.begin(), std::max_element(eb.begin(), eb.end(),
                                     [](cplx x, cplx y) {
                                         return std::abs(x) < std::abs(y);
                                     })));
    if (eb.empty() || std::abs(eb[pivot]) == 0.0)
        return max_abs(a);
    const cplx ratio = a.entries()[pivot] / eb[pivot];
    const cplx phase =
        std::abs(ratio) > 0.0 ? ratio / std::abs(ratio) : cplx{1.0};
    return max_abs_diff(a, phase * b);
}

namespace pauli {
ComplexMatrix I() { return ComplexMatrix::identity(2); }
ComplexMatrix X() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix Y() { return {{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}}; }
ComplexMatrix Z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
ComplexMatrix H() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{s, s}, {s, -s}};
}
} // namespace pauli

// QState

std::size_t QState::bath_dim() const noexcept {
    return std::accumulate(bath_dims.begin(), bath_dims.end(), std::size_t{1},
                           std::multiplies<>());
}

QState QState::from_statevector(std::size_t num_qubits, ComplexMatrix psi,
                                std::vector<std::size_t> bath_dims) {
    QState s{num_qubits, std::move(bath_dims), Representation::statevector,
             std::move(psi)};
    s.validate();
    return s;
}

QState QState::from_density(std::size_t num_qubits, ComplexMatrix rho,
                            std::vector<std::size_t> bath_dims) {
    QState s{num_qubits, std::move(bath_dims), Representation::density_matrix,
             std::move(rho)};
    s.validate();
    return s;
}

QState QState::basis(std::string_view label,
                     std::vector<std::size_t> bath_dims) {
    QState s;
    s.num_qubits = label.size();
    s.bath_dims = std::move(bath_dims);
    s.representation = Representation::statevector;
    s.data = ComplexMatrix::basis_vector(s.dim(),
                                         label_index(label) * s.bath_dim());
    return s;
}

QState QState::to_density() const {
    if (representation == Representation::density_matrix)
        return *this;
    QState out = *this;
    out.representation = Representation::density_matrix;
    out.data = matmul(data, data.adjoint());
    return out;
}

void QState::validate(double tol) const {
    const std::size_t d = dim();
    if (representation == Representation::statevector) {
        if (data.rows() != d || data.cols() != 1)
            throw std::domain_error("QState: statevector has wrong shape");
        double norm2 = 0.0;
        for (const auto &a : data.entries())
            norm2 += std::norm(a);
        if (std::abs(std::sqrt(norm2) - 1.0) > tol)
            throw std::domain_error("QState: statevector not normalized");
        return;
    }
    if (data.rows() != d || data.cols() != d)
        throw std::domain_error("QState: density matrix has wrong shape");
    if (!is_hermitian(data, tol))
        throw std::domain_error("QState: density matrix not Hermitian");
    if (std::abs(data.trace() - cplx{1.0}) > tol)
        throw std::domain_error("QState: density matrix trace != 1");
    const auto w = eigenvalues_hermitian(data);
    if (!w.empty() && w.front() < -tol)
        throw std::domain_error("QState: density matrix not positive");
}

ComplexMatrix trace_out_bath(const QState &s) {
    const QState rho = s.to_density();
    const std::size_t ns = s.system_dim();
    const std::size_t nb = s.bath_dim();
    if (nb == 1)
        return rho.data;
    ComplexMatrix out(ns, ns);
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < ns; ++j) {
            cplx acc{};
            for (std::size_t k = 0; k < nb; ++k)
                acc += rho.data(i * nb + k, j * nb + k);
            out(i, j) = acc;
        }
    return out;
}

std::vector<double> measure_probabilities(const QState &s) {
    const std::size_t ns = s.system_dim();
    const std::size_t nb = s.bath_dim();
    std::vector<double> p(ns, 0.0);
    if (s.representation == Representation::statevector) {
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t k = 0; k < nb; ++k)
                p[i] += std::norm(s.data(i * nb + k, 0));
    } else {
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t k = 0; k < nb; ++k)
                p[i] += s.data(i * nb + k, i * nb + k).real();
    }
    // clip round-off negatives from the diagonal
    for (auto &x : p)
        x = std::max(x, 0.0);
    return p;
}

std::string basis_label(std::size_t i, std::size_t n) {
    std::string label(n, '0');
    for (std::size_t q = 0; q < n; ++q)
        if ((i >> (n - 1 - q)) & 1U)
            label[q] = '1';
    return label;
}

std::size_t label_index(std::string_view label) {
    std::size_t idx = 0;
    for (char ch : label) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("label_index: bad bit label '" +
                                        std::string(label) + "'");
        idx = (idx << 1) | static_cast<std::size_t>(ch == '1');
    }
    return idx;
}

// CodeSpace

CodeSpace CodeSpace::from_basis(std::vector<ComplexMatrix> basis) {
    if (basis.empty())
        throw std::invalid_argument("CodeSpace: empty basis");
    const std::size_t dim = basis.front().rows();
    for (const auto &b : basis)
        if (b.rows() != dim || b.cols() != 1)
            throw std::invalid_argument(
                "CodeSpace: basis vectors must be columns of equal length");
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            const cplx ip = hs_inner(basis[i], basis[j]);
            const cplx expected = i == j ? cplx{1.0} : cplx{};
            if (std::abs(ip - expected) > kStructuralTol)
                throw std::invalid_argument(
                    "CodeSpace: basis is not orthonormal");
        }
    CodeSpace cs;
    cs.dim_ = dim;
    cs.projector_ = ComplexMatrix(dim, dim);
    for (const auto &b : basis)
        cs.projector_ += matmul(b, b.adjoint());
    cs.basis_ = std::move(basis);
    return cs;
}

CodeSpace
CodeSpace::from_labels(std::initializer_list<std::string_view> labels) {
    std::vector<ComplexMatrix> basis;
    for (auto label : labels)
        basis.push_back(ComplexMatrix::basis_vector(
            std::size_t{1} << label.size(), label_index(label)));
    return from_basis(std::move(basis));
}

ComplexMatrix CodeSpace::complement_projector() const {
    return ComplexMatrix::identity(dim_) - projector_;
}

std::vector<ComplexMatrix> CodeSpace::complement_basis() const {
    const ComplexMatrix q = complement_projector();
    const Eigen::MatrixXcd dense = as_eigen(q);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
    std::vector<ComplexMatrix> out;
    const auto &w = solver.eigenvalues();
    const auto &v = solver.eigenvectors();
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w(i) < 0.5)
            continue;
        ComplexMatrix col(dim_, 1);
        for (std::size_t r = 0; r < dim_; ++r)
            col(r, 0) = v(static_cast<Eigen::Index>(r), i);
        out.push_back(std::move(col));
    }
    return out;
}

CodeSpace CodeSpace::extended(std::size_t bath_dim) const {
    if (bath_dim <= 1)
        return *this;
    std::vector<ComplexMatrix> basis;
    for (const auto &b : basis_)
        for (std::size_t k = 0; k < bath_dim; ++k)
            basis.push_back(kron(b, ComplexMatrix::basis_vector(bath_dim, k)));
    return from_basis(std::move(basis));
}

bool CodeSpace::contains(const ComplexMatrix &psi, double tol) const {
    const ComplexMatrix leaked = matmul(complement_projector(), psi);
    double norm2 = 0.0;
    for (const auto &a : leaked.entries())
        norm2 += std::norm(a);
    return std::sqrt(norm2) <= tol;
}

} // namespace leolab
