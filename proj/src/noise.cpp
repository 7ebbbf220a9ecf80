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

#include "leolab/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace leolab {

namespace {

kernels::Mat2 to_mat2(const ComplexMatrix &m) {
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

ComplexMatrix scaled_to_norm(ComplexMatrix block, double target) {
    const double norm = spectral_norm(block);
    if (norm == 0.0)
        return block;
    block *= target / norm;
    return block;
}

} // namespace

std::string_view to_string(ChannelKind kind) {
    switch (kind) {
    case ChannelKind::amplitude_damping:
        return "amplitude_damping";
    case ChannelKind::dephasing:
        return "dephasing";
    case ChannelKind::depolarizing:
        return "depolarizing";
    }
    return "?";
}

std::vector<ComplexMatrix> kraus_ops(const NoiseChannel &ch) {
    const double g = ch.strength;
    if (!(g >= 0.0 && g <= 1.0))
        throw std::invalid_argument(std::string(to_string(ch.kind)) +
                                    ": strength must lie in [0, 1]");
    switch (ch.kind) {
    case ChannelKind::amplitude_damping:
        return {ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - g)}},
                ComplexMatrix{{0.0, std::sqrt(g)}, {0.0, 0.0}}};
    case ChannelKind::dephasing:
        return {cplx{std::sqrt(1.0 - g)} * pauli::I(),
                cplx{std::sqrt(g)} * pauli::Z()};
    case ChannelKind::depolarizing: {
        const cplx a{std::sqrt(1.0 - 0.75 * g)};
        const cplx b{std::sqrt(0.25 * g)};
        return {a * pauli::I(), b * pauli::X(), b * pauli::Y(),
                b * pauli::Z()};
    }
    }
    throw std::invalid_argument("kraus_ops: unknown channel kind");
}

void apply_channel(ComplexMatrix &rho, std::size_t num_qubits,
                   std::size_t bath_dim, const NoiseChannel &ch) {
    if (ch.target >= num_qubits)
        throw std::invalid_argument("apply_channel: target qubit out of range");
    const std::size_t dim = (std::size_t{1} << num_qubits) * bath_dim;
    if (rho.rows() != dim || rho.cols() != dim)
        throw std::invalid_argument("apply_channel: state dimension mismatch");
    if (ch.strength == 0.0)
        return;
    const std::size_t stride =
        (std::size_t{1} << (num_qubits - 1 - ch.target)) * bath_dim;
    ComplexMatrix out(dim, dim);
    for (const auto &k : kraus_ops(ch))
        kernels::accumulate_1q_conjugation(rho.entries(), out.entries(), dim,
                                           stride, to_mat2(k));
    rho = std::move(out);
}

QState apply_channel(const QState &s, const NoiseChannel &ch) {
    QState out = s.to_density();
    apply_channel(out.data, out.num_qubits, out.bath_dim(), ch);
    return out;
}

// NoiseHamiltonian

ComplexMatrix NoiseHamiltonian::total() const {
    const std::size_t ds = h_system.rows();
    const std::size_t db = h_bath.rows();
    return kron(h_system, ComplexMatrix::identity(db)) +
           kron(ComplexMatrix::identity(ds), h_bath) + h_interaction;
}

void NoiseHamiltonian::validate() const {
    if (!is_hermitian(h_system) || !is_hermitian(h_bath) ||
        !is_hermitian(h_interaction))
        throw std::domain_error("NoiseHamiltonian: term is not Hermitian");
    if (h_interaction.rows() != h_system.rows() * h_bath.rows())
        throw std::domain_error("NoiseHamiltonian: inconsistent dimensions");
}

NoiseHamiltonian make_leakage_hamiltonian(const CodeSpace &cs, double g_leak,
                                          double g_logical,
                                          std::size_t bath_dim,
                                          std::uint64_t seed) {
    if (bath_dim < 1)
        throw std::invalid_argument("make_leakage_hamiltonian: bath_dim >= 1");
    if (g_leak < 0.0 || g_logical < 0.0)
        throw std::invalid_argument(
            "make_leakage_hamiltonian: couplings must be non-negative");
    Rng rng(seed);
    const CodeSpace joint = cs.extended(bath_dim);
    const auto parts =
        decompose(random_hermitian(joint.ambient_dim(), rng), joint);

    NoiseHamiltonian h;
    h.codespace = cs;
    h.h_system = ComplexMatrix(cs.ambient_dim(), cs.ambient_dim());
    h.h_bath = bath_dim > 1
                   ? scaled_to_norm(random_hermitian(bath_dim, rng), g_logical)
                   : ComplexMatrix(1, 1);
    h.h_interaction = scaled_to_norm(parts.e_part, g_logical) +
                      scaled_to_norm(parts.eperp_part, g_logical) +
                      scaled_to_norm(parts.l_part, g_leak);
    return h;
}

// NoiseConfig / NoiseModel

NoiseConfig NoiseConfig::defaults() {
    NoiseConfig cfg;
    cfg.amplitude_damping = 1.2e-3;
    cfg.dephasing = 8e-4;
    cfg.coherent = CoherentConfig{};
    cfg.coherent->g_leak = 3.0e-3;
    cfg.coherent->g_logical = 5.0e-4;
    cfg.coherent->bath_dim = 1;
    cfg.coherent->dt = 1.0;
    cfg.coherent->seed = 11;
    return cfg;
}

void NoiseConfig::validate() const {
    for (double g : {amplitude_damping, dephasing, depolarizing})
        if (!(g >= 0.0 && g <= 1.0))
            throw std::invalid_argument(
                "noise: channel strengths must lie in [0, 1]");
    if (coherent) {
        if (!(coherent->dt > 0.0))
            throw std::invalid_argument("noise: coherent dt must be > 0");
        if (coherent->bath_dim < 1)
            throw std::invalid_argument("noise: bath_dim must be >= 1");
        if (coherent->g_leak < 0.0 || coherent->g_logical < 0.0)
            throw std::invalid_argument(
                "noise: couplings must be non-negative");
    }
}

bool NoiseModel::has_channels() const {
    for (const auto &ch : channels)
        if (ch.strength > 0.0)
            return true;
    return false;
}

NoiseModel resolve_noise(const NoiseConfig &cfg, std::size_t num_qubits,
                         const CodeSpace &cs, std::uint64_t rng_seed) {
    cfg.validate();
    NoiseModel nm;
    nm.rng_seed = rng_seed;
    nm.noisy_preparation = cfg.noisy_preparation;
    const std::pair<ChannelKind, double> kinds[] = {
        {ChannelKind::amplitude_damping, cfg.amplitude_damping},
        {ChannelKind::dephasing, cfg.dephasing},
        {ChannelKind::depolarizing, cfg.depolarizing}};
    for (const auto &[kind, strength] : kinds) {
        if (strength == 0.0)
            continue;
        for (std::size_t q = 0; q < num_qubits; ++q)
            nm.channels.push_back({kind, strength, q});
    }
    if (cfg.coherent) {
        const auto &c = *cfg.coherent;
        if (cs.ambient_dim() != (std::size_t{1} << num_qubits))
            throw std::invalid_argument(
                "resolve_noise: codespace does not match register size");
        nm.coherent = make_leakage_hamiltonian(cs, c.g_leak, c.g_logical,
                                               c.bath_dim, c.seed);
        nm.dt = c.dt;
    }
    return nm;
}

} // namespace leolab
