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

#include "leolab/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace leolab {

namespace {

std::string moment_key(const Circuit &c, const Moment &m) {
    std::string key;
    for (auto gi : m.gates) {
        const Gate &g = c.gates[gi];
        key += std::to_string(static_cast<int>(g.kind));
        for (auto q : g.targets)
            key += ':' + std::to_string(q);
        if (g.angle != 0.0)
            key += '@' + std::to_string(g.angle);
        key += ';';
    }
    return key;
}

// Extends a system-only codespace over the bath dimension implied by `dim`.
CodeSpace match_dimension(const CodeSpace &cs, std::size_t dim) {
    if (dim == cs.ambient_dim())
        return cs;
    if (dim % cs.ambient_dim() != 0)
        throw std::invalid_argument(
            "operator dimension is not a multiple of the codespace dimension");
    return cs.extended(dim / cs.ambient_dim());
}

} // namespace

void KickSchedule::validate() const {
    if (m < 1)
        throw std::invalid_argument("KickSchedule: m must be >= 1");
    if (!(t_total > 0.0))
        throw std::invalid_argument("KickSchedule: t_total must be > 0");
    hamiltonian.validate();
    if (leo.matrix().rows() != hamiltonian.h_system.rows())
        throw std::invalid_argument(
            "KickSchedule: LEO and system Hamiltonian dimensions differ");
}

ComplexMatrix embed_gate(const Gate &g, std::size_t num_qubits,
                         std::size_t bath_dim) {
    g.validate(num_qubits);
    const ComplexMatrix local = g.matrix();
    const std::size_t ns = std::size_t{1} << num_qubits;
    std::vector<std::size_t> shifts;
    for (auto q : g.targets)
        shifts.push_back(num_qubits - 1 - q);
    std::size_t mask = 0;
    for (auto s : shifts)
        mask |= std::size_t{1} << s;
    auto local_index = [&](std::size_t i) {
        std::size_t li = 0;
        for (auto s : shifts)
            li = (li << 1) | ((i >> s) & 1U);
        return li;
    };
    ComplexMatrix sys(ns, ns);
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < ns; ++j)
            if ((i & ~mask) == (j & ~mask))
                sys(i, j) = local(local_index(i), local_index(j));
    return bath_dim > 1 ? kron(sys, ComplexMatrix::identity(bath_dim)) : sys;
}

QState evolve(const Circuit &c, const NoiseModel &nm,
              const SlotObserver &observer) {
    c.validate();
    const std::size_t bath = nm.bath_dim();
    if (nm.coherent &&
        nm.coherent->h_system.rows() != (std::size_t{1} << c.num_qubits))
        throw std::invalid_argument(
            "evolve: noise Hamiltonian does not match the circuit register");
    for (const auto &ch : nm.channels)
        if (ch.target >= c.num_qubits)
            throw std::invalid_argument(
                "evolve: noise channel targets a qubit outside the circuit");

    std::vector<std::size_t> bath_dims;
    if (bath > 1)
        bath_dims.push_back(bath);
    QState state = QState::basis(std::string(c.num_qubits, '0'), bath_dims);
    const bool mixed = nm.has_channels();
    if (mixed)
        state = state.to_density();

    std::optional<ComplexMatrix> drift;
    if (nm.coherent)
        drift = expm_hermitian(nm.coherent->total(), nm.dt);

    auto apply_unitary = [&](const ComplexMatrix &u) {
        state.data = mixed ? conjugate(u, state.data) : matmul(u, state.data);
    };

    std::map<std::string, ComplexMatrix> cache;
    const auto moments = schedule_moments(c);
    for (std::size_t slot = 0; slot < moments.size(); ++slot) {
        const Moment &m = moments[slot];
        if (!m.gates.empty()) {
            const std::string key = moment_key(c, m);
            auto it = cache.find(key);
            if (it == cache.end()) {
                ComplexMatrix u = ComplexMatrix::identity(state.dim());
                for (auto gi : m.gates)
                    u = matmul(embed_gate(c.gates[gi], c.num_qubits, bath), u);
                it = cache.emplace(key, std::move(u)).first;
            }
            apply_unitary(it->second);
        }
        if (m.in_pulse_block || nm.noisy_preparation) {
            if (mixed)
                for (const auto &ch : nm.channels)
                    apply_channel(state.data, c.num_qubits, bath, ch);
            if (drift)
                apply_unitary(*drift);
        }
        if (observer)
            observer(slot, state);
    }
    return state;
}

ShotCounts sample_counts(std::span<const double> probabilities,
                         std::size_t num_qubits, std::size_t shots,
                         std::uint64_t seed) {
    if (shots == 0)
        throw std::invalid_argument("sample_counts: shots must be >= 1");
    if (probabilities.size() != (std::size_t{1} << num_qubits))
        throw std::invalid_argument("sample_counts: probability vector size");
    double total = 0.0;
    for (double p : probabilities) {
        if (!(p >= -kPropagatedTol))
            throw std::invalid_argument("sample_counts: negative probability");
        total += std::max(p, 0.0);
    }
    if (std::abs(total - 1.0) > 1e-6)
        throw std::invalid_argument("sample_counts: probabilities do not sum to 1");

    constexpr std::uint64_t scale = std::uint64_t{1} << 53;
    std::vector<std::uint64_t> thresholds(probabilities.size());
    double cumulative = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        cumulative += std::max(probabilities[i], 0.0);
        thresholds[i] = static_cast<std::uint64_t>(
            std::llround(cumulative / total * static_cast<double>(scale)));
    }
    thresholds.back() = scale;

    Rng rng(seed);
    std::vector<std::size_t> tally(probabilities.size(), 0);
    for (std::size_t s = 0; s < shots; ++s) {
        const std::uint64_t draw = rng() >> 11;
        const auto it =
            std::upper_bound(thresholds.begin(), thresholds.end(), draw);
        ++tally[static_cast<std::size_t>(it - thresholds.begin())];
    }
    ShotCounts out;
    out.shots = shots;
    for (std::size_t i = 0; i < tally.size(); ++i)
        if (tally[i] > 0)
            out.counts.emplace(basis_label(i, num_qubits), tally[i]);
    return out;
}

ShotCounts run_circuit(const Circuit &c, const NoiseModel &nm,
                       std::size_t shots, std::uint64_t seed) {
    if (shots == 0)
        throw std::invalid_argument("run_circuit: shots must be >= 1");
    const QState final_state = evolve(c, nm);
    const auto probs = measure_probabilities(final_state);
    return sample_counts(probs, c.num_qubits, shots, seed);
}

ComplexMatrix effective_hamiltonian(const ComplexMatrix &h,
                                    std::span<const ComplexMatrix> pulses) {
    if (pulses.empty())
        throw std::invalid_argument("effective_hamiltonian: no pulses");
    ComplexMatrix acc(h.rows(), h.cols());
    for (const auto &u : pulses) {
        if (!u.is_square() || u.rows() != h.rows() || !h.is_square())
            throw std::invalid_argument(
                "effective_hamiltonian: dimension mismatch");
        acc += conjugate(u, h);
    }
    acc *= 1.0 / static_cast<double>(pulses.size());
    return acc;
}

ComplexMatrix parity_kick_propagator(const KickSchedule &ks) {
    ks.validate();
    const ComplexMatrix h = ks.hamiltonian.total();
    const std::size_t bath = ks.hamiltonian.bath_dim();
    const ComplexMatrix r =
        bath > 1 ? kron(ks.leo.matrix(), ComplexMatrix::identity(bath))
                 : ks.leo.matrix();
    const ComplexMatrix step =
        expm_hermitian(h, ks.t_total / static_cast<double>(ks.m));
    const ComplexMatrix cycle = step * r.adjoint() * step * r;
    ComplexMatrix out = cycle;
    for (std::size_t k = 1; k < ks.m; ++k)
        out = matmul(cycle, out);
    return out;
}

ComplexMatrix kick_limit(const KickSchedule &ks) {
    ks.validate();
    const auto parts =
        decompose(ks.hamiltonian.total(), ks.hamiltonian.extended_codespace());
    return expm_hermitian(parts.e_part + parts.eperp_part, 2.0 * ks.t_total);
}

ComplexMatrix free_propagator(const KickSchedule &ks) {
    ks.validate();
    return expm_hermitian(ks.hamiltonian.total(), 2.0 * ks.t_total);
}

double leakage_amplitude(const ComplexMatrix &u, const CodeSpace &cs) {
    const CodeSpace full = match_dimension(cs, u.rows());
    return spectral_norm(full.projector() * u * full.complement_projector());
}

double leakage_probability(const ComplexMatrix &u, const CodeSpace &cs,
                           const QState &psi0) {
    const CodeSpace full = match_dimension(cs, u.rows());
    if (psi0.dim() != u.rows())
        throw std::invalid_argument("leakage_probability: state dimension");
    const ComplexMatrix rho = psi0.to_density().data;
    const ComplexMatrix q = full.complement_projector();
    const double outside = (q * rho).trace().real();
    if (outside > kPropagatedTol)
        throw std::invalid_argument(
            "leakage_probability: initial state is not in the codespace");
    const double leaked = (q * conjugate(u, rho)).trace().real();
    return std::clamp(leaked, 0.0, 1.0);
}

} // namespace leolab
