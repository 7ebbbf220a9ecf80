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
 * Circuit evolution under noise, shot sampling and the parity-kick
 * propagator.
 *
 * Each time slot runs: gate unitaries, then every Markovian channel, then
 * the coherent drift exp(-i H dt). Noise acts only inside the pulse block
 * unless the model asks for noisy preparation.
 */

#pragma once

#include "leolab/algebra.hpp"
#include "leolab/circuits.hpp"
#include "leolab/noise.hpp"
#include "leolab/qcore.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace leolab {

struct ShotCounts {
    std::map<std::string, std::size_t> counts;
    std::size_t shots = 0;

    [[nodiscard]] std::size_t count(const std::string &label) const {
        const auto it = counts.find(label);
        return it == counts.end() ? 0 : it->second;
    }
};

struct KickSchedule {
    std::size_t m = 1;
    double t_total = 0.0;
    LeoOperator leo;
    NoiseHamiltonian hamiltonian;

    void validate() const;
};

/// Called after every slot with the slot index and the current state.
using SlotObserver = std::function<void(std::size_t, const QState &)>;

/**
 * Final state of `c` under `nm`, starting from |0...0> with the bath in |0>.
 * Uses a statevector when no channel is active, a density matrix otherwise.
 */
QState evolve(const Circuit &c, const NoiseModel &nm,
              const SlotObserver &observer = {});

/// Full-register operator for one gate, bath factor last.
ComplexMatrix embed_gate(const Gate &g, std::size_t num_qubits,
                         std::size_t bath_dim = 1);

/**
 * Multinomial sample of `shots` outcomes. Draws are compared against
 * integer thresholds so a seed gives the same counts everywhere.
 */
ShotCounts sample_counts(std::span<const double> probabilities,
                         std::size_t num_qubits, std::size_t shots,
                         std::uint64_t seed);

ShotCounts run_circuit(const Circuit &c, const NoiseModel &nm,
                       std::size_t shots, std::uint64_t seed);

/// (1/N) sum U_i H U_i^dagger
ComplexMatrix effective_hamiltonian(const ComplexMatrix &h,
                                    std::span<const ComplexMatrix> pulses);

/// (e^{-iHt/m} R^dagger e^{-iHt/m} R)^m on system (x) bath.
ComplexMatrix parity_kick_propagator(const KickSchedule &ks);

/// e^{-2i(H_E + H_Eperp)t}: the m -> infinity limit of the kick product.
ComplexMatrix kick_limit(const KickSchedule &ks);

/// e^{-2iHt}: the same total time with no kicks.
ComplexMatrix free_propagator(const KickSchedule &ks);

/// ||P u Q|| (spectral norm), with P extended over the bath as needed.
double leakage_amplitude(const ComplexMatrix &u, const CodeSpace &cs);

/**
 * <psi0| u^dagger Q u |psi0> with the bath traced out. Throws
 * std::invalid_argument when psi0 has weight outside C above 1e-10.
 */
double leakage_probability(const ComplexMatrix &u, const CodeSpace &cs,
                           const QState &psi0);

} // namespace leolab
