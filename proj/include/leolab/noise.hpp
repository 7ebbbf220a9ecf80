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
 * Decoherence models: Markovian single-qubit channels applied once per gate
 * slot, and a coherent system-bath Hamiltonian whose leakage block is what
 * parity kicks remove.
 */

#pragma once

#include "leolab/algebra.hpp"
#include "leolab/kernels.hpp"
#include "leolab/qcore.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace leolab {

enum class ChannelKind { amplitude_damping, dephasing, depolarizing };

std::string_view to_string(ChannelKind kind);

struct NoiseChannel {
    ChannelKind kind = ChannelKind::amplitude_damping;
    double strength = 0.0; ///< probability per slot
    std::size_t target = 0;
};

/**
 * Amplitude damping {diag(1, sqrt(1-g)), sqrt(g)|0><1|}, dephasing
 * {sqrt(1-g) I, sqrt(g) Z}, depolarizing {sqrt(1-3g/4) I, sqrt(g/4) X,Y,Z}.
 * Throws std::invalid_argument unless 0 <= g <= 1.
 */
std::vector<ComplexMatrix> kraus_ops(const NoiseChannel &ch);

/// rho -> sum K rho K^dagger on ch.target. Statevectors are promoted.
QState apply_channel(const QState &s, const NoiseChannel &ch);

/// In-place variant on a raw density matrix of a state shaped like `shape`.
void apply_channel(ComplexMatrix &rho, std::size_t num_qubits,
                   std::size_t bath_dim, const NoiseChannel &ch);

/**
 * H = H_S (x) I_B + I_S (x) H_B + H_SB. The codespace lives on the system
 * factor; blocks() classifies H_SB against C (x) I_B.
 */
struct NoiseHamiltonian {
    ComplexMatrix h_system;
    ComplexMatrix h_bath;
    ComplexMatrix h_interaction;
    CodeSpace codespace;

    [[nodiscard]] std::size_t bath_dim() const noexcept {
        return h_bath.rows();
    }
    [[nodiscard]] CodeSpace extended_codespace() const {
        return codespace.extended(bath_dim());
    }
    [[nodiscard]] ComplexMatrix total() const;
    [[nodiscard]] OperatorDecomposition blocks() const {
        return decompose(h_interaction, extended_codespace());
    }
    /// Throws std::domain_error when a term is not Hermitian.
    void validate() const;
};

/**
 * Random Hermitian H_SB on C (x) bath whose leakage block has operator norm
 * g_leak and whose logical and complement blocks each have norm g_logical.
 * For bath_dim > 1 the bath also gets its own random H_B of norm g_logical.
 * H_S is zero. The draw is fully determined by `seed`.
 */
NoiseHamiltonian make_leakage_hamiltonian(const CodeSpace &cs, double g_leak,
                                          double g_logical,
                                          std::size_t bath_dim,
                                          std::uint64_t seed);

struct CoherentConfig {
    double g_leak = 0.0;
    double g_logical = 0.0;
    std::size_t bath_dim = 1;
    double dt = 1.0;
    std::uint64_t seed = 0;
};

/// Qubit-count agnostic noise settings as they appear in config files.
struct NoiseConfig {
    double amplitude_damping = 0.0;
    double dephasing = 0.0;
    double depolarizing = 0.0;
    std::optional<CoherentConfig> coherent;
    /// Also apply noise during state preparation and un-computation.
    bool noisy_preparation = false;

    /// Default calibration knobs: damping 1.2e-3, dephasing 8e-4 and a
    /// coherent leakage term.
    static NoiseConfig defaults();
    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

/// Noise resolved against a concrete register and codespace.
struct NoiseModel {
    std::vector<NoiseChannel> channels;
    std::optional<NoiseHamiltonian> coherent;
    double dt = 0.0;
    std::uint64_t rng_seed = 0;
    bool noisy_preparation = false;

    [[nodiscard]] bool has_channels() const;
    [[nodiscard]] std::size_t bath_dim() const {
        return coherent ? coherent->bath_dim() : 1;
    }
};

/// One channel of each non-zero kind on every qubit, plus H_SB if configured.
NoiseModel resolve_noise(const NoiseConfig &cfg, std::size_t num_qubits,
                         const CodeSpace &cs, std::uint64_t rng_seed = 0);

} // namespace leolab
