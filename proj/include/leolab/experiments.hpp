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
 * Pulse-count sweeps comparing LEO pulses against free evolution, and the
 * parity-kick convergence study.
 */

#pragma once

#include "leolab/algebra.hpp"
#include "leolab/circuits.hpp"
#include "leolab/engine.hpp"
#include "leolab/noise.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace leolab {

inline constexpr std::size_t kDefaultShots = 1024;
inline constexpr std::size_t kMaxTau = 10000;

/// {1, 5, 10, 20, 50, 100, 150, 200, 300, 400, 500, 600}
std::vector<std::size_t> default_tau_grid();
/// 1, 2, ..., 600
std::vector<std::size_t> full_tau_grid();

struct ExperimentConfig {
    LeoKind which = LeoKind::z2;
    PulseVariant variant = PulseVariant::leo;
    std::vector<std::size_t> tau_values = default_tau_grid();
    std::size_t shots = kDefaultShots;
    NoiseConfig noise;
    std::uint64_t seed = 0;

    void validate() const;
    /// FNV-1a over a canonical rendering of every field, as 16 hex digits.
    [[nodiscard]] std::string hash() const;
};

struct FidelityPoint {
    std::size_t tau = 0;
    double fidelity = 0.0;
    std::size_t shots = 0;
};

struct FidelitySeries {
    LeoKind which = LeoKind::z2;
    PulseVariant variant = PulseVariant::leo;
    std::uint64_t seed = 0;
    std::string config_hash;
    std::vector<FidelityPoint> points; ///< strictly increasing tau
};

/// Fraction of shots whose label is in `labels`.
double subspace_fidelity(const ShotCounts &counts,
                         std::span<const std::string> labels);

/// Shot seed for one tau point: base seed xor tau.
inline std::uint64_t point_seed(std::uint64_t base, std::size_t tau) {
    return base ^ static_cast<std::uint64_t>(tau);
}

/**
 * Runs one circuit per tau. Points are independent and run on up to
 * `max_threads` OpenMP threads (0 means thread_cap()). Output does not
 * depend on the thread count.
 */
FidelitySeries run_sweep(const ExperimentConfig &cfg,
                         std::size_t max_threads = 0);

/// LEO_LAB_THREADS if set and positive, otherwise the OpenMP default.
std::size_t thread_cap();

/// Header `experiment,variant,tau,fidelity,shots,seed`, LF endings,
/// fidelity with six decimals.
std::string to_csv(std::span<const FidelitySeries> series);
/// Throws std::runtime_error on I/O failure.
void write_csv(std::span<const FidelitySeries> series,
               const std::filesystem::path &path);

// Parity-kick study

struct KickStudyConfig {
    LeoKind codespace = LeoKind::z2;
    CoherentConfig coherent;
    std::vector<std::size_t> m_values;
    /// Dimensionless t * ||H||.
    std::vector<double> t_values;

    static KickStudyConfig defaults();
    void validate() const;
};

struct KickStudyRow {
    std::size_t m = 1;
    double t = 0.0;
    double leakage_with_kick = 0.0; ///< ||P U_m Q||
    double leakage_free = 0.0;      ///< ||P e^{-2iHt} Q||
    double distance_to_limit = 0.0; ///< ||U_m - e^{-2i(H_E+H_Eperp)t}||
};

struct KickStudyResult {
    std::vector<KickStudyRow> rows;
    double hamiltonian_norm = 0.0;
    double slope_with_kick = 0.0; ///< d log leakage / d log t, smallest m
    double slope_free = 0.0;
    double slope_vs_m = 0.0; ///< d log distance / d log m at the largest t
};

KickStudyResult run_kick_study(const KickStudyConfig &cfg);

/// Header `m,t,leakage_with_kick,leakage_free,distance_to_limit`.
std::string to_csv(const KickStudyResult &result);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

} // namespace leolab
