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
 * JSON configuration documents for noise, sweeps and the kick study.
 *
 * Noise document:
 *   { "amplitude_damping": g, "dephasing": g, "depolarizing": g,
 *     "noisy_preparation": bool,
 *     "coherent": { "g_leak": x, "g_logical": x, "bath_dim": n,
 *                   "dt": x, "seed": n } }
 * Keys left out of a noise document are zero / absent.
 *
 * Sweep document: "which", "variant" (string or list of strings), "tau"
 * (list, "default" or "full"), "shots", "seed", "noise". A missing "noise"
 * means NoiseConfig::defaults(); "noise": null means noiseless.
 *
 * Kick-study document: "codespace", "coherent", "m", "t".
 */

#pragma once

#include "leolab/experiments.hpp"
#include "leolab/noise.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leolab {

/// Malformed or unreadable configuration; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SweepConfig {
    std::vector<LeoKind> experiments{LeoKind::z2};
    std::vector<PulseVariant> variants{PulseVariant::leo, PulseVariant::free};
    std::vector<std::size_t> tau = default_tau_grid();
    std::size_t shots = kDefaultShots;
    std::uint64_t seed = 0;
    NoiseConfig noise = NoiseConfig::defaults();

    /// One ExperimentConfig per (experiment, variant), experiments outer.
    [[nodiscard]] std::vector<ExperimentConfig> expand() const;
};

NoiseConfig parse_noise_config(std::string_view json_text);
SweepConfig parse_sweep_config(std::string_view json_text);
KickStudyConfig parse_kick_study_config(std::string_view json_text);

/// Reads a whole file; throws ConfigError if it cannot be opened.
std::string read_text_file(const std::filesystem::path &path);

SweepConfig load_sweep_config(const std::filesystem::path &path);
KickStudyConfig load_kick_study_config(const std::filesystem::path &path);

} // namespace leolab
