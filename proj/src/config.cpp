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

#include "leolab/config.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace leolab {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json &j, std::set<std::string> allowed,
                         std::string_view where) {
    if (!j.is_object())
        throw ConfigError(std::string(where) + ": expected an object");
    for (const auto &[key, value] : j.items())
        if (!allowed.contains(key))
            throw ConfigError(std::string(where) + ": unknown key '" + key +
                              "'");
}

template <typename T>
T get_or(const json &j, const char *key, T fallback, std::string_view where) {
    if (!j.contains(key))
        return fallback;
    const json &v = j.at(key);
    if constexpr (std::is_unsigned_v<T> && !std::is_same_v<T, bool>) {
        if (!v.is_number_unsigned())
            throw ConfigError(std::string(where) + ": '" + key +
                              "' must be a non-negative integer");
    } else if constexpr (std::is_same_v<T, std::vector<std::size_t>>) {
        if (!v.is_array() ||
            !std::all_of(v.begin(), v.end(),
                         [](const json &e) { return e.is_number_unsigned(); }))
            throw ConfigError(std::string(where) + ": '" + key +
                              "' must be a list of non-negative integers");
    }
    try {
        return v.get<T>();
    } catch (const json::exception &) {
        throw ConfigError(std::string(where) + ": bad value for '" + key +
                          "'");
    }
}

std::vector<std::string> string_or_list(const json &j, const char *key,
                                        std::string_view where) {
    const json &v = j.at(key);
    if (v.is_string())
        return {v.get<std::string>()};
    if (v.is_array()) {
        std::vector<std::string> out;
        for (const auto &e : v) {
            if (!e.is_string())
                throw ConfigError(std::string(where) + ": '" + key +
                                  "' entries must be strings");
            out.push_back(e.get<std::string>());
        }
        if (out.empty())
            throw ConfigError(std::string(where) + ": '" + key +
                              "' is empty");
        return out;
    }
    throw ConfigError(std::string(where) + ": '" + key +
                      "' must be a string or a list");
}

LeoKind leo_kind_or_throw(const std::string &name) {
    if (auto k = parse_leo_kind(name))
        return *k;
    throw ConfigError("unknown experiment '" + name +
                      "' (expected z2, z3 or cnot)");
}

CoherentConfig coherent_from_json(const json &j) {
    reject_unknown_keys(j, {"g_leak", "g_logical", "bath_dim", "dt", "seed"},
                        "coherent");
    CoherentConfig c;
    c.g_leak = get_or(j, "g_leak", c.g_leak, "coherent");
    c.g_logical = get_or(j, "g_logical", c.g_logical, "coherent");
    c.bath_dim = get_or(j, "bath_dim", c.bath_dim, "coherent");
    c.dt = get_or(j, "dt", c.dt, "coherent");
    c.seed = get_or(j, "seed", c.seed, "coherent");
    return c;
}

NoiseConfig noise_from_json(const json &j) {
    if (j.is_null())
        return {};
    reject_unknown_keys(j,
                        {"amplitude_damping", "dephasing", "depolarizing",
                         "coherent", "noisy_preparation"},
                        "noise");
    NoiseConfig n;
    n.amplitude_damping = get_or(j, "amplitude_damping", 0.0, "noise");
    n.dephasing = get_or(j, "dephasing", 0.0, "noise");
    n.depolarizing = get_or(j, "depolarizing", 0.0, "noise");
    n.noisy_preparation = get_or(j, "noisy_preparation", false, "noise");
    if (j.contains("coherent") && !j.at("coherent").is_null())
        n.coherent = coherent_from_json(j.at("coherent"));
    try {
        n.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return n;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace

std::vector<ExperimentConfig> SweepConfig::expand() const {
    std::vector<ExperimentConfig> out;
    for (auto which : experiments)
        for (auto variant : variants) {
            ExperimentConfig cfg;
            cfg.which = which;
            cfg.variant = variant;
            cfg.tau_values = tau;
            cfg.shots = shots;
            cfg.noise = noise;
            cfg.seed = seed;
            out.push_back(std::move(cfg));
        }
    return out;
}

NoiseConfig parse_noise_config(std::string_view json_text) {
    return noise_from_json(parse_json(json_text));
}

SweepConfig parse_sweep_config(std::string_view json_text) {
    const json j = parse_json(json_text);
    reject_unknown_keys(j, {"which", "variant", "tau", "shots", "seed", "noise"},
                        "sweep");
    SweepConfig cfg;
    if (j.contains("which")) {
        cfg.experiments.clear();
        for (const auto &name : string_or_list(j, "which", "sweep"))
            cfg.experiments.push_back(leo_kind_or_throw(name));
    }
    if (j.contains("variant")) {
        cfg.variants.clear();
        for (const auto &name : string_or_list(j, "variant", "sweep")) {
            const auto v = parse_variant(name);
            if (!v)
                throw ConfigError("unknown variant '" + name +
                                  "' (expected leo, free or leo-with-id)");
            cfg.variants.push_back(*v);
        }
    }
    if (j.contains("tau")) {
        const json &t = j.at("tau");
        if (t == "default")
            cfg.tau = default_tau_grid();
        else if (t == "full")
            cfg.tau = full_tau_grid();
        else
            cfg.tau = get_or(j, "tau", cfg.tau, "sweep");
        if (cfg.tau.empty())
            throw ConfigError("sweep: tau list is empty");
        for (auto tau : cfg.tau)
            if (tau > kMaxTau)
                throw ConfigError("sweep: tau values must lie in [0, 10000]");
    }
    cfg.shots = get_or(j, "shots", cfg.shots, "sweep");
    if (cfg.shots < 1)
        throw ConfigError("sweep: shots must be >= 1");
    cfg.seed = get_or(j, "seed", cfg.seed, "sweep");
    if (j.contains("noise"))
        cfg.noise = noise_from_json(j.at("noise"));
    return cfg;
}

KickStudyConfig parse_kick_study_config(std::string_view json_text) {
    const json j = parse_json(json_text);
    reject_unknown_keys(j, {"codespace", "coherent", "m", "t"}, "kick-study");
    KickStudyConfig cfg = KickStudyConfig::defaults();
    if (j.contains("codespace"))
        cfg.codespace =
            leo_kind_or_throw(get_or<std::string>(j, "codespace", "", "kick-study"));
    if (j.contains("coherent"))
        cfg.coherent = coherent_from_json(j.at("coherent"));
    cfg.m_values = get_or(j, "m", cfg.m_values, "kick-study");
    cfg.t_values = get_or(j, "t", cfg.t_values, "kick-study");
    try {
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SweepConfig load_sweep_config(const std::filesystem::path &path) {
    return parse_sweep_config(read_text_file(path));
}

KickStudyConfig load_kick_study_config(const std::filesystem::path &path) {
    return parse_kick_study_config(read_text_file(path));
}

} // namespace leolab
