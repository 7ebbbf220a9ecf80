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

#include "leolab/experiments.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace leolab {

std::vector<std::size_t> default_tau_grid() {
    return {1, 5, 10, 20, 50, 100, 150, 200, 300, 400, 500, 600};
}

std::vector<std::size_t> full_tau_grid() {
    std::vector<std::size_t> grid(600);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = i + 1;
    return grid;
}

void ExperimentConfig::validate() const {
    if (tau_values.empty())
        throw std::invalid_argument("experiment: tau list is empty");
    for (auto tau : tau_values)
        if (tau > kMaxTau)
            throw std::invalid_argument("experiment: tau " +
                                        std::to_string(tau) +
                                        " exceeds 10000");
    if (shots < 1)
        throw std::invalid_argument("experiment: shots must be >= 1");
    noise.validate();
}

std::string ExperimentConfig::hash() const {
    std::ostringstream os;
    os << std::setprecision(17) << "which=" << to_string(which)
       << ";variant=" << to_string(variant) << ";tau=";
    for (auto t : tau_values)
        os << t << ',';
    os << ";shots=" << shots << ";seed=" << seed
       << ";ad=" << noise.amplitude_damping << ";deph=" << noise.dephasing
       << ";depol=" << noise.depolarizing
       << ";prep=" << noise.noisy_preparation;
    if (noise.coherent)
        os << ";coh=" << noise.coherent->g_leak << ','
           << noise.coherent->g_logical << ',' << noise.coherent->bath_dim
           << ',' << noise.coherent->dt << ',' << noise.coherent->seed;
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : os.str()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << h;
    return hex.str();
}

double subspace_fidelity(const ShotCounts &counts,
                         std::span<const std::string> labels) {
    if (counts.shots == 0)
        throw std::invalid_argument("subspace_fidelity: no shots");
    std::size_t kept = 0;
    for (const auto &label : labels) {
        label_index(label); // rejects malformed labels
        kept += counts.count(label);
    }
    return static_cast<double>(kept) / static_cast<double>(counts.shots);
}

std::size_t thread_cap() {
    if (const char *env = std::getenv("LEO_LAB_THREADS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0)
            return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(omp_get_max_threads());
}

FidelitySeries run_sweep(const ExperimentConfig &cfg,
                         std::size_t max_threads) {
    cfg.validate();
    std::vector<std::size_t> taus = cfg.tau_values;
    std::sort(taus.begin(), taus.end());
    taus.erase(std::unique(taus.begin(), taus.end()), taus.end());

    const std::size_t n = qubit_count(cfg.which);
    const NoiseModel nm =
        resolve_noise(cfg.noise, n, protected_subspace(cfg.which), cfg.seed);
    const auto labels = protected_labels(cfg.which);

    FidelitySeries series;
    series.which = cfg.which;
    series.variant = cfg.variant;
    series.seed = cfg.seed;
    series.config_hash = cfg.hash();
    series.points.resize(taus.size());

    const int threads =
        static_cast<int>(max_threads ? max_threads : thread_cap());
    const auto count = static_cast<std::ptrdiff_t>(taus.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            const std::size_t tau = taus[static_cast<std::size_t>(i)];
            const Circuit c = build_circuit(cfg.which, cfg.variant, tau);
            const ShotCounts counts =
                run_circuit(c, nm, cfg.shots, point_seed(cfg.seed, tau));
            series.points[static_cast<std::size_t>(i)] = {
                tau, subspace_fidelity(counts, labels), cfg.shots};
        } catch (...) {
#pragma omp critical(leolab_sweep_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return series;
}

std::string to_csv(std::span<const FidelitySeries> series) {
    std::ostringstream os;
    os << "experiment,variant,tau,fidelity,shots,seed\n";
    os << std::fixed << std::setprecision(6);
    for (const auto &s : series)
        for (const auto &p : s.points)
            os << to_string(s.which) << ',' << to_string(s.variant) << ','
               << p.tau << ',' << p.fidelity << ',' << p.shots << ','
               << s.seed << '\n';
    return os.str();
}

void write_csv(std::span<const FidelitySeries> series,
               const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() +
                                 " for writing");
    out << to_csv(series);
    if (!out)
        throw std::runtime_error("failed writing " + path.string());
}

// Kick study

KickStudyConfig KickStudyConfig::defaults() {
    KickStudyConfig cfg;
    cfg.codespace = LeoKind::z2;
    cfg.coherent.g_leak = 1.0;
    cfg.coherent.g_logical = 1.0;
    cfg.coherent.bath_dim = 2;
    cfg.coherent.seed = 3;
    for (std::size_t m = 1; m <= 256; m *= 2)
        cfg.m_values.push_back(m);
    for (int k = 0; k <= 8; ++k)
        cfg.t_values.push_back(1e-3 * std::pow(10.0, k / 4.0));
    return cfg;
}

void KickStudyConfig::validate() const {
    if (m_values.empty() || t_values.empty())
        throw std::invalid_argument("kick study: m and t grids must be non-empty");
    for (auto m : m_values)
        if (m < 1 || m > 1000)
            throw std::invalid_argument("kick study: m must lie in [1, 1000]");
    for (auto t : t_values)
        if (!(t > 0.0))
            throw std::invalid_argument("kick study: t values must be > 0");
    if (coherent.bath_dim < 1)
        throw std::invalid_argument("kick study: bath_dim must be >= 1");
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("loglog_slope: need >= 2 matched points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::invalid_argument("loglog_slope: non-positive value");
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

KickStudyResult run_kick_study(const KickStudyConfig &cfg) {
    cfg.validate();
    const CodeSpace cs = protected_subspace(cfg.codespace);
    const NoiseHamiltonian h = make_leakage_hamiltonian(
        cs, cfg.coherent.g_leak, cfg.coherent.g_logical,
        cfg.coherent.bath_dim, cfg.coherent.seed);
    const LeoOperator leo = standard_leo(cfg.codespace);

    KickStudyResult result;
    result.hamiltonian_norm = spectral_norm(h.total());

    std::vector<double> ts = cfg.t_values;
    std::sort(ts.begin(), ts.end());
    std::vector<std::size_t> ms = cfg.m_values;
    std::sort(ms.begin(), ms.end());

    std::vector<double> kick_at_m1, free_leak, t_abs;
    std::vector<double> m_axis, dist_at_tmax;
    for (double t_scaled : ts) {
        const double t = t_scaled / result.hamiltonian_norm;
        KickSchedule ks{1, t, leo, h};
        const ComplexMatrix limit = kick_limit(ks);
        const double free = leakage_amplitude(free_propagator(ks), cs);
        for (auto m : ms) {
            ks.m = m;
            const ComplexMatrix u = parity_kick_propagator(ks);
            KickStudyRow row{m, t, leakage_amplitude(u, cs), free,
                             spectral_norm(u - limit)};
            if (m == ms.front()) {
                t_abs.push_back(t);
                kick_at_m1.push_back(row.leakage_with_kick);
                free_leak.push_back(free);
            }
            if (t_scaled == ts.back()) {
                m_axis.push_back(static_cast<double>(m));
                dist_at_tmax.push_back(row.distance_to_limit);
            }
            result.rows.push_back(row);
        }
    }
    if (t_abs.size() >= 2) {
        result.slope_with_kick = loglog_slope(t_abs, kick_at_m1);
        result.slope_free = loglog_slope(t_abs, free_leak);
    }
    if (m_axis.size() >= 2)
        result.slope_vs_m = loglog_slope(m_axis, dist_at_tmax);
    return result;
}

std::string to_csv(const KickStudyResult &result) {
    std::ostringstream os;
    os << "m,t,leakage_with_kick,leakage_free,distance_to_limit\n";
    os << std::scientific << std::setprecision(12);
    for (const auto &r : result.rows)
        os << r.m << ',' << r.t << ',' << r.leakage_with_kick << ','
           << r.leakage_free << ',' << r.distance_to_limit << '\n';
    return os.str();
}

} // namespace leolab
