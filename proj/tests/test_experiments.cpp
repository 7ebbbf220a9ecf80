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

#include "doctest.h"
#include "oracles.hpp"

#include "leolab/config.hpp"
#include "leolab/experiments.hpp"

#include <cmath>
#include <filesystem>
#include <numeric>
#include <sstream>

using namespace leolab;

namespace {

ShotCounts make_counts(std::initializer_list<std::pair<const char *, std::size_t>> c) {
    ShotCounts out;
    for (const auto &[label, n] : c) {
        out.counts[label] = n;
        out.shots += n;
    }
    return out;
}

// Exact protected-subspace population, no sampling.
double exact_fidelity(LeoKind kind, PulseVariant v, std::size_t tau,
                      const NoiseConfig &cfg) {
    const auto nm = resolve_noise(cfg, qubit_count(kind), protected_subspace(kind));
    const auto p = measure_probabilities(evolve(build_circuit(kind, v, tau), nm));
    double f = 0.0;
    for (const auto &l : protected_labels(kind))
        f += p[label_index(l)];
    return f;
}

std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_SUITE("subspace_fidelity") {
    const std::vector<std::string> z2{"01", "10"};
    TEST_CASE("all shots inside") {
        CHECK(subspace_fidelity(make_counts({{"01", 512}, {"10", 512}}), z2) ==
              1.0);
    }
    TEST_CASE("partial") {
        CHECK(subspace_fidelity(make_counts({{"01", 400}, {"10", 400},
                                             {"00", 200}, {"11", 24}}),
                                z2) == 800.0 / 1024.0);
        CHECK(800.0 / 1024.0 == 0.78125);
    }
    TEST_CASE("z3 labels") {
        const auto labels = protected_labels(LeoKind::z3);
        CHECK(subspace_fidelity(make_counts({{"001", 250}, {"010", 250},
                                             {"100", 250}, {"111", 250},
                                             {"000", 24}}),
                                labels) == 1000.0 / 1024.0);
    }
    TEST_CASE("no shots is an error") {
        CHECK_THROWS(subspace_fidelity(ShotCounts{}, z2));
    }
}

TEST_SUITE("run_sweep") {
    TEST_CASE("noiseless sweeps sit at one") {
        for (auto kind : {LeoKind::z2, LeoKind::z3, LeoKind::cnot})
            for (auto v : {PulseVariant::leo, PulseVariant::free,
                           PulseVariant::leo_with_id}) {
                ExperimentConfig cfg{kind, v, {1, 10, 100}, 1024, NoiseConfig{}, 3};
                for (const auto &p : run_sweep(cfg).points)
                    CHECK(p.fidelity == 1.0);
            }
    }
    TEST_CASE("free variant under damping follows the closed form") {
        NoiseConfig noise;
        noise.amplitude_damping = 2e-3;
        ExperimentConfig cfg{LeoKind::z2, PulseVariant::free, default_tau_grid(),
                             1024, noise, 41};
        const auto s = run_sweep(cfg);
        REQUIRE(s.points.size() == 12);
        for (const auto &p : s.points) {
            const double want = std::pow(1 - 2e-3, double(p.tau));
            CHECK(std::abs(p.fidelity - want) <=
                  3 * oracle::binomial_sigma(want, 1024) + 1e-12);
        }
    }
    TEST_CASE("default noise: leo beats free, identities only hurt") {
        const auto noise = NoiseConfig::defaults();
        for (auto kind : {LeoKind::z2, LeoKind::z3, LeoKind::cnot}) {
            const double leo = exact_fidelity(kind, PulseVariant::leo, 600, noise);
            const double free = exact_fidelity(kind, PulseVariant::free, 600, noise);
            const double id =
                exact_fidelity(kind, PulseVariant::leo_with_id, 600, noise);
            CHECK(leo >= free);
            CHECK(id <= leo);
        }
    }
    TEST_CASE("coherent leakage with weak damping: z2 leo spread is a third of free or less") {
        const auto noise =
            load_sweep_config(std::string(LEOLAB_CONFIG_DIR) + "/calibration.json")
                .noise;
        REQUIRE(noise.coherent.has_value());
        auto grid = default_tau_grid();
        grid.erase(grid.begin(), grid.begin() + 2); // tau >= 10
        ExperimentConfig leo{LeoKind::z2, PulseVariant::leo, grid, 1024, noise, 7};
        auto free = leo;
        free.variant = PulseVariant::free;
        auto spread = [](const FidelitySeries &s) {
            double lo = 1.0, hi = 0.0;
            for (const auto &p : s.points) {
                lo = std::min(lo, p.fidelity);
                hi = std::max(hi, p.fidelity);
            }
            return hi - lo;
        };
        CHECK(3 * spread(run_sweep(leo)) <= spread(run_sweep(free)));
    }
    TEST_CASE("seed-to-seed scatter matches the binomial width") {
        NoiseConfig noise;
        noise.amplitude_damping = 3e-3;
        const std::size_t tau = 150;
        const double p = std::pow(1 - 3e-3, double(tau));
        std::vector<double> f;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            ExperimentConfig cfg{LeoKind::z2, PulseVariant::free, {tau}, 1024,
                                 noise, 1000 + seed * 7919};
            f.push_back(run_sweep(cfg).points.at(0).fidelity);
        }
        const double mean = std::accumulate(f.begin(), f.end(), 0.0) / f.size();
        double var = 0.0;
        for (double x : f)
            var += (x - mean) * (x - mean);
        const double sd = std::sqrt(var / (f.size() - 1));
        const double sigma = oracle::binomial_sigma(p, 1024);
        CHECK(sd >= sigma / 2);
        CHECK(sd <= sigma * 2);
    }
    TEST_CASE("thread count does not change results") {
        ExperimentConfig cfg{LeoKind::z3, PulseVariant::leo_with_id,
                             {1, 5, 10, 20, 50}, 512, NoiseConfig::defaults(), 9};
        const auto a = run_sweep(cfg, 1), b = run_sweep(cfg, 4);
        REQUIRE(a.points.size() == b.points.size());
        for (std::size_t i = 0; i < a.points.size(); ++i)
            CHECK(a.points[i].fidelity == b.points[i].fidelity);
        CHECK(a.config_hash == b.config_hash);
    }
    TEST_CASE("taus are sorted and deduplicated") {
        ExperimentConfig cfg{LeoKind::z2, PulseVariant::leo, {20, 1, 20, 5}, 64,
                             NoiseConfig{}, 0};
        const auto s = run_sweep(cfg);
        REQUIRE(s.points.size() == 3);
        CHECK(s.points[0].tau == 1);
        CHECK(s.points[2].tau == 20);
    }
    TEST_CASE("invalid configs") {
        ExperimentConfig cfg;
        cfg.shots = 0;
        CHECK_THROWS(run_sweep(cfg));
        cfg.shots = 10;
        cfg.tau_values = {};
        CHECK_THROWS(run_sweep(cfg));
        cfg.tau_values = {kMaxTau + 1};
        CHECK_THROWS(run_sweep(cfg));
    }
    TEST_CASE("config hash tracks content") {
        ExperimentConfig a, b;
        CHECK(a.hash() == b.hash());
        b.seed = 1;
        CHECK(a.hash() != b.hash());
    }
}

TEST_SUITE("csv") {
    TEST_CASE("one point gives two lines") {
        FidelitySeries s{LeoKind::z2, PulseVariant::leo, 0, "", {{1, 1.0, 1024}}};
        const std::vector<FidelitySeries> v{s};
        CHECK(to_csv(v) == "experiment,variant,tau,fidelity,shots,seed\n"
                           "z2,leo,1,1.000000,1024,0\n");
    }
    TEST_CASE("empty list gives the header") {
        CHECK(to_csv(std::span<const FidelitySeries>{}) ==
              "experiment,variant,tau,fidelity,shots,seed\n");
    }
    TEST_CASE("round trip through a file") {
        ExperimentConfig cfg{LeoKind::cnot, PulseVariant::leo_with_id,
                             {1, 2, 3}, 256, NoiseConfig::defaults(), 12};
        const std::vector<FidelitySeries> v{run_sweep(cfg)};
        const auto path =
            std::filesystem::temp_directory_path() / "leolab_csv_roundtrip.csv";
        write_csv(v, path);
        const auto rows = parse_csv(read_text_file(path));
        std::filesystem::remove(path);
        REQUIRE(rows.size() == 4);
        for (std::size_t i = 0; i < 3; ++i) {
            const auto &r = rows[i + 1];
            REQUIRE(r.size() == 6);
            CHECK(r[0] == "cnot");
            CHECK(r[1] == "leo-with-id");
            CHECK(std::stoul(r[2]) == v[0].points[i].tau);
            CHECK(std::stod(r[3]) ==
                  doctest::Approx(v[0].points[i].fidelity).epsilon(1e-6));
            CHECK(r[4] == "256");
            CHECK(r[5] == "12");
        }
    }
    TEST_CASE("unwritable path throws") {
        CHECK_THROWS(write_csv({}, "/nonexistent-dir/x.csv"));
    }
}

TEST_SUITE("kick study") {
    TEST_CASE("default grid slopes") {
        const auto r = run_kick_study(KickStudyConfig::defaults());
        CHECK(r.rows.size() == 81);
        CHECK(r.slope_with_kick == doctest::Approx(2.0).epsilon(0.05));
        CHECK(r.slope_free == doctest::Approx(1.0).epsilon(0.1));
        CHECK(r.slope_vs_m == doctest::Approx(-1.0).epsilon(0.1));
        const auto csv = to_csv(r);
        CHECK(csv.rfind("m,t,leakage_with_kick,leakage_free,distance_to_limit\n", 0) ==
              0);
    }
    TEST_CASE("loglog slope of a power law") {
        const std::vector<double> x{1, 2, 4, 8}, y{3, 12, 48, 192};
        CHECK(loglog_slope(x, y) == doctest::Approx(2.0));
    }
}

TEST_SUITE("config parsing") {
    TEST_CASE("sweep config with lists and defaults") {
        const auto c = parse_sweep_config(
            R"({"which": ["z2", "cnot"], "variant": "free", "tau": [1, 3],
                "shots": 100, "seed": 5})");
        CHECK(c.experiments.size() == 2);
        CHECK(c.variants == std::vector<PulseVariant>{PulseVariant::free});
        CHECK(c.tau == std::vector<std::size_t>{1, 3});
        CHECK(c.noise.amplitude_damping == NoiseConfig::defaults().amplitude_damping);
        CHECK(c.expand().size() == 2);
    }
    TEST_CASE("null noise is noiseless, full grid keyword") {
        const auto c = parse_sweep_config(R"({"which": "z3", "tau": "full", "noise": null})");
        CHECK(c.tau.size() == 600);
        CHECK(c.noise.amplitude_damping == 0.0);
        CHECK(!c.noise.coherent);
    }
    TEST_CASE("bad documents are rejected") {
        for (const char *doc :
             {"{", R"({"which": "z9"})", R"({"bogus": 1})",
              R"({"variant": ["leo", "nope"]})", R"({"shots": -4})", R"({"tau": [1, -2]})", R"({"seed": 1.5})",
              R"({"noise": {"dephasing": 3}})", R"({"tau": "most"})"})
            CHECK_THROWS_AS(parse_sweep_config(doc), ConfigError);
    }
    TEST_CASE("shipped configs load") {
        const std::string dir = LEOLAB_CONFIG_DIR;
        for (const char *f : {"z2_default.json", "noiseless.json", "calibration.json"})
            CHECK_NOTHROW(load_sweep_config(dir + "/" + f));
        CHECK_NOTHROW(parse_noise_config(read_text_file(dir + "/noise_default.json")));
        const auto k = load_kick_study_config(dir + "/kick_study.json");
        CHECK(k.m_values.size() == 9);
    }
    TEST_CASE("missing file") {
        CHECK_THROWS_AS(load_sweep_config("/no/such/file.json"), ConfigError);
    }
}
