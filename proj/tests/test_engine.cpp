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

#include "leolab/engine.hpp"
#include "leolab/experiments.hpp"

#include <cmath>
#include <stdexcept>

using namespace leolab;

namespace {

const CodeSpace &c2() {
    static const CodeSpace cs = CodeSpace::from_labels({"01", "10"});
    return cs;
}

NoiseModel damping_only(double g, std::size_t n) {
    NoiseConfig cfg;
    cfg.amplitude_damping = g;
    return resolve_noise(cfg, n, protected_subspace(LeoKind::z2));
}

KickSchedule schedule(const NoiseHamiltonian &h, LeoOperator leo, double t,
                      std::size_t m) {
    return KickSchedule{m, t, std::move(leo), h};
}

// chi-square critical values at p = 0.001 indexed by degrees of freedom
constexpr double kChi2Crit[] = {0,     10.83, 13.82, 16.27, 18.47,
                                20.52, 22.46, 24.32};

} // namespace

TEST_SUITE("run_circuit") {
    TEST_CASE("noiseless z2 splits evenly between 01 and 10") {
        const auto counts = run_circuit(build_z2_circuit(0), NoiseModel{}, 1024, 1);
        CHECK(counts.shots == 1024);
        CHECK(counts.count("01") + counts.count("10") == 1024);
        CHECK(std::abs(double(counts.count("01")) - 512.0) <= 3 * 16.0);
    }
    TEST_CASE("damping on identity slots follows (1-g)^tau") {
        const double g = 0.004;
        const auto nm = damping_only(g, 2);
        for (std::size_t tau : {1u, 50u, 200u, 500u}) {
            const auto c = build_circuit(LeoKind::z2, PulseVariant::free, tau);
            const auto counts = run_circuit(c, nm, 1024, point_seed(2026, tau));
            const double f =
                double(counts.count("01") + counts.count("10")) / 1024.0;
            const double want = std::pow(1 - g, double(tau));
            CHECK(std::abs(f - want) <= 3 * oracle::binomial_sigma(want, 1024) + 1e-12);
            const auto exact = measure_probabilities(evolve(c, nm));
            CHECK(exact[1] + exact[2] == doctest::Approx(want).epsilon(1e-10));
        }
    }
    TEST_CASE("fixed seed gives identical counts") {
        const auto nm = damping_only(0.01, 3);
        const auto c = build_z3_circuit(20);
        const auto a = run_circuit(c, nm, 4096, 5);
        const auto b = run_circuit(c, nm, 4096, 5);
        CHECK(a.counts == b.counts);
        const auto d = run_circuit(c, nm, 4096, 6);
        CHECK(a.counts != d.counts);
    }
    TEST_CASE("sampled frequencies pass a chi-square test") {
        auto cfg = NoiseConfig::defaults();
        cfg.noisy_preparation = true;
        const auto nm = resolve_noise(cfg, 3, protected_subspace(LeoKind::z3));
        const auto c = build_circuit(LeoKind::z3, PulseVariant::free, 300);
        const auto probs = measure_probabilities(evolve(c, nm));
        const std::size_t shots = 100000;
        const auto counts = sample_counts(probs, 3, shots, 2024);
        double chi2 = 0.0;
        int bins = 0;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            const double expected = probs[i] * shots;
            if (expected < 5.0)
                continue;
            const double d = double(counts.count(basis_label(i, 3))) - expected;
            chi2 += d * d / expected;
            ++bins;
        }
        REQUIRE(bins >= 2);
        CHECK(chi2 < kChi2Crit[bins - 1]);
    }
    TEST_CASE("sample_counts rejects a bad distribution") {
        const std::vector<double> short_sum{0.5, 0.2}, negative{1.2, -0.2};
        CHECK_THROWS(sample_counts(short_sum, 1, 10, 1));
        CHECK_THROWS(sample_counts(negative, 1, 10, 1));
        const std::vector<double> ok{0.25, 0.75};
        CHECK_THROWS(sample_counts(ok, 2, 10, 1));
        CHECK_THROWS(sample_counts(ok, 1, 0, 1));
    }
}

TEST_SUITE("evolve") {
    TEST_CASE("trace stays at one after every slot") {
        auto cfg = NoiseConfig::defaults();
        cfg.depolarizing = 2e-3;
        cfg.coherent->bath_dim = 2;
        cfg.noisy_preparation = true;
        for (auto kind : {LeoKind::z2, LeoKind::z3, LeoKind::cnot}) {
            const auto nm =
                resolve_noise(cfg, qubit_count(kind), protected_subspace(kind));
            std::size_t slots = 0;
            double worst = 0.0;
            evolve(build_circuit(kind, PulseVariant::leo_with_id, 25), nm,
                   [&](std::size_t, const QState &s) {
                       ++slots;
                       const cplx tr = s.representation ==
                                               Representation::density_matrix
                                           ? s.data.trace()
                                           : hs_inner(s.data, s.data);
                       worst = std::max(worst, std::abs(tr - 1.0));
                   });
            CHECK(slots >= 50);
            CHECK(worst <= 1e-9);
        }
    }
    TEST_CASE("embed_gate places CNOT with the control as the high bit") {
        const auto u = embed_gate(Gate::cnot(0, 1), 2);
        const ComplexMatrix cnot{
            {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
        CHECK(max_abs_diff(u, cnot) == 0.0);
        const auto r = embed_gate(Gate::cnot(1, 0), 2);
        CHECK(r(3, 1) == cplx{1.0});
        CHECK(embed_gate(Gate::x(0), 1, 3).rows() == 6);
    }
}

TEST_SUITE("effective_hamiltonian") {
    const std::vector<ComplexMatrix> iz{pauli::I(), pauli::Z()};
    TEST_CASE("X averages to zero") {
        CHECK(max_abs(effective_hamiltonian(pauli::X(), iz)) < 1e-15);
    }
    TEST_CASE("Z is kept") {
        CHECK(max_abs_diff(effective_hamiltonian(pauli::Z(), iz), pauli::Z()) <
              1e-15);
    }
    TEST_CASE("Z (x) Z removes the leakage block") {
        Rng rng(6);
        const std::vector<ComplexMatrix> pulses{ComplexMatrix::identity(4),
                                                kron(pauli::Z(), pauli::Z())};
        const auto h = random_hermitian(4, rng);
        const auto heff = effective_hamiltonian(h, pulses);
        CHECK(max_abs(decompose(heff, c2()).l_part) < 1e-12);
        const auto d = decompose(h, c2());
        CHECK(max_abs_diff(heff, d.e_part + d.eperp_part) < 1e-12);
    }
}

TEST_SUITE("parity kick") {
    TEST_CASE("no leakage block: kicks are transparent") {
        const auto h = make_leakage_hamiltonian(c2(), 0.0, 0.8, 2, 4);
        const auto ks = schedule(h, standard_leo(LeoKind::z2), 1.7, 5);
        CHECK(max_abs_diff(parity_kick_propagator(ks), free_propagator(ks)) <
              1e-10);
        CHECK(max_abs_diff(free_propagator(ks),
                           expm_hermitian(h.total(), 2 * 1.7)) < 1e-12);
        CHECK(max_abs_diff(kick_limit(ks), free_propagator(ks)) < 1e-10);
    }
    TEST_CASE("identity pulse degenerates to free evolution") {
        const auto h = make_leakage_hamiltonian(c2(), 0.6, 0.4, 1, 12);
        const auto id =
            LeoOperator::unchecked(ComplexMatrix::identity(4), 0.0, c2());
        for (std::size_t m : {1u, 3u, 16u}) {
            const auto ks = schedule(h, id, 2.3, m);
            CHECK(max_abs_diff(parity_kick_propagator(ks),
                               expm_hermitian(h.total(), 2 * 2.3)) < 1e-10);
        }
    }
    TEST_CASE("distance to the limit falls as 1/m") {
        const auto h = make_leakage_hamiltonian(c2(), 1.0, 1.0, 2, 3);
        std::vector<double> ms, dist;
        for (std::size_t m = 1; m <= 256; m *= 2) {
            const auto ks = schedule(h, standard_leo(LeoKind::z2), 0.1, m);
            ms.push_back(double(m));
            dist.push_back(spectral_norm(parity_kick_propagator(ks) - kick_limit(ks)));
        }
        CHECK(loglog_slope(ms, dist) == doctest::Approx(-1.0).epsilon(0.1));
    }
    TEST_CASE("single kick pair leaks at second order") {
        const auto h = make_leakage_hamiltonian(c2(), 1.0, 1.0, 2, 3);
        const auto cs = c2().extended(2);
        const double norm = spectral_norm(h.total());
        std::vector<double> ts, with, without;
        for (double x = 1e-3; x <= 0.1 * 1.0001; x *= std::sqrt(10.0)) {
            const auto ks = schedule(h, standard_leo(LeoKind::z2), x / norm, 1);
            ts.push_back(x);
            with.push_back(leakage_amplitude(parity_kick_propagator(ks), cs));
            without.push_back(leakage_amplitude(free_propagator(ks), cs));
        }
        CHECK(loglog_slope(ts, with) == doctest::Approx(2.0).epsilon(0.05));
        CHECK(loglog_slope(ts, without) == doctest::Approx(1.0).epsilon(0.1));
    }
    TEST_CASE("invalid schedule rejected") {
        const auto h = make_leakage_hamiltonian(c2(), 0.1, 0.1, 1, 1);
        CHECK_THROWS(parity_kick_propagator(schedule(h, standard_leo(LeoKind::z2), 0.0, 1)));
        CHECK_THROWS(parity_kick_propagator(schedule(h, standard_leo(LeoKind::z3), 1.0, 1)));
    }
}

TEST_SUITE("leakage") {
    TEST_CASE("block-diagonal unitary does not leak") {
        const auto h = make_leakage_hamiltonian(c2(), 0.0, 1.0, 1, 2);
        const auto u = expm_hermitian(h.total(), 3.0);
        CHECK(leakage_probability(u, c2(), QState::basis("01")) < 1e-12);
        CHECK(leakage_amplitude(u, c2()) < 1e-12);
    }
    TEST_CASE("X (x) I moves 01 to 11") {
        CHECK(leakage_probability(kron(pauli::X(), pauli::I()), c2(),
                                  QState::basis("01")) ==
              doctest::Approx(1.0));
    }
    TEST_CASE("state outside the codespace is rejected") {
        CHECK_THROWS_AS(leakage_probability(ComplexMatrix::identity(4), c2(),
                                            QState::basis("00")),
                        std::invalid_argument);
    }
    TEST_CASE("kicks never leak more than free evolution for t|H| <= 0.3") {
        const auto kcfg = KickStudyConfig::defaults();
        const auto ncfg = *NoiseConfig::defaults().coherent;
        for (const auto &cc : {kcfg.coherent, ncfg}) {
            const auto cs = protected_subspace(kcfg.codespace);
            const auto h = make_leakage_hamiltonian(cs, cc.g_leak, cc.g_logical,
                                                    cc.bath_dim, cc.seed);
            const double norm = spectral_norm(h.total());
            const auto ext = cs.extended(cc.bath_dim);
            std::vector<double> xs = kcfg.t_values;
            xs.push_back(0.2);
            xs.push_back(0.3);
            for (double x : xs) {
                const auto ks = schedule(h, standard_leo(kcfg.codespace), x / norm, 1);
                const auto uk = parity_kick_propagator(ks);
                const auto uf = free_propagator(ks);
                for (const auto &b : ext.basis()) {
                    const auto psi =
                        QState::from_statevector(2, b, {cc.bath_dim});
                    CHECK(leakage_probability(uk, cs, psi) <=
                          leakage_probability(uf, cs, psi) + 1e-15);
                }
            }
        }
    }
}
