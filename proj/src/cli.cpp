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

#include "leolab/cli.hpp"

#include "leolab/algebra.hpp"
#include "leolab/circuits.hpp"
#include "leolab/config.hpp"
#include "leolab/experiments.hpp"
#include "leolab/plot.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

namespace leolab::cli {

namespace {

struct GlobalOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> shots;
    std::string out;
};

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f)
        throw std::runtime_error("failed writing " + path);
}

void print_matrix(std::ostream &os, const ComplexMatrix &m) {
    os << std::fixed << std::setprecision(6);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << "  [";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const double re = std::abs(m(r, c).real()) < 5e-13 ? 0.0 : m(r, c).real();
            const double im = std::abs(m(r, c).imag()) < 5e-13 ? 0.0 : m(r, c).imag();
            os << (c ? ", " : "") << std::setw(10) << re;
            if (im != 0.0)
                os << (im < 0 ? "-" : "+") << std::abs(im) << "i";
        }
        os << "]\n";
    }
    os << std::defaultfloat;
}

int cmd_verify(const std::string &name, std::size_t trials,
               const GlobalOptions &g, std::ostream &out, std::ostream &err,
               const std::string &usage) {
    const auto kind = parse_leo_kind(name);
    if (!kind) {
        err << "unknown LEO '" << name << "' (expected z2, z3 or cnot)\n"
            << usage;
        return kExitUsage;
    }
    const std::uint64_t seed = g.seed.value_or(7);
    const LeoOperator leo = standard_leo(*kind);
    const LeoVerification rep = verify_leo(leo, trials, seed);
    out << "LEO " << name << " (dim " << leo.matrix().rows() << ", phase "
        << leo.phase() << "), " << rep.trials << " trials, seed " << seed
        << '\n';
    out << std::scientific << std::setprecision(3);
    out << "  max ||[R, E]||       = " << rep.max_commutator_e << '\n'
        << "  max ||[R, E_perp]||  = " << rep.max_commutator_eperp << '\n'
        << "  max ||{R, L}||       = " << rep.max_anticommutator_l << '\n'
        << "  tolerance            = " << rep.tolerance << '\n';
    out << std::defaultfloat;
    if (*kind == LeoKind::cnot) {
        out << "CNOT in basis {|00>, |01>, (|10>+|11>)/sqrt2, "
               "(|10>-|11>)/sqrt2}:\n";
        print_matrix(out, cnot_in_rotated_basis());
    }
    out << (rep.passed ? "PASS" : "FAIL") << '\n';
    return rep.passed ? kExitOk : kExitRuntime;
}

int cmd_sweep(const std::string &config_path, const std::string &svg_path,
              bool full_grid, const GlobalOptions &g, std::ostream &out) {
    SweepConfig cfg = load_sweep_config(config_path);
    if (g.seed)
        cfg.seed = *g.seed;
    if (g.shots)
        cfg.shots = *g.shots;
    if (full_grid)
        cfg.tau = full_tau_grid();
    std::vector<FidelitySeries> series;
    for (const auto &exp : cfg.expand())
        series.push_back(run_sweep(exp));
    const std::string csv_path = g.out.empty() ? "sweep.csv" : g.out;
    write_csv(series, csv_path);
    out << "wrote " << csv_path << '\n';
    for (const auto &s : series) {
        const auto &first = s.points.front();
        const auto &last = s.points.back();
        out << "  " << std::left << std::setw(5) << to_string(s.which)
            << std::setw(12) << to_string(s.variant) << std::right
            << std::fixed << std::setprecision(4) << " f(" << first.tau
            << ")=" << first.fidelity << "  f(" << last.tau
            << ")=" << last.fidelity << std::defaultfloat << '\n';
    }
    if (!svg_path.empty()) {
        write_file(svg_path, render_svg(series));
        out << "wrote " << svg_path << '\n';
    }
    return kExitOk;
}

int cmd_kick_study(const std::string &config_path, const GlobalOptions &g,
                   std::ostream &out) {
    KickStudyConfig cfg = config_path.empty()
                              ? KickStudyConfig::defaults()
                              : load_kick_study_config(config_path);
    if (g.seed)
        cfg.coherent.seed = *g.seed;
    const KickStudyResult res = run_kick_study(cfg);
    const std::string csv_path = g.out.empty() ? "kick_study.csv" : g.out;
    write_file(csv_path, to_csv(res));
    out << "wrote " << csv_path << '\n'
        << std::fixed << std::setprecision(4)
        << "||H|| = " << res.hamiltonian_norm << '\n'
        << "slope of leakage amplitude vs t, with kick:    "
        << res.slope_with_kick << '\n'
        << "slope of leakage amplitude vs t, without kick: "
        << res.slope_free << '\n'
        << "slope of distance to limit vs m:               "
        << res.slope_vs_m << '\n'
        << std::defaultfloat;
    return kExitOk;
}

int cmd_export(const std::string &which, std::size_t tau, bool with_id,
               const std::string &positional_out, const GlobalOptions &g,
               std::ostream &out, std::ostream &err,
               const std::string &usage) {
    const auto kind = parse_leo_kind(which);
    if (!kind) {
        err << "unknown circuit '" << which << "' (expected z2, z3 or cnot)\n"
            << usage;
        return kExitUsage;
    }
    const std::string text = export_qasm(build_circuit(
        *kind, with_id ? PulseVariant::leo_with_id : PulseVariant::leo, tau));
    std::string path = positional_out.empty() ? g.out : positional_out;
    if (path.empty()) {
        out << text;
        return kExitOk;
    }
    write_file(path, text);
    out << "wrote " << path << '\n';
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
    CLI::App app{"Leakage elimination operator lab", "leo-lab"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOptions g;
    std::uint64_t seed = 0;
    std::size_t shots = kDefaultShots;
    auto *seed_opt = app.add_option("--seed", seed, "RNG seed");
    auto *shots_opt =
        app.add_option("--shots", shots, "Shots per circuit (default 1024)")
            ->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "Output path");

    std::string leo_name;
    std::size_t trials = 100;
    auto *verify = app.add_subcommand(
        "verify", "Check the (anti)commutation relations of a standard LEO");
    verify->add_option("leo", leo_name, "z2, z3 or cnot")->required();
    verify->add_option("--trials", trials, "Random operators per block")
        ->check(CLI::PositiveNumber);

    std::string sweep_config, svg_path;
    bool full_grid = false;
    auto *sweep = app.add_subcommand(
        "sweep", "Fidelity vs pulse count for LEO and reference variants");
    sweep->add_option("config", sweep_config, "Sweep config (JSON)")
        ->required();
    sweep->add_option("--svg", svg_path, "Also write an SVG plot");
    sweep->add_flag("--full-grid", full_grid, "Sweep every tau in 1..600");

    std::string kick_config;
    auto *kick = app.add_subcommand(
        "kick-study", "Parity-kick convergence in t and m");
    kick->add_option("config", kick_config, "Kick-study config (JSON)");

    std::string export_which, export_out;
    std::size_t export_tau = 1;
    bool with_id = false;
    auto *exp = app.add_subcommand("export", "Write an OpenQASM 2.0 circuit");
    exp->add_option("which", export_which, "z2, z3 or cnot")->required();
    exp->add_option("path", export_out, "Output .qasm path");
    exp->add_option("--tau", export_tau, "Number of LEO pulses");
    exp->add_flag("--with-id", with_id, "Insert identity slots between pulses");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (*seed_opt)
        g.seed = seed;
    if (*shots_opt)
        g.shots = shots;

    try {
        if (*verify)
            return cmd_verify(leo_name, trials, g, out, err,
                              verify->help());
        if (*sweep)
            return cmd_sweep(sweep_config, svg_path, full_grid, g, out);
        if (*kick)
            return cmd_kick_study(kick_config, g, out);
        if (*exp)
            return cmd_export(export_which, export_tau, with_id, export_out,
                              g, out, err, exp->help());
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    err << app.help();
    return kExitUsage;
}

int run(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace leolab::cli
