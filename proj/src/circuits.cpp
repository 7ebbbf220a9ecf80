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

#include "leolab/circuits.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace leolab {

namespace {

ComplexMatrix rotation(const ComplexMatrix &sigma, double phi) {
    const cplx c{std::cos(phi / 2.0)};
    const cplx s{0.0, -std::sin(phi / 2.0)};
    return c * pauli::I() + s * sigma;
}

const char *qasm_name(GateKind kind) {
    switch (kind) {
    case GateKind::X:
        return "x";
    case GateKind::Z:
        return "z";
    case GateKind::H:
        return "h";
    case GateKind::CNOT:
        return "cx";
    case GateKind::ID:
        return "id";
    case GateKind::RX:
        return "rx";
    case GateKind::RY:
        return "ry";
    case GateKind::RZ:
        return "rz";
    }
    return nullptr;
}

void append_pulse(Circuit &c, LeoKind kind, bool identity_only) {
    if (kind == LeoKind::cnot && !identity_only) {
        c.gates.push_back(Gate::cnot(0, 1));
        return;
    }
    for (std::size_t q = 0; q < c.num_qubits; ++q)
        c.gates.push_back(identity_only ? Gate::id(q) : Gate::z(q));
}

void append_identity_slot(Circuit &c) {
    for (std::size_t q = 0; q < c.num_qubits; ++q)
        c.gates.push_back(Gate::id(q));
}

} // namespace

ComplexMatrix Gate::matrix() const {
    switch (kind) {
    case GateKind::X:
        return pauli::X();
    case GateKind::Z:
        return pauli::Z();
    case GateKind::H:
        return pauli::H();
    case GateKind::ID:
        return pauli::I();
    case GateKind::CNOT:
        return {{1.0, 0.0, 0.0, 0.0},
                {0.0, 1.0, 0.0, 0.0},
                {0.0, 0.0, 0.0, 1.0},
                {0.0, 0.0, 1.0, 0.0}};
    case GateKind::RX:
        return rotation(pauli::X(), angle);
    case GateKind::RY:
        return rotation(pauli::Y(), angle);
    case GateKind::RZ:
        return rotation(pauli::Z(), angle);
    }
    throw std::invalid_argument("Gate::matrix: unknown gate kind");
}

void Gate::validate(std::size_t num_qubits) const {
    if (targets.size() != arity())
        throw std::invalid_argument(
            std::string("gate ") + qasm_name(kind) + " expects " +
            std::to_string(arity()) + " target(s), got " +
            std::to_string(targets.size()));
    for (auto q : targets)
        if (q >= num_qubits)
            throw std::invalid_argument("gate target " + std::to_string(q) +
                                        " out of range");
    if (kind == GateKind::CNOT && targets[0] == targets[1])
        throw std::invalid_argument("CNOT needs two distinct qubits");
    if (duration_slots == 0)
        throw std::invalid_argument("gate duration must be >= 1 slot");
}

void Circuit::validate() const {
    for (const auto &g : gates)
        g.validate(num_qubits);
    for (auto q : measured_qubits)
        if (q >= num_qubits)
            throw std::invalid_argument("measured qubit out of range");
    if (pulse_begin > pulse_end || pulse_end > gates.size())
        throw std::invalid_argument("pulse markers out of order");
}

std::vector<Moment> schedule_moments(const Circuit &c) {
    std::vector<Moment> moments;
    auto schedule_segment = [&](std::size_t begin, std::size_t end,
                                bool pulses) {
        const std::size_t base = moments.size();
        std::vector<std::size_t> free_at(c.num_qubits, base);
        for (std::size_t gi = begin; gi < end; ++gi) {
            const Gate &g = c.gates[gi];
            std::size_t slot = base;
            for (auto q : g.targets)
                slot = std::max(slot, free_at[q]);
            const std::size_t last = slot + g.duration_slots;
            if (moments.size() < last)
                moments.resize(last, Moment{{}, pulses});
            moments[slot].gates.push_back(gi);
            for (auto q : g.targets)
                free_at[q] = last;
        }
    };
    schedule_segment(0, c.pulse_begin, false);
    schedule_segment(c.pulse_begin, c.pulse_end, true);
    schedule_segment(c.pulse_end, c.gates.size(), false);
    return moments;
}

std::optional<PulseVariant> parse_variant(std::string_view name) {
    if (name == "leo")
        return PulseVariant::leo;
    if (name == "free")
        return PulseVariant::free;
    if (name == "leo-with-id")
        return PulseVariant::leo_with_id;
    return std::nullopt;
}

std::string_view to_string(PulseVariant v) {
    switch (v) {
    case PulseVariant::leo:
        return "leo";
    case PulseVariant::free:
        return "free";
    case PulseVariant::leo_with_id:
        return "leo-with-id";
    }
    return "?";
}

Circuit build_circuit(LeoKind kind, PulseVariant variant, std::size_t tau) {
    Circuit c;
    c.num_qubits = qubit_count(kind);
    switch (kind) {
    case LeoKind::z2:
        c.gates = {Gate::h(0), Gate::x(1), Gate::cnot(0, 1)};
        break;
    case LeoKind::z3:
        c.gates = {Gate::h(0), Gate::h(1), Gate::x(2), Gate::cnot(1, 2),
                   Gate::cnot(0, 1)};
        break;
    case LeoKind::cnot:
        c.gates = {Gate::x(0), Gate::h(1), Gate::z(1)};
        break;
    }
    c.pulse_begin = c.gates.size();
    for (std::size_t k = 0; k < tau; ++k) {
        append_pulse(c, kind, variant == PulseVariant::free);
        if (variant == PulseVariant::leo_with_id)
            append_identity_slot(c);
    }
    c.pulse_end = c.gates.size();
    if (kind == LeoKind::cnot) {
        c.gates.push_back(Gate::h(1));
        c.gates.push_back(Gate::x(0));
        c.gates.push_back(Gate::x(1));
    }
    for (std::size_t q = 0; q < c.num_qubits; ++q)
        c.measured_qubits.push_back(q);
    return c;
}

Circuit build_z2_circuit(std::size_t tau, bool insert_identity) {
    return build_circuit(LeoKind::z2,
                         insert_identity ? PulseVariant::leo_with_id
                                         : PulseVariant::leo,
                         tau);
}

Circuit build_z3_circuit(std::size_t tau, bool insert_identity) {
    return build_circuit(LeoKind::z3,
                         insert_identity ? PulseVariant::leo_with_id
                                         : PulseVariant::leo,
                         tau);
}

Circuit build_cnot_circuit(std::size_t tau, bool insert_identity) {
    return build_circuit(LeoKind::cnot,
                         insert_identity ? PulseVariant::leo_with_id
                                         : PulseVariant::leo,
                         tau);
}

std::vector<std::string> protected_labels(LeoKind kind) {
    switch (kind) {
    case LeoKind::z2:
        return {"01", "10"};
    case LeoKind::z3:
        return {"001", "010", "100", "111"};
    case LeoKind::cnot:
        // read-out maps (|10>-|11>)/sqrt2 onto |00>
        return {"00"};
    }
    return {};
}

std::string format_angle(double phi) {
    if (phi == 0.0)
        return "0";
    const double ratio = phi / std::numbers::pi;
    for (long den = 1; den <= 16; ++den) {
        const double num = std::round(ratio * static_cast<double>(den));
        if (std::abs(num) > 64.0)
            break;
        if (std::abs(ratio * static_cast<double>(den) - num) > 1e-12)
            continue;
        const long n = static_cast<long>(num);
        std::string out = n < 0 ? "-" : "";
        if (std::abs(n) != 1)
            out += std::to_string(std::abs(n)) + "*";
        out += "pi";
        if (den != 1)
            out += "/" + std::to_string(den);
        return out;
    }
    std::ostringstream os;
    os << std::setprecision(17) << phi;
    return os.str();
}

std::string export_qasm(const Circuit &c) {
    c.validate();
    std::ostringstream os;
    os << "OPENQASM 2.0;\n"
       << "include \"qelib1.inc\";\n"
       << "qreg q[" << c.num_qubits << "];\n"
       << "creg c[" << c.num_qubits << "];\n";
    for (const auto &g : c.gates) {
        const char *name = qasm_name(g.kind);
        if (name == nullptr)
            throw std::invalid_argument("export_qasm: unsupported gate kind");
        os << name;
        if (g.kind == GateKind::RX || g.kind == GateKind::RY ||
            g.kind == GateKind::RZ)
            os << '(' << format_angle(g.angle) << ')';
        os << ' ';
        for (std::size_t k = 0; k < g.targets.size(); ++k)
            os << (k ? "," : "") << "q[" << g.targets[k] << ']';
        os << ";\n";
    }
    // measurement is terminal and always covers every qubit
    for (std::size_t q = 0; q < c.num_qubits; ++q)
        os << "measure q[" << q << "] -> c[" << q << "];\n";
    return os.str();
}

} // namespace leolab
