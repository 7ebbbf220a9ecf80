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
 * Gates, the three pulse-sequence circuits and OpenQASM 2.0 export.
 */

#pragma once

#include "leolab/algebra.hpp"
#include "leolab/qcore.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace leolab {

enum class GateKind { X, Z, H, CNOT, ID, RX, RY, RZ };

struct Gate {
    GateKind kind = GateKind::ID;
    std::vector<std::size_t> targets; ///< control first for CNOT
    double angle = 0.0;               ///< rotations only
    std::size_t duration_slots = 1;

    static Gate x(std::size_t q) { return {GateKind::X, {q}}; }
    static Gate z(std::size_t q) { return {GateKind::Z, {q}}; }
    static Gate h(std::size_t q) { return {GateKind::H, {q}}; }
    static Gate id(std::size_t q) { return {GateKind::ID, {q}}; }
    static Gate cnot(std::size_t control, std::size_t target) {
        return {GateKind::CNOT, {control, target}};
    }
    static Gate rx(std::size_t q, double phi) { return {GateKind::RX, {q}, phi}; }
    static Gate ry(std::size_t q, double phi) { return {GateKind::RY, {q}, phi}; }
    static Gate rz(std::size_t q, double phi) { return {GateKind::RZ, {q}, phi}; }

    /// 2x2, or 4x4 for CNOT in (control, target) order. Rotations follow
    /// the qelib1 convention R(phi) = exp(-i phi sigma / 2).
    [[nodiscard]] ComplexMatrix matrix() const;
    [[nodiscard]] std::size_t arity() const {
        return kind == GateKind::CNOT ? 2 : 1;
    }
    /// Throws std::invalid_argument on bad target lists.
    void validate(std::size_t num_qubits) const;
};

/**
 * Ordered gate list. Gates in [pulse_begin, pulse_end) form the pulse block
 * between the preparation marker and the end-of-pulses marker; the rest is
 * state preparation or read-out.
 */
struct Circuit {
    std::size_t num_qubits = 0;
    std::vector<Gate> gates;
    std::vector<std::size_t> measured_qubits;
    std::size_t pulse_begin = 0;
    std::size_t pulse_end = 0;

    void validate() const;
};

/// One time slot: gates that start together on disjoint qubits.
struct Moment {
    std::vector<std::size_t> gates; ///< indices into Circuit::gates
    bool in_pulse_block = false;
};

/**
 * As-soon-as-possible layering. The two markers act as barriers, so a pulse
 * never shares a slot with preparation or read-out gates.
 */
std::vector<Moment> schedule_moments(const Circuit &c);

/// What fills each pulse position of an experiment circuit.
enum class PulseVariant { leo, free, leo_with_id };

std::optional<PulseVariant> parse_variant(std::string_view name);
std::string_view to_string(PulseVariant v);

/// Preparation, tau pulse slots for `variant`, read-out, terminal measure.
Circuit build_circuit(LeoKind kind, PulseVariant variant, std::size_t tau);

/// H q0, X q1, CNOT(q0,q1), then tau rounds of Z q0, Z q1.
Circuit build_z2_circuit(std::size_t tau, bool insert_identity = false);
/// H q0, H q1, X q2, CNOT(q1,q2), CNOT(q0,q1), then tau rounds of Z on all.
Circuit build_z3_circuit(std::size_t tau, bool insert_identity = false);
/// X q0, H q1, Z q1, tau CNOT(q0,q1), then H q1, X q0, X q1.
Circuit build_cnot_circuit(std::size_t tau, bool insert_identity = false);

/// Labels of the outcomes that count as protected after read-out.
std::vector<std::string> protected_labels(LeoKind kind);

/// OpenQASM 2.0 text; byte-stable for a given circuit.
std::string export_qasm(const Circuit &c);

/// "pi", "pi/2", "-3*pi/4", ... for small rational multiples of pi.
std::string format_angle(double phi);

} // namespace leolab
