// Copyright 2026 The diqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "diqft/layout.hpp"

namespace diqft {

/// theta_k = -pi / 2^k. Throws InvalidDistanceError for k <= 0.
double rotation_angle(int k);

/// Index difference k = Q (tgt.node - ctrl.node) + (tgt.local - ctrl.local).
/// Throws InvalidDistanceError unless the target sits above the control.
int cross_node_distance(QubitRef ctrl, QubitRef tgt, const NodeLayout &layout);
double cross_node_angle(QubitRef ctrl, QubitRef tgt, const NodeLayout &layout);

enum class GateKind : std::uint8_t {
    H,
    CP,
    CNOT,
    X,
    Z,
    MeasureZ,
    ClassicallyControlled,
    /// Pseudo-op: re-initialises two wires to (|00> + |11>)/sqrt(2).
    EprPair,
};

const char *gate_name(GateKind kind);

/// A gate over flat wire indices. CP angles are kept as the dyadic exponent k
/// (angle -pi/2^k) so pruning compares integers; radians appear only in the
/// simulator.
struct Gate {
    GateKind kind = GateKind::H;
    /// Wrapped single-qubit gate for ClassicallyControlled (X or Z).
    GateKind inner = GateKind::H;
    std::array<Qubit, 2> qubits{};
    int k = 0;
    int bit = -1;

    static Gate h(Qubit q) { return {GateKind::H, GateKind::H, {q, q}, 0, -1}; }
    static Gate x(Qubit q) { return {GateKind::X, GateKind::H, {q, q}, 0, -1}; }
    static Gate z(Qubit q) { return {GateKind::Z, GateKind::H, {q, q}, 0, -1}; }
    static Gate cp(Qubit control, Qubit target, int k) { return {GateKind::CP, GateKind::H, {control, target}, k, -1}; }
    static Gate cnot(Qubit control, Qubit target) { return {GateKind::CNOT, GateKind::H, {control, target}, 0, -1}; }
    static Gate measure(Qubit q, int bit) { return {GateKind::MeasureZ, GateKind::H, {q, q}, 0, bit}; }
    static Gate classically_controlled(GateKind inner, Qubit q, int bit) {
        return {GateKind::ClassicallyControlled, inner, {q, q}, 0, bit};
    }
    static Gate epr_pair(Qubit a, Qubit b) { return {GateKind::EprPair, GateKind::H, {a, b}, 0, -1}; }

    std::size_t arity() const;
    double angle() const { return rotation_angle(k); }

    friend bool operator==(const Gate &, const Gate &) = default;
};

std::string to_string(const Gate &gate);

/// Wire i carries label bit n - 1 - i.
std::vector<Qubit> bit_reversal(std::uint32_t n);

struct Circuit {
    explicit Circuit(NodeLayout layout_) : layout(layout_) {}

    NodeLayout layout;
    std::vector<Gate> gates;
    int classical_bits = 0;
    /// Wire i is loaded with bit `input_permutation[i]` of the input label;
    /// empty means identity.
    std::vector<Qubit> input_permutation;

    std::uint32_t num_qubits() const { return layout.num_qubits(); }
    std::size_t count(GateKind kind) const;
};

/// Checks operands and gate-specific invariants over `width` wires.
void validate_gates(std::span<const Gate> gates, std::uint32_t width, int classical_bits);
void validate(const Circuit &circuit);

}  // namespace diqft
