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

#include "diqft/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diqft/errors.hpp"

namespace diqft {

double rotation_angle(int k) {
    if (k <= 0) {
        throw InvalidDistanceError("rotation index must be >= 1, got " + std::to_string(k));
    }
    return -std::ldexp(std::numbers::pi, -k);
}

int cross_node_distance(QubitRef ctrl, QubitRef tgt, const NodeLayout &layout) {
    const auto c = static_cast<long long>(layout.global_index(ctrl));
    const auto t = static_cast<long long>(layout.global_index(tgt));
    if (t <= c) {
        throw InvalidDistanceError("target index " + std::to_string(t) + " must exceed control index " +
                                   std::to_string(c));
    }
    const long long q = layout.qubits_per_node();
    return static_cast<int>(q * (static_cast<long long>(tgt.node) - ctrl.node) +
                            (static_cast<long long>(tgt.local) - ctrl.local));
}

double cross_node_angle(QubitRef ctrl, QubitRef tgt, const NodeLayout &layout) {
    return rotation_angle(cross_node_distance(ctrl, tgt, layout));
}

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::CP: return "CP";
        case GateKind::CNOT: return "CNOT";
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::MeasureZ: return "MEASURE";
        case GateKind::ClassicallyControlled: return "IF";
        case GateKind::EprPair: return "EPR";
    }
    return "?";
}

std::size_t Gate::arity() const {
    switch (kind) {
        case GateKind::CP:
        case GateKind::CNOT:
        case GateKind::EprPair: return 2;
        default: return 1;
    }
}

std::string to_string(const Gate &gate) {
    std::string out = gate_name(gate.kind);
    switch (gate.kind) {
        case GateKind::CP:
            out += " " + std::to_string(gate.qubits[0]) + " " + std::to_string(gate.qubits[1]) + " " +
                   std::to_string(gate.k);
            break;
        case GateKind::CNOT:
        case GateKind::EprPair:
            out += " " + std::to_string(gate.qubits[0]) + " " + std::to_string(gate.qubits[1]);
            break;
        case GateKind::MeasureZ:
            out += " " + std::to_string(gate.qubits[0]) + " c" + std::to_string(gate.bit);
            break;
        case GateKind::ClassicallyControlled:
            out += " c" + std::to_string(gate.bit) + " " + gate_name(gate.inner) + " " + std::to_string(gate.qubits[0]);
            break;
        default:
            out += " " + std::to_string(gate.qubits[0]);
            break;
    }
    return out;
}

std::vector<Qubit> bit_reversal(std::uint32_t n) {
    std::vector<Qubit> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        perm[i] = n - 1 - i;
    }
    return perm;
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), [&](const Gate &g) { return g.kind == kind; }));
}

void validate_gates(std::span<const Gate> gates, std::uint32_t width, int classical_bits) {
    std::vector<bool> written(static_cast<std::size_t>(std::max(classical_bits, 0)), false);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate &g = gates[i];
        const auto where = [&] { return "op " + std::to_string(i) + " (" + to_string(g) + ")"; };
        for (std::size_t j = 0; j < g.arity(); ++j) {
            if (g.qubits[j] >= width) {
                throw AddressingError(where() + " addresses wire outside width " + std::to_string(width));
            }
        }
        if (g.arity() == 2 && g.qubits[0] == g.qubits[1]) {
            throw std::invalid_argument(where() + " uses the same wire twice");
        }
        if (g.kind == GateKind::CP && g.k <= 0) {
            throw InvalidDistanceError(where() + " has non-positive rotation index");
        }
        if (g.kind == GateKind::MeasureZ || g.kind == GateKind::ClassicallyControlled) {
            if (g.bit < 0 || g.bit >= classical_bits) {
                throw AddressingError(where() + " uses unallocated classical bit");
            }
            const auto b = static_cast<std::size_t>(g.bit);
            if (g.kind == GateKind::MeasureZ) {
                if (written[b]) {
                    throw std::invalid_argument(where() + " writes a classical bit twice");
                }
                written[b] = true;
            } else {
                if (!written[b]) {
                    throw std::invalid_argument(where() + " reads a classical bit before it is written");
                }
                if (g.inner != GateKind::X && g.inner != GateKind::Z) {
                    throw std::invalid_argument(where() + " may only wrap X or Z corrections");
                }
            }
        }
    }
}

void validate(const Circuit &circuit) {
    validate_gates(circuit.gates, circuit.num_qubits(), circuit.classical_bits);
    if (!circuit.input_permutation.empty()) {
        auto sorted = circuit.input_permutation;
        std::sort(sorted.begin(), sorted.end());
        for (std::uint32_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] != i || sorted.size() != circuit.num_qubits()) {
                throw std::invalid_argument("input permutation is not a permutation of the register");
            }
        }
    }
}

}  // namespace diqft
