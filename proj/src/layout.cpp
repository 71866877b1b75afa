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

#include "diqft/layout.hpp"

#include <string>

#include "diqft/errors.hpp"

namespace diqft {

NodeLayout::NodeLayout(std::uint32_t nodes, std::uint32_t qubits_per_node)
    : nodes_(nodes), qubits_per_node_(qubits_per_node) {
    if (nodes == 0 || qubits_per_node == 0) {
        throw std::invalid_argument("NodeLayout needs P >= 1 and Q >= 1, got P=" + std::to_string(nodes) +
                                    " Q=" + std::to_string(qubits_per_node));
    }
}

Qubit NodeLayout::global_index(QubitRef ref) const {
    if (!contains(ref)) {
        throw AddressingError("qubit (node " + std::to_string(ref.node) + ", local " + std::to_string(ref.local) +
                              ") is outside a " + std::to_string(nodes_) + "x" + std::to_string(qubits_per_node_) +
                              " layout");
    }
    return ref.node * qubits_per_node_ + ref.local;
}

QubitRef NodeLayout::locate(Qubit global) const {
    if (global >= num_qubits()) {
        throw AddressingError("global index " + std::to_string(global) + " is outside a register of " +
                              std::to_string(num_qubits()) + " qubits");
    }
    return {global / qubits_per_node_, global % qubits_per_node_};
}

std::uint32_t NodeLayout::node_of(Qubit global) const { return locate(global).node; }

Qubit global_index(std::uint32_t local, std::uint32_t node, const NodeLayout &layout) {
    return layout.global_index({node, local});
}

}  // namespace diqft
