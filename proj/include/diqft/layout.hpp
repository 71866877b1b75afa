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

#include <compare>
#include <cstdint>

namespace diqft {

/// Index of a wire in a flat register. Wires [0, n) are logical qubits;
/// lowered programs append ancilla wires after them.
using Qubit = std::uint32_t;

struct QubitRef {
    std::uint32_t node = 0;
    std::uint32_t local = 0;

    friend auto operator<=>(const QubitRef &, const QubitRef &) = default;
};

/// P nodes holding Q qubits each. Global index I = node * Q + local, so node
/// indices carry the high-order bits of a basis-state label.
class NodeLayout {
   public:
    NodeLayout(std::uint32_t nodes, std::uint32_t qubits_per_node);

    std::uint32_t nodes() const { return nodes_; }
    std::uint32_t qubits_per_node() const { return qubits_per_node_; }
    std::uint32_t num_qubits() const { return nodes_ * qubits_per_node_; }

    bool contains(QubitRef ref) const { return ref.node < nodes_ && ref.local < qubits_per_node_; }

    /// Throws AddressingError when `ref` is outside the layout.
    Qubit global_index(QubitRef ref) const;
    QubitRef locate(Qubit global) const;
    std::uint32_t node_of(Qubit global) const;

    friend bool operator==(const NodeLayout &, const NodeLayout &) = default;

   private:
    std::uint32_t nodes_;
    std::uint32_t qubits_per_node_;
};

Qubit global_index(std::uint32_t local, std::uint32_t node, const NodeLayout &layout);

}  // namespace diqft
