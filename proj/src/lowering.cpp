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

#include "diqft/lowering.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "diqft/errors.hpp"

namespace diqft {

const char *protocol_name(Protocol protocol) {
    return protocol == Protocol::telegate ? "telegate" : "teledata";
}

Protocol parse_protocol(const std::string &name) {
    if (name == "telegate") {
        return Protocol::telegate;
    }
    if (name == "teledata") {
        return Protocol::teledata;
    }
    throw std::invalid_argument("unknown protocol '" + name + "' (expected telegate or teledata)");
}

namespace {

LoweredProgram start_program(const DistributedCircuit &circuit, Protocol protocol) {
    LoweredProgram program(circuit.layout);
    program.protocol = protocol;
    const std::uint32_t n = circuit.layout.num_qubits();
    program.width = circuit.comm_blocks.empty() ? n : n + 2;
    program.input_permutation = circuit.input_permutation;
    program.final_location.resize(n);
    std::iota(program.final_location.begin(), program.final_location.end(), Qubit{0});
    program.ledger.epr_by_node.assign(circuit.layout.nodes(), 0.0);
    return program;
}

void charge_epr(ResourceLedger &ledger, std::uint32_t a, std::uint32_t b) {
    ++ledger.epr_total;
    ledger.epr_by_node[a] += 0.5;
    ledger.epr_by_node[b] += 0.5;
}

Gate relocate(Gate g, std::uint32_t offset) {
    g.qubits[0] += offset;
    g.qubits[1] = g.arity() == 2 ? g.qubits[1] + offset : g.qubits[0];
    return g;
}

}  // namespace

LoweredProgram lower_telegate(const DistributedCircuit &circuit, const CommOpPolicy &policy) {
    LoweredProgram program = start_program(circuit, Protocol::telegate);
    const NodeLayout &layout = circuit.layout;
    const std::uint32_t n = layout.num_qubits();
    const Qubit near_half = n;
    const Qubit far_half = n + 1;
    auto &ledger = program.ledger;

    for (const auto &seg : circuit.schedule) {
        if (seg.kind == Segment::Kind::local) {
            const std::uint32_t offset = seg.index * layout.qubits_per_node();
            for (const Gate &g : circuit.local_blocks.at(seg.index).gates) {
                program.ops.push_back(relocate(g, offset));
                if (g.kind == GateKind::CP) {
                    ++ledger.comp_ops_local_cp;
                }
            }
            continue;
        }

        const CommBlock &block = circuit.comm_blocks.at(seg.index);
        auto it = block.gates.begin();
        while (it != block.gates.end()) {
            const QubitRef control = it->control;
            CatSession session{control, block.tgt_node, ledger.epr_total, {}};
            for (; it != block.gates.end() && it->control == control; ++it) {
                session.targets.emplace_back(it->target.local, it->k);
            }
            const Qubit ctrl_wire = layout.global_index(control);
            const int m_a = program.classical_bits++;
            const int m_b = program.classical_bits++;

            program.ops.push_back(Gate::epr_pair(near_half, far_half));
            // Cat-entangle: far_half becomes a copy of the control in the Z basis.
            program.ops.push_back(Gate::cnot(ctrl_wire, near_half));
            program.ops.push_back(Gate::measure(near_half, m_a));
            program.ops.push_back(Gate::classically_controlled(GateKind::X, far_half, m_a));
            for (const auto &[tgt_local, k] : session.targets) {
                program.ops.push_back(Gate::cp(far_half, layout.global_index({block.tgt_node, tgt_local}), k));
            }
            // Cat-disentangle.
            program.ops.push_back(Gate::h(far_half));
            program.ops.push_back(Gate::measure(far_half, m_b));
            program.ops.push_back(Gate::classically_controlled(GateKind::Z, ctrl_wire, m_b));

            charge_epr(ledger, block.ctrl_node, block.tgt_node);
            ledger.classical_messages += 2;
            ledger.comm_ops += static_cast<std::size_t>(policy.per_instance());
            ledger.comp_ops_remote_cp += session.targets.size();
            ++ledger.telegate_sessions;
            program.sessions.push_back(std::move(session));
        }
    }
    return program;
}

namespace {

class TeledataLowering {
   public:
    TeledataLowering(const DistributedCircuit &circuit, const TeledataOptions &options)
        : circuit_(circuit),
          options_(options),
          layout_(circuit.layout),
          program_(start_program(circuit, Protocol::teledata)) {
        const std::uint32_t n = layout_.num_qubits();
        current_node_.resize(n);
        for (Qubit q = 0; q < n; ++q) {
            current_node_[q] = layout_.node_of(q);
        }
        occupancy_.assign(layout_.nodes(), layout_.qubits_per_node());
        for (Qubit w = n; w < program_.width; ++w) {
            free_wires_.insert(w);
        }
    }

    LoweredProgram run() {
        auto &ledger = program_.ledger;
        for (const auto &seg : circuit_.schedule) {
            if (seg.kind == Segment::Kind::local) {
                const std::uint32_t node = seg.index;
                const std::uint32_t offset = node * layout_.qubits_per_node();
                for (const Gate &g : circuit_.local_blocks.at(node).gates) {
                    Gate placed = relocate(g, offset);
                    for (std::size_t j = 0; j < placed.arity(); ++j) {
                        move_to(placed.qubits[j], node);
                    }
                    for (std::size_t j = 0; j < placed.arity(); ++j) {
                        placed.qubits[j] = program_.final_location[placed.qubits[j]];
                    }
                    placed.qubits[1] = placed.arity() == 2 ? placed.qubits[1] : placed.qubits[0];
                    program_.ops.push_back(placed);
                    if (g.kind == GateKind::CP) {
                        ++ledger.comp_ops_local_cp;
                    }
                }
                continue;
            }
            const CommBlock &block = circuit_.comm_blocks.at(seg.index);
            for (const auto &g : block.gates) {
                const Qubit control = layout_.global_index(g.control);
                const Qubit target = layout_.global_index(g.target);
                move_to(target, block.tgt_node);
                move_to(control, block.tgt_node);
                program_.ops.push_back(
                    Gate::cp(program_.final_location[control], program_.final_location[target], g.k));
                ++ledger.comp_ops_remote_cp;
            }
        }
        return std::move(program_);
    }

   private:
    void check_capacity(std::uint32_t node) const {
        if (options_.ancilla_budget && occupancy_[node] + 1 > layout_.qubits_per_node() + *options_.ancilla_budget) {
            throw CapacityError("node " + std::to_string(node) + " has no free ancilla slot (budget " +
                                std::to_string(*options_.ancilla_budget) + ")");
        }
    }

    // Teleports logical qubit q to `node` if it is elsewhere.
    void move_to(Qubit q, std::uint32_t node) {
        const std::uint32_t src = current_node_[q];
        if (src == node) {
            return;
        }
        check_capacity(src);
        check_capacity(node);
        if (free_wires_.size() < 2) {
            throw std::logic_error("teledata lowering ran out of ancilla wires");
        }
        const Qubit sender = *free_wires_.begin();
        free_wires_.erase(free_wires_.begin());
        const Qubit receiver = *free_wires_.begin();
        free_wires_.erase(free_wires_.begin());
        const Qubit source = program_.final_location[q];
        const int m1 = program_.classical_bits++;
        const int m2 = program_.classical_bits++;

        auto &ops = program_.ops;
        ops.push_back(Gate::epr_pair(sender, receiver));
        // Bell measurement on (source, sender).
        ops.push_back(Gate::cnot(source, sender));
        ops.push_back(Gate::h(source));
        ops.push_back(Gate::measure(source, m1));
        ops.push_back(Gate::measure(sender, m2));
        ops.push_back(Gate::classically_controlled(GateKind::X, receiver, m2));
        ops.push_back(Gate::classically_controlled(GateKind::Z, receiver, m1));

        free_wires_.insert(source);
        free_wires_.insert(sender);
        program_.final_location[q] = receiver;
        --occupancy_[src];
        ++occupancy_[node];
        current_node_[q] = node;

        auto &ledger = program_.ledger;
        charge_epr(ledger, src, node);
        ledger.classical_messages += 1;
        ledger.comm_ops += static_cast<std::size_t>(options_.policy.per_instance());
        ++ledger.teleports;
    }

    const DistributedCircuit &circuit_;
    const TeledataOptions &options_;
    NodeLayout layout_;
    LoweredProgram program_;
    std::vector<std::uint32_t> current_node_;
    std::vector<std::uint32_t> occupancy_;
    std::set<Qubit> free_wires_;
};

}  // namespace

LoweredProgram lower_teledata(const DistributedCircuit &circuit, const TeledataOptions &options) {
    return TeledataLowering(circuit, options).run();
}

LoweredProgram lower(const DistributedCircuit &circuit, Protocol protocol) {
    return protocol == Protocol::telegate ? lower_telegate(circuit) : lower_teledata(circuit);
}

EprPerNode epr_per_node(const LoweredProgram &program) {
    EprPerNode out{program.ledger.epr_by_node, 0.0};
    if (!out.per_node.empty()) {
        out.max = *std::max_element(out.per_node.begin(), out.per_node.end());
    }
    return out;
}

}  // namespace diqft
