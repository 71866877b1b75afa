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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diqft/circuit.hpp"
#include "diqft/iqft.hpp"
#include "diqft/layout.hpp"

namespace diqft {

/// Operations charged to N_comm for each protocol instance. A telegate session
/// and a teledata teleport both use one of each item, except two measurements.
struct CommOpPolicy {
    int epr_generation = 1;
    int entangling_cnot = 1;
    int measurements = 2;
    int x_correction = 1;
    int hadamard = 1;
    int z_correction = 1;

    int per_instance() const {
        return epr_generation + entangling_cnot + measurements + x_correction + hadamard + z_correction;
    }
};

struct ResourceLedger {
    std::size_t epr_total = 0;
    /// Each EPR pair contributes 1/2 to both endpoint nodes.
    std::vector<double> epr_by_node;
    std::size_t classical_messages = 0;
    std::size_t comm_ops = 0;
    std::size_t comp_ops_local_cp = 0;
    std::size_t comp_ops_remote_cp = 0;
    std::size_t telegate_sessions = 0;
    std::size_t teleports = 0;

    std::size_t logical_cp() const { return comp_ops_local_cp + comp_ops_remote_cp; }
};

/// One cat-entangle / local interaction / cat-disentangle cycle: a control
/// qubit serving all of its surviving targets in one block with one EPR pair.
struct CatSession {
    QubitRef control;
    std::uint32_t tgt_node;
    std::size_t epr_id;
    /// (target local index, k)
    std::vector<std::pair<std::uint32_t, int>> targets;
};

enum class Protocol { telegate, teledata };

const char *protocol_name(Protocol protocol);
Protocol parse_protocol(const std::string &name);

/// Primitive program over `width` wires: logical qubits on [0, n) at start,
/// ancillas after them. `final_location[i]` is the wire holding logical qubit i
/// once the program ends.
struct LoweredProgram {
    explicit LoweredProgram(NodeLayout layout_) : layout(layout_) {}

    NodeLayout layout;
    Protocol protocol = Protocol::telegate;
    std::uint32_t width = 0;
    std::vector<Gate> ops;
    int classical_bits = 0;
    std::vector<Qubit> final_location;
    std::vector<Qubit> input_permutation;
    ResourceLedger ledger;
    std::vector<CatSession> sessions;

    std::uint32_t num_logical() const { return layout.num_qubits(); }
};

/// Remote CPs become telegate sessions with cat-state reuse; the two ancilla
/// wires n and n+1 are re-initialised by every EPR pseudo-op. Local gates pass
/// through unchanged.
LoweredProgram lower_telegate(const DistributedCircuit &circuit, const CommOpPolicy &policy = {});

struct TeledataOptions {
    /// Extra slots per node beyond its Q data qubits. nullopt = unbounded.
    std::optional<std::uint32_t> ancilla_budget;
    CommOpPolicy policy;
};

/// Moves qubits to where their next gate executes. A control leaves its target
/// node only when a later gate needs it elsewhere, so a qubit with no later use
/// stays where it was last used. Throws CapacityError when a node would exceed
/// Q + ancilla_budget occupied slots.
LoweredProgram lower_teledata(const DistributedCircuit &circuit, const TeledataOptions &options = {});

LoweredProgram lower(const DistributedCircuit &circuit, Protocol protocol);

struct EprPerNode {
    std::vector<double> per_node;
    double max = 0.0;
};

EprPerNode epr_per_node(const LoweredProgram &program);

/// Line-oriented debug dump; see README for the format.
void write_program_text(std::ostream &out, const LoweredProgram &program);
std::string program_text(const LoweredProgram &program);

}  // namespace diqft
