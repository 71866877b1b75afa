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

#include <cstdint>
#include <optional>
#include <vector>

#include "diqft/circuit.hpp"
#include "diqft/layout.hpp"

namespace diqft {

/// Which controlled-phase gates survive synthesis. A resolved threshold t keeps
/// gates whose index difference k satisfies k <= t; std::nullopt keeps all.
class PruneSpec {
   public:
    enum class Mode { exact, epsilon, threshold, horizon };

    static PruneSpec exact() { return PruneSpec(Mode::exact, 0.0, 0); }
    static PruneSpec from_epsilon(double epsilon);
    static PruneSpec from_threshold(int t);
    static PruneSpec from_horizon(int d_max);
    /// nullopt means exact.
    static PruneSpec from_optional_threshold(std::optional<int> t) { return t ? from_threshold(*t) : exact(); }

    Mode mode() const { return mode_; }
    double epsilon() const { return epsilon_; }
    int value() const { return value_; }

    /// Threshold used for a register whose nodes hold `qubits_per_node` qubits.
    std::optional<int> resolve(std::uint32_t qubits_per_node) const;

   private:
    PruneSpec(Mode mode, double epsilon, int value) : mode_(mode), epsilon_(epsilon), value_(value) {}

    Mode mode_;
    double epsilon_;
    int value_;
};

/// ceil(-log2 eps). Throws InvalidToleranceError unless 0 < eps < 1.
int threshold_from_epsilon(double epsilon);
/// floor((t - 1) / Q) + 1: the largest node distance with a surviving gate.
int horizon_for_threshold(int t, std::uint32_t qubits_per_node);
int communication_horizon(double epsilon, std::uint32_t qubits_per_node);

struct HorizonBound {
    int t_min;
    double epsilon;
};

/// Smallest threshold whose horizon is `d_max`, and the matching 2^-t_min.
HorizonBound invert_horizon(std::uint32_t qubits_per_node, int d_max);

/// Smallest index difference inside a block at node distance d: Q(d - 1) + 1.
int k_min(std::uint32_t qubits_per_node, int distance);

inline bool survives(int k, std::optional<int> threshold) { return !threshold || k <= *threshold; }

struct RemoteCp {
    QubitRef control;
    QubitRef target;
    int k;

    double angle() const { return rotation_angle(k); }
    friend bool operator==(const RemoteCp &, const RemoteCp &) = default;
};

/// All remote controlled phases between one control node and one later target
/// node, ordered by control local index then target local index.
struct CommBlock {
    std::uint32_t ctrl_node = 0;
    std::uint32_t tgt_node = 0;
    std::vector<RemoteCp> gates;

    int distance() const { return static_cast<int>(tgt_node) - static_cast<int>(ctrl_node); }
};

/// Unpruned block between `ctrl_node` and `tgt_node` (Q^2 gates).
CommBlock full_comm_block(const NodeLayout &layout, std::uint32_t ctrl_node, std::uint32_t tgt_node);

/// Drops gates with k > t. Returns nullopt once the strongest gate of the block
/// is below the threshold (distance beyond the horizon).
std::optional<CommBlock> prune_block(const CommBlock &block, std::uint32_t qubits_per_node, int t);

struct Segment {
    enum class Kind { local, comm };
    Kind kind;
    /// Node index for local segments, position in comm_blocks otherwise.
    std::uint32_t index;

    friend bool operator==(const Segment &, const Segment &) = default;
};

struct DistributedCircuit {
    explicit DistributedCircuit(NodeLayout layout_) : layout(layout_) {}

    NodeLayout layout;
    /// Per-node Q-qubit circuits over local indices.
    std::vector<Circuit> local_blocks;
    std::vector<CommBlock> comm_blocks;
    /// Execution order of blocks.
    std::vector<Segment> schedule;
    std::vector<Qubit> input_permutation;
    std::optional<int> threshold;

    std::size_t local_cp_count() const;
    std::size_t remote_cp_count() const;

    /// Global-index circuit in schedule order, carrying the input permutation.
    Circuit flatten() const;
};

/// H on qubit j then CP(j -> i, k = i - j) for surviving i > j, for j ascending.
/// The bit reversal is recorded as an input permutation: with wire 0 the least
/// significant bit, this schedule maps a Fourier state to |x> only when the
/// input label is reversed first.
Circuit build_monolithic_iqft(std::uint32_t n, const PruneSpec &prune);
Circuit build_monolithic_iqft(std::uint32_t n, std::optional<int> threshold);

/// For each node p: comm blocks targeting p from distance p down to 1, then
/// p's local block. Blocks beyond the threshold are absent.
DistributedCircuit build_distributed_iqft(const NodeLayout &layout, const PruneSpec &prune);
DistributedCircuit build_distributed_iqft(const NodeLayout &layout, std::optional<int> threshold);

}  // namespace diqft
