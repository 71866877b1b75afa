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

#include "diqft/iqft.hpp"

#include <cmath>
#include <string>

#include "diqft/errors.hpp"

namespace diqft {

namespace {

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw InvalidToleranceError("error tolerance must lie in (0, 1), got " + std::to_string(epsilon));
    }
}

// Circuit of a q-qubit iQFT over wires offset..offset+q-1.
void append_iqft(std::vector<Gate> &gates, std::uint32_t q, std::optional<int> threshold) {
    for (std::uint32_t j = 0; j < q; ++j) {
        gates.push_back(Gate::h(j));
        for (std::uint32_t i = j + 1; i < q; ++i) {
            const int k = static_cast<int>(i - j);
            if (!survives(k, threshold)) {
                break;
            }
            gates.push_back(Gate::cp(j, i, k));
        }
    }
}

}  // namespace

PruneSpec PruneSpec::from_epsilon(double epsilon) {
    check_epsilon(epsilon);
    return PruneSpec(Mode::epsilon, epsilon, threshold_from_epsilon(epsilon));
}

PruneSpec PruneSpec::from_threshold(int t) {
    if (t < 1) {
        throw std::invalid_argument("threshold must be >= 1, got " + std::to_string(t));
    }
    return PruneSpec(Mode::threshold, 0.0, t);
}

PruneSpec PruneSpec::from_horizon(int d_max) {
    if (d_max < 1) {
        throw std::invalid_argument("communication horizon must be >= 1, got " + std::to_string(d_max));
    }
    return PruneSpec(Mode::horizon, 0.0, d_max);
}

std::optional<int> PruneSpec::resolve(std::uint32_t qubits_per_node) const {
    switch (mode_) {
        case Mode::exact: return std::nullopt;
        case Mode::epsilon:
        case Mode::threshold: return value_;
        case Mode::horizon: return invert_horizon(qubits_per_node, value_).t_min;
    }
    return std::nullopt;
}

int threshold_from_epsilon(double epsilon) {
    check_epsilon(epsilon);
    // log2 is exact on powers of two, so 2^-m maps to m.
    return static_cast<int>(std::ceil(-std::log2(epsilon)));
}

int horizon_for_threshold(int t, std::uint32_t qubits_per_node) {
    if (t < 1 || qubits_per_node < 1) {
        throw std::invalid_argument("horizon needs t >= 1 and Q >= 1");
    }
    return (t - 1) / static_cast<int>(qubits_per_node) + 1;
}

int communication_horizon(double epsilon, std::uint32_t qubits_per_node) {
    return horizon_for_threshold(threshold_from_epsilon(epsilon), qubits_per_node);
}

HorizonBound invert_horizon(std::uint32_t qubits_per_node, int d_max) {
    if (qubits_per_node < 1 || d_max < 1) {
        throw std::invalid_argument("invert_horizon needs Q >= 1 and d_max >= 1");
    }
    const int t_min = static_cast<int>(qubits_per_node) * (d_max - 1) + 1;
    return {t_min, std::ldexp(1.0, -t_min)};
}

int k_min(std::uint32_t qubits_per_node, int distance) {
    if (distance < 1) {
        throw InvalidDistanceError("block distance must be >= 1, got " + std::to_string(distance));
    }
    return static_cast<int>(qubits_per_node) * (distance - 1) + 1;
}

CommBlock full_comm_block(const NodeLayout &layout, std::uint32_t ctrl_node, std::uint32_t tgt_node) {
    if (tgt_node <= ctrl_node || tgt_node >= layout.nodes()) {
        throw AddressingError("communication block needs ctrl_node < tgt_node < P");
    }
    CommBlock block{ctrl_node, tgt_node, {}};
    const std::uint32_t q = layout.qubits_per_node();
    block.gates.reserve(static_cast<std::size_t>(q) * q);
    for (std::uint32_t c = 0; c < q; ++c) {
        for (std::uint32_t t = 0; t < q; ++t) {
            const QubitRef ctrl{ctrl_node, c};
            const QubitRef tgt{tgt_node, t};
            block.gates.push_back({ctrl, tgt, cross_node_distance(ctrl, tgt, layout)});
        }
    }
    return block;
}

std::optional<CommBlock> prune_block(const CommBlock &block, std::uint32_t qubits_per_node, int t) {
    if (k_min(qubits_per_node, block.distance()) > t) {
        return std::nullopt;
    }
    CommBlock kept{block.ctrl_node, block.tgt_node, {}};
    for (const auto &g : block.gates) {
        if (g.k <= t) {
            kept.gates.push_back(g);
        }
    }
    return kept;
}

std::size_t DistributedCircuit::local_cp_count() const {
    std::size_t total = 0;
    for (const auto &block : local_blocks) {
        total += block.count(GateKind::CP);
    }
    return total;
}

std::size_t DistributedCircuit::remote_cp_count() const {
    std::size_t total = 0;
    for (const auto &block : comm_blocks) {
        total += block.gates.size();
    }
    return total;
}

Circuit DistributedCircuit::flatten() const {
    Circuit out(layout);
    out.input_permutation = input_permutation;
    const std::uint32_t q = layout.qubits_per_node();
    for (const auto &seg : schedule) {
        if (seg.kind == Segment::Kind::local) {
            const Qubit offset = seg.index * q;
            for (Gate g : local_blocks.at(seg.index).gates) {
                for (std::size_t j = 0; j < g.arity(); ++j) {
                    g.qubits[j] += offset;
                }
                if (g.arity() == 1) {
                    g.qubits[1] = g.qubits[0];
                }
                out.gates.push_back(g);
            }
        } else {
            for (const auto &g : comm_blocks.at(seg.index).gates) {
                out.gates.push_back(Gate::cp(layout.global_index(g.control), layout.global_index(g.target), g.k));
            }
        }
    }
    return out;
}

Circuit build_monolithic_iqft(std::uint32_t n, std::optional<int> threshold) {
    if (n == 0) {
        throw std::invalid_argument("iQFT needs at least one qubit");
    }
    Circuit circuit(NodeLayout(1, n));
    circuit.gates.reserve(n + static_cast<std::size_t>(n) * (n - 1) / 2);
    append_iqft(circuit.gates, n, threshold);
    circuit.input_permutation = bit_reversal(n);
    return circuit;
}

Circuit build_monolithic_iqft(std::uint32_t n, const PruneSpec &prune) {
    return build_monolithic_iqft(n, prune.resolve(n));
}

DistributedCircuit build_distributed_iqft(const NodeLayout &layout, std::optional<int> threshold) {
    DistributedCircuit dc(layout);
    dc.threshold = threshold;
    dc.input_permutation = bit_reversal(layout.num_qubits());
    const std::uint32_t p_count = layout.nodes();
    const std::uint32_t q = layout.qubits_per_node();

    Circuit local(NodeLayout(1, q));
    append_iqft(local.gates, q, threshold);
    dc.local_blocks.assign(p_count, local);

    for (std::uint32_t tgt = 0; tgt < p_count; ++tgt) {
        for (std::uint32_t d = tgt; d >= 1; --d) {
            if (!survives(k_min(q, static_cast<int>(d)), threshold)) {
                continue;
            }
            CommBlock block{tgt - d, tgt, {}};
            for (std::uint32_t c = 0; c < q; ++c) {
                for (std::uint32_t t = 0; t < q; ++t) {
                    const int k = static_cast<int>(q * d + t) - static_cast<int>(c);
                    if (!survives(k, threshold)) {
                        break;
                    }
                    block.gates.push_back({{tgt - d, c}, {tgt, t}, k});
                }
            }
            dc.schedule.push_back({Segment::Kind::comm, static_cast<std::uint32_t>(dc.comm_blocks.size())});
            dc.comm_blocks.push_back(std::move(block));
        }
        dc.schedule.push_back({Segment::Kind::local, tgt});
    }
    return dc;
}

DistributedCircuit build_distributed_iqft(const NodeLayout &layout, const PruneSpec &prune) {
    return build_distributed_iqft(layout, prune.resolve(layout.qubits_per_node()));
}

}  // namespace diqft
