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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "diqft/errors.hpp"
#include "diqft/iqft.hpp"
#include "oracles.hpp"

using namespace diqft;

namespace {

std::multiset<std::tuple<unsigned, unsigned, int>> cp_multiset(const Circuit &c) {
    std::multiset<std::tuple<unsigned, unsigned, int>> out;
    for (const Gate &g : c.gates) {
        if (g.kind == GateKind::CP) {
            out.insert({g.qubits[0], g.qubits[1], g.k});
        }
    }
    return out;
}

}  // namespace

TEST(Threshold, FromEpsilon) {
    EXPECT_EQ(threshold_from_epsilon(1e-5), 17);
    EXPECT_EQ(threshold_from_epsilon(0.5), 1);
    EXPECT_EQ(threshold_from_epsilon(std::ldexp(1.0, -8)), 8);
    EXPECT_EQ(threshold_from_epsilon(0.3), 2);
    for (double bad : {0.0, 1.0, -0.1, 2.0, std::nan("")}) {
        EXPECT_THROW(threshold_from_epsilon(bad), InvalidToleranceError) << bad;
    }
}

TEST(Horizon, Examples) {
    EXPECT_EQ(communication_horizon(1e-5, 4), 5);
    EXPECT_EQ(communication_horizon(std::ldexp(1.0, -10), 9), 2);
    EXPECT_EQ(horizon_for_threshold(1, 4), 1);
    EXPECT_EQ(horizon_for_threshold(4, 4), 1);
    EXPECT_EQ(horizon_for_threshold(5, 4), 2);
}

TEST(Horizon, InverseExamples) {
    auto b = invert_horizon(9, 2);
    EXPECT_EQ(b.t_min, 10);
    EXPECT_EQ(b.epsilon, std::ldexp(1.0, -10));
    b = invert_horizon(4, 3);
    EXPECT_EQ(b.t_min, 9);
    EXPECT_EQ(b.epsilon, std::ldexp(1.0, -9));
    EXPECT_EQ(invert_horizon(14, 14).t_min, 183);
}

TEST(Horizon, InverseRoundTrip) {
    for (std::uint32_t q = 1; q <= 20; ++q) {
        for (int d = 1; d <= 20; ++d) {
            const int t = invert_horizon(q, d).t_min;
            EXPECT_EQ(horizon_for_threshold(t, q), d);
            if (t > 1) {
                EXPECT_EQ(horizon_for_threshold(t - 1, q), d - 1) << "t_min is not minimal";
            }
            EXPECT_EQ(k_min(q, d), t);
        }
    }
}

TEST(PruneSpec, Resolve) {
    EXPECT_FALSE(PruneSpec::exact().resolve(4).has_value());
    EXPECT_EQ(PruneSpec::from_threshold(7).resolve(4), 7);
    EXPECT_EQ(PruneSpec::from_epsilon(1e-5).resolve(4), 17);
    EXPECT_EQ(PruneSpec::from_horizon(3).resolve(4), 9);
    EXPECT_FALSE(PruneSpec::from_optional_threshold(std::nullopt).resolve(2).has_value());
}

TEST(Monolithic, ExactCountsSmall) {
    const Circuit c = build_monolithic_iqft(4, std::nullopt);
    EXPECT_EQ(c.count(GateKind::CP), 6u);
    EXPECT_EQ(c.count(GateKind::H), 4u);
    EXPECT_EQ(c.input_permutation, bit_reversal(4));
    EXPECT_EQ(build_monolithic_iqft(6, 2).count(GateKind::CP), 9u);
    EXPECT_THROW(build_monolithic_iqft(0, std::nullopt), std::invalid_argument);
}

TEST(Monolithic, MatchesPairEnumeration) {
    for (unsigned n = 1; n <= 24; ++n) {
        EXPECT_EQ(cp_multiset(build_monolithic_iqft(n, std::nullopt)), oracle::cp_pairs(n, std::nullopt));
        for (int t = 1; t <= static_cast<int>(n) + 1; ++t) {
            EXPECT_EQ(cp_multiset(build_monolithic_iqft(n, t)), oracle::cp_pairs(n, t)) << "n=" << n << " t=" << t;
        }
    }
}

TEST(Monolithic, GateOrder) {
    const Circuit c = build_monolithic_iqft(3, std::nullopt);
    const std::vector<Gate> expected = {Gate::h(0), Gate::cp(0, 1, 1), Gate::cp(0, 2, 2),
                                        Gate::h(1), Gate::cp(1, 2, 1), Gate::h(2)};
    EXPECT_EQ(c.gates, expected);
}

TEST(Distributed, StructureP3Q2) {
    const DistributedCircuit dc = build_distributed_iqft(NodeLayout(3, 2), std::nullopt);
    ASSERT_EQ(dc.comm_blocks.size(), 3u);
    EXPECT_EQ(dc.remote_cp_count(), 12u);
    EXPECT_EQ(dc.local_cp_count(), 3u);
    using K = Segment::Kind;
    ASSERT_EQ(dc.schedule.size(), 6u);
    EXPECT_EQ(dc.schedule[0], (Segment{K::local, 0}));
    EXPECT_EQ(dc.schedule[1].kind, K::comm);
    EXPECT_EQ(dc.schedule[2], (Segment{K::local, 1}));
    EXPECT_EQ(dc.schedule[5], (Segment{K::local, 2}));
    const CommBlock &first = dc.comm_blocks[dc.schedule[1].index];
    EXPECT_EQ(first.ctrl_node, 0u);
    EXPECT_EQ(first.tgt_node, 1u);
    const std::vector<RemoteCp> expected = {
        {{0, 0}, {1, 0}, 2}, {{0, 0}, {1, 1}, 3}, {{0, 1}, {1, 0}, 1}, {{0, 1}, {1, 1}, 2}};
    EXPECT_EQ(first.gates, expected);
    // Farther block first for node 2.
    EXPECT_EQ(dc.comm_blocks[dc.schedule[3].index].distance(), 2);
    EXPECT_EQ(dc.comm_blocks[dc.schedule[4].index].distance(), 1);
}

TEST(Distributed, StructureP4Q2T3) {
    const DistributedCircuit dc = build_distributed_iqft(NodeLayout(4, 2), 3);
    EXPECT_EQ(dc.comm_blocks.size(), 5u);
    for (const auto &b : dc.comm_blocks) {
        EXPECT_LE(b.distance(), 2);
        for (const auto &g : b.gates) {
            EXPECT_LE(g.k, 3);
        }
    }
    EXPECT_EQ(dc.local_cp_count(), 4u);
    EXPECT_EQ(dc.remote_cp_count(), 14u);
}

TEST(PruneBlock, Examples) {
    const NodeLayout layout(7, 4);
    const auto near = prune_block(full_comm_block(layout, 0, 2), 4, 17);
    ASSERT_TRUE(near.has_value());
    EXPECT_EQ(near->gates.size(), 16u);
    EXPECT_FALSE(prune_block(full_comm_block(layout, 0, 6), 4, 17).has_value());
    const auto edge = prune_block(full_comm_block(layout, 0, 5), 4, 17);
    ASSERT_TRUE(edge.has_value());
    EXPECT_EQ(edge->gates.size(), 1u);
    EXPECT_EQ(edge->gates.front().k, 17);
}

TEST(Distributed, FlattenMatchesPairEnumeration) {
    for (std::uint32_t p = 1; p <= 12; ++p) {
        for (std::uint32_t q = 1; p * q <= 12; ++q) {
            const std::uint32_t n = p * q;
            for (int t = 1; t <= static_cast<int>(n); ++t) {
                const DistributedCircuit dc = build_distributed_iqft(NodeLayout(p, q), t);
                const Circuit flat = dc.flatten();
                EXPECT_NO_THROW(validate(flat));
                EXPECT_EQ(cp_multiset(flat), oracle::cp_pairs(n, t)) << p << "x" << q << " t=" << t;
                EXPECT_EQ(flat.count(GateKind::H), n);
                EXPECT_EQ(dc.local_cp_count() + dc.remote_cp_count(), oracle::cp_count(n, t));
            }
            const DistributedCircuit exact = build_distributed_iqft(NodeLayout(p, q), std::nullopt);
            EXPECT_EQ(cp_multiset(exact.flatten()), oracle::cp_pairs(n, std::nullopt));
        }
    }
}

TEST(Distributed, MonotoneInThreshold) {
    const NodeLayout layout(5, 3);
    std::size_t previous = 0;
    for (int t = 1; t <= 16; ++t) {
        const DistributedCircuit dc = build_distributed_iqft(layout, t);
        const std::size_t total = dc.local_cp_count() + dc.remote_cp_count();
        EXPECT_GE(total, previous);
        previous = total;
    }
    EXPECT_EQ(previous, 15u * 14u / 2u);
}

TEST(Distributed, HorizonConsistency) {
    for (std::uint32_t p = 2; p <= 8; ++p) {
        for (std::uint32_t q = 1; q <= 5; ++q) {
            for (int t = 1; t <= static_cast<int>(p * q); ++t) {
                const DistributedCircuit dc = build_distributed_iqft(NodeLayout(p, q), t);
                int widest = 0;
                for (const auto &b : dc.comm_blocks) {
                    EXPECT_FALSE(b.gates.empty());
                    widest = std::max(widest, b.distance());
                }
                EXPECT_EQ(widest, std::min(horizon_for_threshold(t, q), static_cast<int>(p) - 1));
            }
        }
    }
}

TEST(Distributed, LocalBlockIsSmallIqft) {
    for (std::uint32_t q = 1; q <= 6; ++q) {
        for (std::optional<int> t : {std::optional<int>{}, std::optional<int>{1}, std::optional<int>{3}}) {
            const DistributedCircuit dc = build_distributed_iqft(NodeLayout(3, q), t);
            const Circuit small = build_monolithic_iqft(q, t);
            for (const Circuit &local : dc.local_blocks) {
                EXPECT_EQ(local.gates, small.gates);
            }
        }
    }
}
