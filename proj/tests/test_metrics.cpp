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

#include <cmath>
#include <numbers>

#include "diqft/errors.hpp"
#include "diqft/iqft.hpp"
#include "diqft/lowering.hpp"
#include "diqft/metrics.hpp"
#include "diqft/statevector.hpp"

using namespace diqft;

namespace {

double summed_deficit(unsigned n, int t) {
    double sum = 0.0;
    for (int k = t + 1; k <= static_cast<int>(n) - 1; ++k) {
        sum += std::numbers::pi / std::pow(2.0, k);
    }
    return sum;
}

double pairwise_bound(unsigned n, int t) {
    double e = 0.0;
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = j + 1; i < n; ++i) {
            const int k = static_cast<int>(i - j);
            if (k > t) {
                e += std::abs(std::polar(1.0, -std::numbers::pi / std::pow(2.0, k)) - 1.0);
            }
        }
    }
    const double f = std::max(0.0, 1.0 - e);
    return 1.0 - f * f;
}

}  // namespace

TEST(Fidelity, Examples) {
    EXPECT_DOUBLE_EQ(fidelity(basis_state(2, 1), basis_state(2, 1)), 1.0);
    EXPECT_DOUBLE_EQ(fidelity(basis_state(2, 1), basis_state(2, 2)), 0.0);
    StateVector plus(1);
    apply(plus, Gate::h(0), 0, 0);
    EXPECT_NEAR(fidelity(basis_state(1, 0), plus), 0.5, 1e-15);
    EXPECT_THROW(fidelity(StateVector(2), StateVector(3)), std::invalid_argument);
}

TEST(PhaseDeficit, AgainstSummation) {
    EXPECT_NEAR(phase_deficit(18, 4), summed_deficit(18, 4), 1e-15);
    for (unsigned n = 2; n <= 30; ++n) {
        for (int t = 1; t <= static_cast<int>(n) + 1; ++t) {
            EXPECT_NEAR(phase_deficit(n, t), summed_deficit(n, t), 1e-14) << n << " " << t;
        }
    }
    EXPECT_EQ(phase_deficit(10, 9), 0.0);
}

TEST(InfidelityBound, AgainstPairEnumeration) {
    EXPECT_NEAR(infidelity_bound(6, 2), pairwise_bound(6, 2), 1e-14);
    for (unsigned n = 2; n <= 20; ++n) {
        for (int t = 1; t < static_cast<int>(n); ++t) {
            EXPECT_NEAR(infidelity_bound(n, t), pairwise_bound(n, t), 1e-13) << n << " " << t;
        }
    }
    EXPECT_EQ(infidelity_bound(8, 7), 0.0);
}

TEST(InfidelityBound, DominatesSimulation) {
    const unsigned n = 8;
    const Circuit exact = build_monolithic_iqft(n, std::nullopt);
    for (int t = 1; t < static_cast<int>(n); ++t) {
        const Circuit pruned = build_monolithic_iqft(n, t);
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            const StateVector in = haar_random_state(n, seed);
            EXPECT_LE(1.0 - fidelity(run(exact, in), run(pruned, in)), infidelity_bound(n, t) + 1e-12);
        }
    }
}

TEST(CouplingRatio, Examples) {
    EXPECT_DOUBLE_EQ(coupling_ratio(build_distributed_iqft(NodeLayout(19, 2), std::nullopt)), 36.0);
    EXPECT_DOUBLE_EQ(coupling_ratio(build_distributed_iqft(NodeLayout(20, 20), std::nullopt)), 20.0);
    EXPECT_DOUBLE_EQ(coupling_ratio(build_distributed_iqft(NodeLayout(1, 4), std::nullopt)), 0.0);
    EXPECT_THROW(coupling_ratio(build_distributed_iqft(NodeLayout(4, 1), std::nullopt)), UndefinedRatioError);
}

TEST(CouplingRatio, ClosedFormExact) {
    for (std::uint32_t p = 1; p <= 12; ++p) {
        for (std::uint32_t q = 2; q <= 12; ++q) {
            EXPECT_NEAR(coupling_ratio(build_distributed_iqft(NodeLayout(p, q), std::nullopt)),
                        static_cast<double>(q * (p - 1)) / (q - 1), 1e-12);
        }
    }
}

TEST(CommunicationOverhead, Examples) {
    const auto single = lower_telegate(build_distributed_iqft(NodeLayout(2, 1), std::nullopt));
    EXPECT_DOUBLE_EQ(communication_overhead(single, GammaDenominator::remote_cp), 7.0);
    EXPECT_DOUBLE_EQ(communication_overhead(single, GammaDenominator::all_cp), 7.0);
    const auto wide = lower_telegate(build_distributed_iqft(NodeLayout(19, 2), std::nullopt));
    EXPECT_DOUBLE_EQ(communication_overhead(wide, GammaDenominator::remote_cp), 3.5);
    const auto one_node = lower_telegate(build_distributed_iqft(NodeLayout(1, 4), std::nullopt));
    EXPECT_DOUBLE_EQ(communication_overhead(one_node, GammaDenominator::all_cp), 0.0);
    EXPECT_THROW(communication_overhead(one_node, GammaDenominator::remote_cp), UndefinedRatioError);
}

TEST(GammaDenominator, Parse) {
    EXPECT_EQ(parse_gamma_denominator("all-cp"), GammaDenominator::all_cp);
    EXPECT_EQ(parse_gamma_denominator("remote-cp"), GammaDenominator::remote_cp);
    EXPECT_THROW(parse_gamma_denominator("some"), std::invalid_argument);
}

TEST(Report, CollectsMetrics) {
    const DistributedCircuit dc = build_distributed_iqft(NodeLayout(2, 2), 2);
    const LoweredProgram prog = lower_telegate(dc);
    const StateVector in = haar_random_state(4, 1);
    const StateVector ideal = run(build_monolithic_iqft(4, std::nullopt), in);
    const StateVector approx = run(prog, in, 3);
    const MetricsReport r = make_report(dc, prog, ideal, approx, GammaDenominator::remote_cp);
    EXPECT_NEAR(r.fidelity + r.infidelity, 1.0, 1e-15);
    EXPECT_LE(r.infidelity, r.infidelity_bound_operator + 1e-12);
    EXPECT_DOUBLE_EQ(r.phase_deficit_lastqubit, phase_deficit(4, 2));
    EXPECT_EQ(r.n_cp_local, 2u);
    EXPECT_EQ(r.n_cp_remote, 3u);
    ASSERT_TRUE(r.eta.has_value());
    EXPECT_DOUBLE_EQ(*r.eta, 1.5);
    ASSERT_TRUE(r.gamma.has_value());
}
