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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "diqft/errors.hpp"
#include "diqft/experiments.hpp"
#include "diqft/statevector.hpp"

using namespace diqft;

namespace {

SweepConfig small_grid() {
    SweepConfig c;
    c.p_range = IntRange{2, 6};
    c.q_range = IntRange{1, 4};
    return c;
}

std::string find_row(const CsvTable &table, const std::vector<std::string> &prefix) {
    for (const auto &row : table.rows) {
        if (std::equal(prefix.begin(), prefix.end(), row.begin())) {
            std::string joined;
            for (const auto &cell : row) {
                joined += (joined.empty() ? "" : ",") + cell;
            }
            return joined;
        }
    }
    return {};
}

}  // namespace

TEST(Parse, Ranges) {
    EXPECT_EQ(parse_range("2:20"), (IntRange{2, 20}));
    EXPECT_EQ(parse_range("3-5"), (IntRange{3, 5}));
    EXPECT_EQ(parse_range(" 7 "), (IntRange{7, 7}));
    EXPECT_EQ(parse_range("3-5").values(), (std::vector<int>{3, 4, 5}));
    EXPECT_THROW(parse_range("x"), std::invalid_argument);
    EXPECT_THROW(parse_range("5:2"), std::invalid_argument);
}

TEST(Parse, Thresholds) {
    EXPECT_EQ(parse_thresholds("exact,7,3"), (std::vector<Threshold>{std::nullopt, 7, 3}));
    EXPECT_EQ(parse_thresholds("unbounded"), (std::vector<Threshold>{std::nullopt}));
    EXPECT_THROW(parse_thresholds("0"), std::invalid_argument);
    EXPECT_THROW(parse_thresholds("seven"), std::invalid_argument);
    EXPECT_EQ(threshold_label(std::nullopt), "exact");
    EXPECT_EQ(threshold_label(4), "4");
}

TEST(Parse, EpsilonsBecomeThresholds) {
    SweepConfig c;
    c.epsilons = {1e-5};
    EXPECT_EQ(resolved_thresholds(c, {}), (std::vector<Threshold>{17}));
    EXPECT_EQ(resolved_thresholds(SweepConfig{}, {3}), (std::vector<Threshold>{3}));
}

TEST(Heatmaps, CountingAllocatesNoState) {
    const std::size_t before = StateVector::allocation_count();
    const SweepConfig config;
    (void)cmd_epr_heatmap(config);
    (void)cmd_eta_heatmap(config);
    (void)cmd_gamma_heatmap(config);
    (void)cmd_epsilon_heatmap(config);
    EXPECT_EQ(StateVector::allocation_count(), before);
}

TEST(Heatmaps, ShapeAndValues) {
    const CsvTable epr = cmd_epr_heatmap(SweepConfig{});
    EXPECT_EQ(epr.header, (std::vector<std::string>{"qubits_per_node", "nodes", "epr_unbounded", "epr_t7", "epr_t3"}));
    EXPECT_EQ(epr.rows.size(), 19u * 19u);
    EXPECT_EQ(find_row(epr, {"20", "20"}), "20,20,190,7,3");
    EXPECT_EQ(epr.rows.front()[0], "2");
    EXPECT_EQ(epr.rows.front()[1], "2");
    EXPECT_EQ(epr.rows[1][0], "3");

    const CsvTable eta = cmd_eta_heatmap(small_grid());
    EXPECT_EQ(find_row(eta, {"1", "3"}), "1,3,undefined,undefined,undefined");
    EXPECT_EQ(find_row(eta, {"2", "3"}).substr(0, 6), "2,3,4,");

    const CsvTable gamma = cmd_gamma_heatmap(small_grid());
    EXPECT_EQ(gamma.header.back(), "denominator_mode");
    EXPECT_EQ(gamma.rows.front().back(), "remote-cp");
}

TEST(Heatmaps, EpsilonHorizon) {
    const CsvTable table = cmd_epsilon_heatmap(SweepConfig{});
    EXPECT_EQ(table.header, (std::vector<std::string>{"d_max", "Q", "t_min"}));
    EXPECT_EQ(table.rows.size(), 14u * 13u);
    EXPECT_EQ(find_row(table, {"14", "14"}), "14,14,183");
    EXPECT_EQ(find_row(table, {"2", "9"}), "2,9,10");
    EXPECT_EQ(find_row(table, {"3", "4"}), "3,4,9");
}

TEST(Determinism, RepeatedRunsAreIdentical) {
    SweepConfig config = small_grid();
    EXPECT_EQ(cmd_epr_heatmap(config).to_string(), cmd_epr_heatmap(config).to_string());
    EXPECT_EQ(cmd_gamma_heatmap(config).to_string(), cmd_gamma_heatmap(config).to_string());

    config.q_range = IntRange{6, 6};
    config.fidelity_fourier_inputs = 4;
    config.fidelity_haar_inputs = 2;
    const auto a = cmd_fidelity(config);
    const auto b = cmd_fidelity(config);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].file_name, "fidelity_Q6.csv");
    EXPECT_EQ(a[0].table.to_string(), b[0].table.to_string());
    config.seed += 1;
    EXPECT_NE(cmd_fidelity(config)[0].table.to_string(), a[0].table.to_string());
}

TEST(Determinism, CsvWrite) {
    const auto dir = std::filesystem::temp_directory_path() / "diqft_test_csv";
    std::filesystem::remove_all(dir);
    const CsvTable table = cmd_epsilon_heatmap(SweepConfig{});
    table.write(dir / "a.csv");
    table.write(dir / "b.csv");
    auto slurp = [](const std::filesystem::path &p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    EXPECT_EQ(slurp(dir / "a.csv"), slurp(dir / "b.csv"));
    EXPECT_EQ(slurp(dir / "a.csv"), table.to_string());
}

TEST(Fidelity, RefusesOversizedRegister) {
    SweepConfig config;
    config.q_range = IntRange{30, 30};
    EXPECT_THROW(cmd_fidelity(config), CapacityError);
}

TEST(Fidelity, BoundedByOperatorDistance) {
    const auto rows = fidelity_sweep(8, {1, 2, 3, 4, 5, 6}, 9, 6, 3);
    ASSERT_EQ(rows.size(), 6u);
    for (const auto &r : rows) {
        EXPECT_LE(r.infidelity_mean, r.infidelity_max);
        EXPECT_LE(r.infidelity_max, r.operator_bound + 1e-12) << "t=" << r.threshold;
    }
}

TEST(Verify, SmallRegistersPass) {
    SweepConfig config;
    config.verify_max_register = 5;
    config.verify_seeds = 2;
    config.verify_inputs = 2;
    const VerifyReport report = cmd_verify(config);
    EXPECT_TRUE(report.passed());
    EXPECT_GT(report.checks, 0u);
    EXPECT_GE(report.min_lowered_fidelity, kEquivalenceFloor);
}

TEST(Verify, TamperedCircuitIsCaught) {
    SweepConfig config;
    config.verify_max_register = 4;
    config.verify_seeds = 1;
    config.verify_inputs = 2;
    VerifyOptions options;
    options.tamper = [](DistributedCircuit &dc) {
        for (auto &block : dc.comm_blocks) {
            for (auto &g : block.gates) {
                g.k = 1;
            }
        }
    };
    const VerifyReport report = cmd_verify(config, options);
    EXPECT_FALSE(report.passed());
    EXPECT_LT(report.min_lowered_fidelity, 0.999);
    EXPECT_FALSE(report.failures.front().describe().empty());
}
