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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "diqft/csv.hpp"
#include "diqft/iqft.hpp"
#include "diqft/lowering.hpp"
#include "diqft/metrics.hpp"

namespace diqft {

struct IntRange {
    int lo = 0;
    int hi = 0;

    std::vector<int> values() const;
    friend bool operator==(const IntRange &, const IntRange &) = default;
};

/// Parses "a:b", "a-b" or a single integer.
IntRange parse_range(const std::string &text);

/// nullopt is the unpruned ("exact") circuit.
using Threshold = std::optional<int>;

/// Parses a comma-separated list of integers and the word "exact".
std::vector<Threshold> parse_thresholds(const std::string &text);
std::string threshold_label(const Threshold &t);

/// Sweep grid and run options shared by every subcommand. Unset optional
/// fields fall back to per-command defaults.
struct SweepConfig {
    std::optional<IntRange> p_range;
    std::optional<IntRange> q_range;
    std::optional<IntRange> d_range;
    std::vector<Threshold> thresholds;
    std::vector<double> epsilons;
    std::uint64_t seed = 20260101;
    std::uint32_t max_qubits = 24;
    GammaDenominator gamma_denominator = GammaDenominator::remote_cp;
    Protocol protocol = Protocol::telegate;
    std::string out_dir = "results";

    int fidelity_fourier_inputs = 64;
    int fidelity_haar_inputs = 16;

    int verify_max_register = 10;
    int verify_seeds = 10;
    int verify_inputs = 20;
};

/// Thresholds list with epsilons converted to t; `fallback` when both are empty.
std::vector<Threshold> resolved_thresholds(const SweepConfig &config, const std::vector<Threshold> &fallback);

struct NamedTable {
    std::string file_name;
    CsvTable table;
};

struct FidelityRow {
    int threshold;
    double infidelity_max;
    double infidelity_mean;
    double phase_deficit;
    double operator_bound;
};

/// Monolithic n-qubit iQFT, pruned vs exact, over `fourier_inputs` seeded
/// Fourier basis states and `haar_inputs` Haar-random states.
std::vector<FidelityRow> fidelity_sweep(std::uint32_t n, const std::vector<int> &thresholds, std::uint64_t seed,
                                        int fourier_inputs, int haar_inputs);

/// One table per Q in the q-range (n = Q). Defaults: Q = 18, t in [2, Q-2].
/// Throws CapacityError when n exceeds max_qubits.
std::vector<NamedTable> cmd_fidelity(const SweepConfig &config);

/// Per-node EPR maxima over P in [2,20], Q in [2,20], thresholds {exact, 7, 3}.
CsvTable cmd_epr_heatmap(const SweepConfig &config);
/// Coupling ratio over the same grid; Q = 1 cells read "undefined".
CsvTable cmd_eta_heatmap(const SweepConfig &config);
/// t_min for d_max in [1,14], Q in [2,14].
CsvTable cmd_epsilon_heatmap(const SweepConfig &config);
/// Communication overhead over the heatmap grid.
CsvTable cmd_gamma_heatmap(const SweepConfig &config);

struct VerifyFailure {
    std::string check;
    std::uint32_t nodes;
    std::uint32_t qubits_per_node;
    Threshold threshold;
    std::string protocol;
    std::uint64_t seed;
    int input;
    double value;
    double limit;

    std::string describe() const;
};

struct VerifyReport {
    std::size_t checks = 0;
    double min_lowered_fidelity = 1.0;
    std::vector<VerifyFailure> failures;
    CsvTable summary;

    bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
    /// Applied to every distributed circuit before lowering (test fixtures).
    std::function<void(DistributedCircuit &)> tamper;
};

/// For every layout with P*Q <= verify_max_register, every t in {1..P*Q,
/// exact}, both protocols, verify_seeds seeds and verify_inputs Haar inputs:
/// (a) exact lowered == exact monolithic, (b) pruned lowered == pruned
/// monolithic, both at fidelity >= 1 - 1e-10, and (c) pruned vs exact
/// monolithic infidelity <= infidelity_bound.
VerifyReport cmd_verify(const SweepConfig &config, const VerifyOptions &options = {});

inline constexpr double kEquivalenceFloor = 1.0 - 1e-10;

}  // namespace diqft
