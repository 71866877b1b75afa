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
#include <string>

#include "diqft/iqft.hpp"
#include "diqft/lowering.hpp"
#include "diqft/statevector.hpp"

namespace diqft {

/// |<ideal|approx>|^2. Throws std::invalid_argument on a size mismatch.
double fidelity(const StateVector &ideal, const StateVector &approx);

/// Phase missing on the last qubit when gates with k > t are dropped:
/// pi (2^-t - 2^-(n-1)), and 0 once t >= n - 1.
double phase_deficit(std::uint32_t n, int t);

/// Sum over pruned gates of ||CP(theta_k) - I|| = 2 |sin(theta_k / 2)|, with
/// (n - k) gates at each k in [t+1, n-1].
double pruned_operator_distance(std::uint32_t n, int t);

/// Worst-case infidelity 1 - max(0, 1 - E)^2 with E = pruned_operator_distance.
double infidelity_bound(std::uint32_t n, int t);

/// N_CP^remote / N_CP^local. Throws UndefinedRatioError without local CPs.
double coupling_ratio(const DistributedCircuit &circuit);

enum class GammaDenominator { all_cp, remote_cp };

const char *gamma_denominator_name(GammaDenominator mode);
GammaDenominator parse_gamma_denominator(const std::string &name);

/// comm_ops over logical CPs (all, or remote only). Throws
/// UndefinedRatioError on a zero denominator.
double communication_overhead(const LoweredProgram &program, GammaDenominator mode);

struct MetricsReport {
    double fidelity = 1.0;
    double infidelity = 0.0;
    double infidelity_bound_operator = 0.0;
    double phase_deficit_lastqubit = 0.0;
    double epr_per_node_max = 0.0;
    /// nullopt when undefined (Q = 1, or no CPs at all).
    std::optional<double> eta;
    std::optional<double> gamma;
    std::size_t n_cp_local = 0;
    std::size_t n_cp_remote = 0;
};

/// Counting metrics of a built and lowered circuit plus the state comparison.
MetricsReport make_report(const DistributedCircuit &circuit, const LoweredProgram &program, const StateVector &ideal,
                          const StateVector &approx, GammaDenominator mode);

}  // namespace diqft
