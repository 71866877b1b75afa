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

#include "diqft/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diqft/errors.hpp"

namespace diqft {

double fidelity(const StateVector &ideal, const StateVector &approx) {
    if (ideal.size() != approx.size()) {
        throw std::invalid_argument("fidelity of states with " + std::to_string(ideal.num_qubits()) + " and " +
                                    std::to_string(approx.num_qubits()) + " qubits");
    }
    return std::norm(kernels::omp::inner_product(ideal.amplitudes(), approx.amplitudes()));
}

double phase_deficit(std::uint32_t n, int t) {
    if (t < 1) {
        throw std::invalid_argument("threshold must be >= 1");
    }
    if (static_cast<std::int64_t>(t) >= static_cast<std::int64_t>(n) - 1) {
        return 0.0;
    }
    return std::numbers::pi * (std::ldexp(1.0, -t) - std::ldexp(1.0, -static_cast<int>(n - 1)));
}

double pruned_operator_distance(std::uint32_t n, int t) {
    if (t < 1) {
        throw std::invalid_argument("threshold must be >= 1");
    }
    double total = 0.0;
    for (std::int64_t k = t + 1; k <= static_cast<std::int64_t>(n) - 1; ++k) {
        const double theta = rotation_angle(static_cast<int>(k));
        total += static_cast<double>(static_cast<std::int64_t>(n) - k) * 2.0 * std::abs(std::sin(theta / 2.0));
    }
    return total;
}

double infidelity_bound(std::uint32_t n, int t) {
    const double overlap = std::max(0.0, 1.0 - pruned_operator_distance(n, t));
    return 1.0 - overlap * overlap;
}

double coupling_ratio(const DistributedCircuit &circuit) {
    const auto local = circuit.local_cp_count();
    if (local == 0) {
        throw UndefinedRatioError("coupling ratio is undefined without local controlled phases (Q = " +
                                  std::to_string(circuit.layout.qubits_per_node()) + ")");
    }
    return static_cast<double>(circuit.remote_cp_count()) / static_cast<double>(local);
}

const char *gamma_denominator_name(GammaDenominator mode) {
    return mode == GammaDenominator::all_cp ? "all-cp" : "remote-cp";
}

GammaDenominator parse_gamma_denominator(const std::string &name) {
    if (name == "all-cp") {
        return GammaDenominator::all_cp;
    }
    if (name == "remote-cp") {
        return GammaDenominator::remote_cp;
    }
    throw std::invalid_argument("unknown gamma denominator '" + name + "' (expected all-cp or remote-cp)");
}

double communication_overhead(const LoweredProgram &program, GammaDenominator mode) {
    const auto &ledger = program.ledger;
    const std::size_t denominator =
        mode == GammaDenominator::all_cp ? ledger.logical_cp() : ledger.comp_ops_remote_cp;
    if (denominator == 0) {
        throw UndefinedRatioError(std::string("communication overhead has a zero ") + gamma_denominator_name(mode) +
                                  " denominator");
    }
    return static_cast<double>(ledger.comm_ops) / static_cast<double>(denominator);
}

MetricsReport make_report(const DistributedCircuit &circuit, const LoweredProgram &program, const StateVector &ideal,
                          const StateVector &approx, GammaDenominator mode) {
    MetricsReport report;
    report.fidelity = fidelity(ideal, approx);
    report.infidelity = 1.0 - report.fidelity;
    const std::uint32_t n = circuit.layout.num_qubits();
    if (circuit.threshold) {
        report.infidelity_bound_operator = infidelity_bound(n, *circuit.threshold);
        report.phase_deficit_lastqubit = phase_deficit(n, *circuit.threshold);
    }
    report.epr_per_node_max = epr_per_node(program).max;
    report.n_cp_local = circuit.local_cp_count();
    report.n_cp_remote = circuit.remote_cp_count();
    try {
        report.eta = coupling_ratio(circuit);
    } catch (const UndefinedRatioError &) {
    }
    try {
        report.gamma = communication_overhead(program, mode);
    } catch (const UndefinedRatioError &) {
    }
    return report;
}

}  // namespace diqft
