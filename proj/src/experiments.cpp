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

#include "diqft/experiments.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "diqft/errors.hpp"
#include "diqft/rng.hpp"
#include "diqft/statevector.hpp"

namespace diqft {

namespace {

// Runs fn(i) for i in [0, count) on the OpenMP pool; results must be written to
// per-index slots so the reduction order stays fixed.
template <class Fn>
void parallel_for(std::size_t count, Fn &&fn) {
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < total; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

int parse_int(const std::string &text) {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
    return value;
}

std::string heat_column(const std::string &prefix, const Threshold &t) {
    return prefix + (t ? "_t" + std::to_string(*t) : "_unbounded");
}

const std::vector<Threshold> kHeatmapThresholds = {std::nullopt, 7, 3};

struct GridCell {
    std::uint32_t nodes;
    std::uint32_t qubits_per_node;
};

std::vector<GridCell> heatmap_grid(const SweepConfig &config) {
    const auto p_values = config.p_range.value_or(IntRange{2, 20}).values();
    const auto q_values = config.q_range.value_or(IntRange{2, 20}).values();
    std::vector<GridCell> grid;
    for (int p : p_values) {
        for (int q : q_values) {
            if (p < 1 || q < 1) {
                throw std::invalid_argument("grid values must be positive");
            }
            grid.push_back({static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)});
        }
    }
    return grid;
}

// Shared shape of the counting heatmaps: one value column per threshold.
template <class CellFn>
CsvTable counting_heatmap(const SweepConfig &config, const std::string &prefix, CellFn &&cell_value) {
    const auto thresholds = resolved_thresholds(config, kHeatmapThresholds);
    const auto grid = heatmap_grid(config);
    CsvTable table;
    table.header = {"qubits_per_node", "nodes"};
    for (const auto &t : thresholds) {
        table.header.push_back(heat_column(prefix, t));
    }
    table.rows.resize(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const GridCell cell = grid[i];
        auto &row = table.rows[i];
        row = {format_count(cell.qubits_per_node), format_count(cell.nodes)};
        for (const auto &t : thresholds) {
            const auto circuit = build_distributed_iqft(NodeLayout(cell.nodes, cell.qubits_per_node), t);
            row.push_back(cell_value(circuit));
        }
    });
    return table;
}

}  // namespace

std::vector<int> IntRange::values() const {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) {
        out.push_back(v);
    }
    return out;
}

IntRange parse_range(const std::string &text) {
    const std::string s = trim(text);
    auto sep = s.find(':');
    if (sep == std::string::npos) {
        sep = s.find('-', 1);
    }
    IntRange range;
    if (sep == std::string::npos) {
        range.lo = range.hi = parse_int(s);
    } else {
        range.lo = parse_int(trim(s.substr(0, sep)));
        range.hi = parse_int(trim(s.substr(sep + 1)));
    }
    if (range.lo > range.hi) {
        throw std::invalid_argument("empty range '" + text + "'");
    }
    return range;
}

std::vector<Threshold> parse_thresholds(const std::string &text) {
    std::vector<Threshold> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            continue;
        }
        if (item == "exact" || item == "unbounded") {
            out.emplace_back(std::nullopt);
            continue;
        }
        const int t = parse_int(item);
        if (t < 1) {
            throw std::invalid_argument("thresholds must be >= 1, got " + item);
        }
        out.emplace_back(t);
    }
    return out;
}

std::string threshold_label(const Threshold &t) { return t ? std::to_string(*t) : "exact"; }

std::vector<Threshold> resolved_thresholds(const SweepConfig &config, const std::vector<Threshold> &fallback) {
    std::vector<Threshold> out = config.thresholds;
    for (double eps : config.epsilons) {
        out.emplace_back(threshold_from_epsilon(eps));
    }
    return out.empty() ? fallback : out;
}

std::vector<FidelityRow> fidelity_sweep(std::uint32_t n, const std::vector<int> &thresholds, std::uint64_t seed,
                                        int fourier_inputs, int haar_inputs) {
    const Circuit exact = build_monolithic_iqft(n, std::nullopt);
    std::vector<Circuit> pruned;
    for (int t : thresholds) {
        pruned.push_back(build_monolithic_iqft(n, t));
    }
    const auto inputs = static_cast<std::size_t>(fourier_inputs + haar_inputs);
    // infidelity[input][threshold]
    std::vector<std::vector<double>> infidelity(inputs, std::vector<double>(thresholds.size()));
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;

    parallel_for(inputs, [&](std::size_t i) {
        const bool fourier = i < static_cast<std::size_t>(fourier_inputs);
        const StateVector input = fourier ? prepare_fourier_state(derive_seed(seed, {n, 0, i}) & mask, n)
                                          : haar_random_state(n, derive_seed(seed, {n, 1, i}));
        const StateVector ideal = run(exact, input);
        for (std::size_t j = 0; j < pruned.size(); ++j) {
            infidelity[i][j] = 1.0 - fidelity(ideal, run(pruned[j], input));
        }
    });

    std::vector<FidelityRow> rows;
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
        FidelityRow row{thresholds[j], 0.0, 0.0, phase_deficit(n, thresholds[j]), infidelity_bound(n, thresholds[j])};
        double sum = 0.0;
        for (std::size_t i = 0; i < inputs; ++i) {
            row.infidelity_max = i == 0 ? infidelity[i][j] : std::max(row.infidelity_max, infidelity[i][j]);
            sum += infidelity[i][j];
        }
        row.infidelity_mean = inputs == 0 ? 0.0 : sum / static_cast<double>(inputs);
        rows.push_back(row);
    }
    return rows;
}

std::vector<NamedTable> cmd_fidelity(const SweepConfig &config) {
    std::vector<NamedTable> out;
    for (int q : config.q_range.value_or(IntRange{18, 18}).values()) {
        if (q < 1) {
            throw std::invalid_argument("fidelity experiment needs Q >= 1");
        }
        const auto n = static_cast<std::uint32_t>(q);
        if (n > config.max_qubits) {
            throw CapacityError("fidelity experiment at Q=" + std::to_string(n) + " needs " + std::to_string(n) +
                                " simulated qubits but --max-qubits is " + std::to_string(config.max_qubits) +
                                "; lower --q-range or raise --max-qubits");
        }
        std::vector<Threshold> fallback;
        const int hi = n >= 4 ? static_cast<int>(n) - 2 : std::max(1, static_cast<int>(n) - 1);
        for (int t = n >= 4 ? 2 : 1; t <= hi; ++t) {
            fallback.emplace_back(t);
        }
        std::vector<int> thresholds;
        for (const auto &t : resolved_thresholds(config, fallback)) {
            thresholds.push_back(t.value_or(std::max(1, static_cast<int>(n) - 1)));
        }
        const auto rows = fidelity_sweep(n, thresholds, config.seed, config.fidelity_fourier_inputs,
                                         config.fidelity_haar_inputs);
        CsvTable table;
        table.header = {"threshold", "simulated_infidelity_max", "simulated_infidelity_mean", "phase_deficit",
                        "operator_bound"};
        for (const auto &row : rows) {
            table.rows.push_back({std::to_string(row.threshold), format_real(row.infidelity_max),
                                  format_real(row.infidelity_mean), format_real(row.phase_deficit),
                                  format_real(row.operator_bound)});
        }
        out.push_back({"fidelity_Q" + std::to_string(n) + ".csv", std::move(table)});
    }
    return out;
}

CsvTable cmd_epr_heatmap(const SweepConfig &config) {
    return counting_heatmap(config, "epr", [&](const DistributedCircuit &circuit) {
        return format_real(epr_per_node(lower(circuit, config.protocol)).max);
    });
}

CsvTable cmd_eta_heatmap(const SweepConfig &config) {
    return counting_heatmap(config, "eta", [](const DistributedCircuit &circuit) -> std::string {
        try {
            return format_real(coupling_ratio(circuit));
        } catch (const UndefinedRatioError &) {
            return "undefined";
        }
    });
}

CsvTable cmd_gamma_heatmap(const SweepConfig &config) {
    CsvTable table = counting_heatmap(config, "gamma", [&](const DistributedCircuit &circuit) -> std::string {
        try {
            return format_real(communication_overhead(lower(circuit, config.protocol), config.gamma_denominator));
        } catch (const UndefinedRatioError &) {
            return "undefined";
        }
    });
    table.header.push_back("denominator_mode");
    for (auto &row : table.rows) {
        row.push_back(gamma_denominator_name(config.gamma_denominator));
    }
    return table;
}

CsvTable cmd_epsilon_heatmap(const SweepConfig &config) {
    CsvTable table;
    table.header = {"d_max", "Q", "t_min"};
    for (int d : config.d_range.value_or(IntRange{1, 14}).values()) {
        for (int q : config.q_range.value_or(IntRange{2, 14}).values()) {
            if (q < 1 || d < 1) {
                throw std::invalid_argument("epsilon grid values must be positive");
            }
            const auto bound = invert_horizon(static_cast<std::uint32_t>(q), d);
            table.rows.push_back({std::to_string(d), std::to_string(q), std::to_string(bound.t_min)});
        }
    }
    return table;
}

std::string VerifyFailure::describe() const {
    std::ostringstream out;
    out << check << " failed: P=" << nodes << " Q=" << qubits_per_node << " t=" << threshold_label(threshold)
        << " protocol=" << protocol << " seed=" << seed << " input=" << input << " value=" << format_real(value)
        << " limit=" << format_real(limit);
    return out.str();
}

VerifyReport cmd_verify(const SweepConfig &config, const VerifyOptions &options) {
    struct Case {
        std::uint32_t nodes;
        std::uint32_t qubits_per_node;
        Threshold threshold;
    };
    std::vector<Case> cases;
    for (int n = 1; n <= config.verify_max_register; ++n) {
        for (int p = 1; p <= n; ++p) {
            if (n % p != 0) {
                continue;
            }
            std::vector<Threshold> thresholds;
            for (int t = 1; t <= n; ++t) {
                thresholds.emplace_back(t);
            }
            thresholds.emplace_back(std::nullopt);
            for (const auto &t : thresholds) {
                cases.push_back({static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n / p), t});
            }
        }
    }

    struct CaseResult {
        std::size_t checks = 0;
        double min_fidelity[2] = {1.0, 1.0};
        double max_pruned_infidelity = 0.0;
        double bound = 0.0;
        std::vector<VerifyFailure> failures;
    };
    std::vector<CaseResult> results(cases.size());
    const Protocol protocols[2] = {Protocol::telegate, Protocol::teledata};

    parallel_for(cases.size(), [&](std::size_t c) {
        const Case &cs = cases[c];
        CaseResult &res = results[c];
        const NodeLayout layout(cs.nodes, cs.qubits_per_node);
        const std::uint32_t n = layout.num_qubits();
        const Circuit exact = build_monolithic_iqft(n, std::nullopt);
        const Circuit pruned = build_monolithic_iqft(n, cs.threshold);
        DistributedCircuit distributed = build_distributed_iqft(layout, cs.threshold);
        if (options.tamper) {
            options.tamper(distributed);
        }
        const LoweredProgram programs[2] = {lower(distributed, protocols[0]), lower(distributed, protocols[1])};
        res.bound = cs.threshold ? infidelity_bound(n, *cs.threshold) : 0.0;
        const std::string check_name = cs.threshold ? "pruned-equivalence" : "exact-equivalence";

        for (int i = 0; i < config.verify_inputs; ++i) {
            const StateVector input = haar_random_state(n, derive_seed(config.seed, {n, cs.nodes, 7, std::uint64_t(i)}));
            const StateVector reference = run(pruned, input);
            if (cs.threshold) {
                const double infid = 1.0 - fidelity(run(exact, input), reference);
                res.max_pruned_infidelity = std::max(res.max_pruned_infidelity, infid);
                ++res.checks;
                if (infid > res.bound + 1e-12) {
                    res.failures.push_back(
                        {"bound", cs.nodes, cs.qubits_per_node, cs.threshold, "monolithic", 0, i, infid, res.bound});
                }
            }
            for (int pi = 0; pi < 2; ++pi) {
                for (int s = 0; s < config.verify_seeds; ++s) {
                    const std::uint64_t seed = derive_seed(config.seed, {11, std::uint64_t(s)});
                    const double f = fidelity(reference, run(programs[pi], input, seed));
                    res.min_fidelity[pi] = std::min(res.min_fidelity[pi], f);
                    ++res.checks;
                    if (!(f >= kEquivalenceFloor)) {
                        res.failures.push_back({check_name, cs.nodes, cs.qubits_per_node, cs.threshold,
                                                protocol_name(protocols[pi]), seed, i, f, kEquivalenceFloor});
                    }
                }
            }
        }
    });

    VerifyReport report;
    report.summary.header = {"nodes", "qubits_per_node", "threshold", "protocol", "min_fidelity",
                             "max_pruned_infidelity", "operator_bound", "passed"};
    for (std::size_t c = 0; c < cases.size(); ++c) {
        const auto &cs = cases[c];
        const auto &res = results[c];
        report.checks += res.checks;
        for (int pi = 0; pi < 2; ++pi) {
            report.min_lowered_fidelity = std::min(report.min_lowered_fidelity, res.min_fidelity[pi]);
            const bool ok = std::none_of(res.failures.begin(), res.failures.end(), [&](const VerifyFailure &f) {
                return f.protocol == protocol_name(protocols[pi]) || f.protocol == "monolithic";
            });
            report.summary.rows.push_back({format_count(cs.nodes), format_count(cs.qubits_per_node),
                                           threshold_label(cs.threshold), protocol_name(protocols[pi]),
                                           format_real(res.min_fidelity[pi]), format_real(res.max_pruned_infidelity),
                                           format_real(res.bound), ok ? "1" : "0"});
        }
        report.failures.insert(report.failures.end(), res.failures.begin(), res.failures.end());
    }
    return report;
}

}  // namespace diqft
