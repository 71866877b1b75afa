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

// Command-line driver for the distributed iQFT experiments.
//
//   diqft <fidelity|epr|eta|epsilon|gamma|verify> [options]
//
// Exit status: 0 success, 1 verification failure, 2 configuration error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diqft/errors.hpp"
#include "diqft/experiments.hpp"
#include "json.hpp"

namespace {

using namespace diqft;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;

struct CliFlags {
    std::string config_file;
    std::optional<std::string> p_range;
    std::optional<std::string> q_range;
    std::optional<std::string> d_range;
    std::optional<std::string> thresholds;
    std::vector<double> epsilons;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> protocol;
    std::optional<std::string> gamma_denominator;
    std::optional<std::string> out_dir;
    std::optional<std::uint32_t> max_qubits;
    std::optional<int> verify_seeds;
    std::optional<int> verify_inputs;
    std::optional<int> verify_max_register;
    bool print = false;
};

std::string thresholds_from_json(const json &value) {
    if (value.is_string()) {
        return value.get<std::string>();
    }
    std::string joined;
    for (const auto &item : value) {
        if (!joined.empty()) {
            joined += ',';
        }
        joined += item.is_string() ? item.get<std::string>() : std::to_string(item.get<int>());
    }
    return joined;
}

void apply_config_file(const std::string &path, SweepConfig &config) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read config file " + path);
    }
    const json doc = json::parse(in);
    if (doc.contains("p_range")) config.p_range = parse_range(doc["p_range"].get<std::string>());
    if (doc.contains("q_range")) config.q_range = parse_range(doc["q_range"].get<std::string>());
    if (doc.contains("d_range")) config.d_range = parse_range(doc["d_range"].get<std::string>());
    if (doc.contains("thresholds")) config.thresholds = parse_thresholds(thresholds_from_json(doc["thresholds"]));
    if (doc.contains("epsilon")) config.epsilons = doc["epsilon"].get<std::vector<double>>();
    if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("protocol")) config.protocol = parse_protocol(doc["protocol"].get<std::string>());
    if (doc.contains("gamma_denominator")) {
        config.gamma_denominator = parse_gamma_denominator(doc["gamma_denominator"].get<std::string>());
    }
    if (doc.contains("out_dir")) config.out_dir = doc["out_dir"].get<std::string>();
    if (doc.contains("max_qubits")) config.max_qubits = doc["max_qubits"].get<std::uint32_t>();
    if (doc.contains("fidelity")) {
        const auto &f = doc["fidelity"];
        config.fidelity_fourier_inputs = f.value("fourier_inputs", config.fidelity_fourier_inputs);
        config.fidelity_haar_inputs = f.value("haar_inputs", config.fidelity_haar_inputs);
    }
    if (doc.contains("verify")) {
        const auto &v = doc["verify"];
        config.verify_seeds = v.value("seeds", config.verify_seeds);
        config.verify_inputs = v.value("inputs", config.verify_inputs);
        config.verify_max_register = v.value("max_register", config.verify_max_register);
    }
}

SweepConfig build_config(const CliFlags &flags) {
    SweepConfig config;
    if (!flags.config_file.empty()) {
        apply_config_file(flags.config_file, config);
    }
    if (flags.p_range) config.p_range = parse_range(*flags.p_range);
    if (flags.q_range) config.q_range = parse_range(*flags.q_range);
    if (flags.d_range) config.d_range = parse_range(*flags.d_range);
    if (flags.thresholds) config.thresholds = parse_thresholds(*flags.thresholds);
    if (!flags.epsilons.empty()) config.epsilons = flags.epsilons;
    if (flags.seed) config.seed = *flags.seed;
    if (flags.protocol) config.protocol = parse_protocol(*flags.protocol);
    if (flags.gamma_denominator) config.gamma_denominator = parse_gamma_denominator(*flags.gamma_denominator);
    if (flags.out_dir) config.out_dir = *flags.out_dir;
    if (flags.max_qubits) config.max_qubits = *flags.max_qubits;
    if (flags.verify_seeds) config.verify_seeds = *flags.verify_seeds;
    if (flags.verify_inputs) config.verify_inputs = *flags.verify_inputs;
    if (flags.verify_max_register) config.verify_max_register = *flags.verify_max_register;
    for (double eps : config.epsilons) {
        threshold_from_epsilon(eps);
    }
    return config;
}

void emit(const SweepConfig &config, const std::string &file_name, const CsvTable &table, bool print) {
    const auto path = std::filesystem::path(config.out_dir) / file_name;
    table.write(path);
    std::cerr << "wrote " << path.string() << " (" << table.rows.size() << " rows)\n";
    if (print) {
        std::cout << table.to_string();
    }
}

int run_command(const std::string &command, const CliFlags &flags) {
    const SweepConfig config = build_config(flags);
    if (command == "fidelity") {
        for (const auto &named : cmd_fidelity(config)) {
            emit(config, named.file_name, named.table, flags.print);
        }
    } else if (command == "epr") {
        emit(config, "epr_per_node.csv", cmd_epr_heatmap(config), flags.print);
    } else if (command == "eta") {
        emit(config, "coupling_ratio.csv", cmd_eta_heatmap(config), flags.print);
    } else if (command == "epsilon") {
        emit(config, "epsilon_horizon.csv", cmd_epsilon_heatmap(config), flags.print);
    } else if (command == "gamma") {
        emit(config, "communication_overhead.csv", cmd_gamma_heatmap(config), flags.print);
    } else if (command == "verify") {
        const VerifyReport report = cmd_verify(config);
        emit(config, "verify_summary.csv", report.summary, flags.print);
        for (const auto &failure : report.failures) {
            std::cout << failure.describe() << '\n';
        }
        std::cout << (report.passed() ? "PASS" : "FAIL") << ": " << report.checks << " checks, "
                  << report.failures.size() << " violations, min lowered fidelity "
                  << format_real(report.min_lowered_fidelity) << '\n';
        return report.passed() ? kExitOk : kExitVerifyFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Distributed inverse QFT compiler and simulator experiments"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    CliFlags flags;
    app.add_option("--config", flags.config_file, "JSON config file; flags override its values");
    app.add_option("--p-range", flags.p_range, "node count range, e.g. 2:20");
    app.add_option("--q-range", flags.q_range, "qubits-per-node range, e.g. 2:20");
    app.add_option("--d-range", flags.d_range, "communication horizon range for the epsilon command");
    app.add_option("--thresholds", flags.thresholds, "comma list of thresholds, 'exact' for unpruned");
    app.add_option("--epsilon", flags.epsilons, "error tolerances converted to thresholds")->delimiter(',');
    app.add_option("--seed", flags.seed, "master seed");
    app.add_option("--protocol", flags.protocol, "telegate or teledata");
    app.add_option("--gamma-denominator", flags.gamma_denominator, "all-cp or remote-cp");
    app.add_option("--out-dir", flags.out_dir, "directory for CSV output");
    app.add_option("--max-qubits", flags.max_qubits, "simulator qubit cap");
    app.add_option("--seeds", flags.verify_seeds, "verify: measurement seeds per input");
    app.add_option("--inputs", flags.verify_inputs, "verify: random inputs per layout");
    app.add_option("--max-register", flags.verify_max_register, "verify: largest P*Q checked");
    app.add_flag("--print", flags.print, "also write CSV to stdout");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"fidelity", "infidelity vs pruning threshold (statevector)"},
        {"epr", "EPR pairs per node heatmap"},
        {"eta", "coupling ratio heatmap"},
        {"epsilon", "error exponent vs communication horizon"},
        {"gamma", "communication overhead heatmap"},
        {"verify", "distributed vs monolithic equivalence oracle"},
    };
    for (const auto &[name, help] : commands) {
        app.add_subcommand(name, help);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run_command(command, flags);
    } catch (const std::exception &e) {
        std::cerr << "diqft " << command << ": " << e.what() << '\n';
        return kExitConfig;
    }
}
