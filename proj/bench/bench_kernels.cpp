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

// Times the serial reference kernels against the OpenMP kernels.
//
//   bench_kernels [max_qubits=22] [repeats=5]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "diqft/iqft.hpp"
#include "diqft/kernels.hpp"
#include "diqft/statevector.hpp"

namespace {

using namespace diqft;
using Clock = std::chrono::steady_clock;

double time_ms(int repeats, const std::function<void()> &body) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = Clock::now();
        body();
        const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
        best = std::min(best, elapsed.count());
    }
    return best;
}

struct KernelCase {
    const char *name;
    std::function<void(std::span<kernels::Amplitude>)> serial;
    std::function<void(std::span<kernels::Amplitude>)> parallel;
};

}  // namespace

int main(int argc, char **argv) {
    const int max_qubits = argc > 1 ? std::atoi(argv[1]) : 22;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;
    const auto phase = std::polar(1.0, -0.125);

    const std::vector<KernelCase> cases = {
        {"hadamard(q=3)", [](auto a) { kernels::serial::hadamard(a, 3); }, [](auto a) { kernels::omp::hadamard(a, 3); }},
        {"cnot(1,7)", [](auto a) { kernels::serial::cnot(a, 1, 7); }, [](auto a) { kernels::omp::cnot(a, 1, 7); }},
        {"phase(2,9)", [&](auto a) { kernels::serial::phase_both_set(a, 2, 9, phase); },
         [&](auto a) { kernels::omp::phase_both_set(a, 2, 9, phase); }},
        {"prob_one(5)", [](auto a) { (void)kernels::serial::probability_one(a, 5); },
         [](auto a) { (void)kernels::omp::probability_one(a, 5); }},
    };

    std::printf("OpenMP threads: %d\n", kernels::omp::max_threads());
    std::printf("%-16s %6s %12s %12s %8s\n", "kernel", "qubits", "serial_ms", "omp_ms", "speedup");
    for (int n = 16; n <= max_qubits; n += 2) {
        StateVector state = haar_random_state(static_cast<std::uint32_t>(n), 1);
        for (const auto &c : cases) {
            const double ts = time_ms(repeats, [&] { c.serial(state.amplitudes()); });
            const double tp = time_ms(repeats, [&] { c.parallel(state.amplitudes()); });
            std::printf("%-16s %6d %12.3f %12.3f %8.2f\n", c.name, n, ts, tp, ts / tp);
        }
    }

    const std::uint32_t n = 18;
    const Circuit circuit = build_monolithic_iqft(n, std::nullopt);
    const StateVector input = prepare_fourier_state(12345, n);
    const double t_run = time_ms(repeats, [&] { (void)run(circuit, input); });
    std::printf("exact iQFT run, n=%u: %.3f ms\n", n, t_run);
    return 0;
}
