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

#include <algorithm>
#include <numbers>

#include "diqft/kernels.hpp"

#ifdef DIQFT_HAVE_OPENMP
#include <omp.h>
#endif

namespace diqft::kernels::omp {

namespace {
// Below this many loop iterations thread start-up costs more than it saves.
constexpr std::int64_t kParallelCutoff = std::int64_t{1} << 14;
}  // namespace

int max_threads() {
#ifdef DIQFT_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void hadamard(std::span<Amplitude> amps, Qubit q) {
    const double s = std::numbers::sqrt2 / 2.0;
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    const std::uint64_t stride = std::uint64_t{1} << q;
    Amplitude *data = amps.data();
#pragma omp parallel for schedule(static) if (half >= kParallelCutoff)
    for (std::int64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = insert_zero_bit(static_cast<std::uint64_t>(i), q);
        const Amplitude a = data[i0];
        const Amplitude b = data[i0 | stride];
        data[i0] = s * (a + b);
        data[i0 | stride] = s * (a - b);
    }
}

void pauli_x(std::span<Amplitude> amps, Qubit q) {
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    const std::uint64_t stride = std::uint64_t{1} << q;
    Amplitude *data = amps.data();
#pragma omp parallel for schedule(static) if (half >= kParallelCutoff)
    for (std::int64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = insert_zero_bit(static_cast<std::uint64_t>(i), q);
        std::swap(data[i0], data[i0 | stride]);
    }
}

void pauli_z(std::span<Amplitude> amps, Qubit q) {
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    const std::uint64_t stride = std::uint64_t{1} << q;
    Amplitude *data = amps.data();
#pragma omp parallel for schedule(static) if (half >= kParallelCutoff)
    for (std::int64_t i = 0; i < half; ++i) {
        data[insert_zero_bit(static_cast<std::uint64_t>(i), q) | stride] *= -1.0;
    }
}

void cnot(std::span<Amplitude> amps, Qubit control, Qubit target) {
    const auto quarter = static_cast<std::int64_t>(amps.size() / 4);
    const std::uint64_t cbit = std::uint64_t{1} << control;
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const Qubit lo = std::min(control, target);
    const Qubit hi = std::max(control, target);
    Amplitude *data = amps.data();
#pragma omp parallel for schedule(static) if (quarter >= kParallelCutoff)
    for (std::int64_t i = 0; i < quarter; ++i) {
        const std::uint64_t base = insert_two_zero_bits(static_cast<std::uint64_t>(i), lo, hi) | cbit;
        std::swap(data[base], data[base | tbit]);
    }
}

void phase_both_set(std::span<Amplitude> amps, Qubit a, Qubit b, Amplitude phase) {
    const auto quarter = static_cast<std::int64_t>(amps.size() / 4);
    const std::uint64_t both = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    const Qubit lo = std::min(a, b);
    const Qubit hi = std::max(a, b);
    Amplitude *data = amps.data();
#pragma omp parallel for schedule(static) if (quarter >= kParallelCutoff)
    for (std::int64_t i = 0; i < quarter; ++i) {
        data[insert_two_zero_bits(static_cast<std::uint64_t>(i), lo, hi) | both] *= phase;
    }
}

double probability_one(std::span<const Amplitude> amps, Qubit q) {
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    const std::uint64_t stride = std::uint64_t{1} << q;
    const Amplitude *data = amps.data();
    double p = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : p) if (half >= kParallelCutoff)
    for (std::int64_t i = 0; i < half; ++i) {
        p += std::norm(data[insert_zero_bit(static_cast<std::uint64_t>(i), q) | stride]);
    }
    return p;
}

void collapse(std::span<Amplitude> amps, Qubit q, bool outcome, double scale) {
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    const std::uint64_t stride = std::uint64_t{1} << q;
    Amplitude *data = amps.data();
#pragma omp parallel for schedule(static) if (half >= kParallelCutoff)
    for (std::int64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = insert_zero_bit(static_cast<std::uint64_t>(i), q);
        const std::uint64_t keep = outcome ? i0 | stride : i0;
        const std::uint64_t drop = outcome ? i0 : i0 | stride;
        data[keep] *= scale;
        data[drop] = 0.0;
    }
}

double norm_squared(std::span<const Amplitude> amps) {
    const auto size = static_cast<std::int64_t>(amps.size());
    const Amplitude *data = amps.data();
    double total = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : total) if (size >= kParallelCutoff)
    for (std::int64_t i = 0; i < size; ++i) {
        total += std::norm(data[i]);
    }
    return total;
}

Amplitude inner_product(std::span<const Amplitude> bra, std::span<const Amplitude> ket) {
    const auto size = static_cast<std::int64_t>(bra.size());
    const Amplitude *x = bra.data();
    const Amplitude *y = ket.data();
    double re = 0.0;
    double im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : re, im) if (size >= kParallelCutoff)
    for (std::int64_t i = 0; i < size; ++i) {
        const Amplitude term = std::conj(x[i]) * y[i];
        re += term.real();
        im += term.imag();
    }
    return {re, im};
}

}  // namespace diqft::kernels::omp
