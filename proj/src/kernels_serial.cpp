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

namespace diqft::kernels::serial {

void hadamard(std::span<Amplitude> amps, Qubit q) {
    const double s = std::numbers::sqrt2 / 2.0;
    const std::uint64_t half = amps.size() / 2;
    const std::uint64_t stride = std::uint64_t{1} << q;
    for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = insert_zero_bit(i, q);
        const Amplitude a = amps[i0];
        const Amplitude b = amps[i0 | stride];
        amps[i0] = s * (a + b);
        amps[i0 | stride] = s * (a - b);
    }
}

void pauli_x(std::span<Amplitude> amps, Qubit q) {
    const std::uint64_t half = amps.size() / 2;
    const std::uint64_t stride = std::uint64_t{1} << q;
    for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = insert_zero_bit(i, q);
        std::swap(amps[i0], amps[i0 | stride]);
    }
}

void pauli_z(std::span<Amplitude> amps, Qubit q) {
    const std::uint64_t half = amps.size() / 2;
    const std::uint64_t stride = std::uint64_t{1} << q;
    for (std::uint64_t i = 0; i < half; ++i) {
        amps[insert_zero_bit(i, q) | stride] *= -1.0;
    }
}

void cnot(std::span<Amplitude> amps, Qubit control, Qubit target) {
    const std::uint64_t quarter = amps.size() / 4;
    const std::uint64_t cbit = std::uint64_t{1} << control;
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const Qubit lo = std::min(control, target);
    const Qubit hi = std::max(control, target);
    for (std::uint64_t i = 0; i < quarter; ++i) {
        const std::uint64_t base = insert_two_zero_bits(i, lo, hi) | cbit;
        std::swap(amps[base], amps[base | tbit]);
    }
}

void phase_both_set(std::span<Amplitude> amps, Qubit a, Qubit b, Amplitude phase) {
    const std::uint64_t quarter = amps.size() / 4;
    const std::uint64_t both = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    const Qubit lo = std::min(a, b);
    const Qubit hi = std::max(a, b);
    for (std::uint64_t i = 0; i < quarter; ++i) {
        amps[insert_two_zero_bits(i, lo, hi) | both] *= phase;
    }
}

double probability_one(std::span<const Amplitude> amps, Qubit q) {
    const std::uint64_t half = amps.size() / 2;
    const std::uint64_t stride = std::uint64_t{1} << q;
    double p = 0.0;
    for (std::uint64_t i = 0; i < half; ++i) {
        p += std::norm(amps[insert_zero_bit(i, q) | stride]);
    }
    return p;
}

void collapse(std::span<Amplitude> amps, Qubit q, bool outcome, double scale) {
    const std::uint64_t half = amps.size() / 2;
    const std::uint64_t stride = std::uint64_t{1} << q;
    for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = insert_zero_bit(i, q);
        const std::uint64_t keep = outcome ? i0 | stride : i0;
        const std::uint64_t drop = outcome ? i0 : i0 | stride;
        amps[keep] *= scale;
        amps[drop] = 0.0;
    }
}

double norm_squared(std::span<const Amplitude> amps) {
    double total = 0.0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

Amplitude inner_product(std::span<const Amplitude> bra, std::span<const Amplitude> ket) {
    Amplitude total = 0.0;
    for (std::size_t i = 0; i < bra.size(); ++i) {
        total += std::conj(bra[i]) * ket[i];
    }
    return total;
}

}  // namespace diqft::kernels::serial
