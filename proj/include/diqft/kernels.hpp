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

#include <complex>
#include <cstdint>
#include <span>

#include "diqft/layout.hpp"

// Statevector kernels over little-endian amplitude arrays (wire 0 is the least
// significant bit of a basis label). `serial` is the reference; `omp` splits
// the same loops across OpenMP threads and is what the simulator runs.
namespace diqft::kernels {

using Amplitude = std::complex<double>;

#define DIQFT_KERNEL_DECLS                                                                        \
    void hadamard(std::span<Amplitude> amps, Qubit q);                                           \
    void pauli_x(std::span<Amplitude> amps, Qubit q);                                            \
    void pauli_z(std::span<Amplitude> amps, Qubit q);                                            \
    void cnot(std::span<Amplitude> amps, Qubit control, Qubit target);                           \
    /* multiplies amplitudes with both bits set by `phase` */                                    \
    void phase_both_set(std::span<Amplitude> amps, Qubit a, Qubit b, Amplitude phase);           \
    double probability_one(std::span<const Amplitude> amps, Qubit q);                            \
    /* zeroes the branch where bit q != outcome and scales the rest */                           \
    void collapse(std::span<Amplitude> amps, Qubit q, bool outcome, double scale);               \
    double norm_squared(std::span<const Amplitude> amps);                                        \
    Amplitude inner_product(std::span<const Amplitude> bra, std::span<const Amplitude> ket);

namespace serial {
DIQFT_KERNEL_DECLS
}  // namespace serial

namespace omp {
DIQFT_KERNEL_DECLS
/// Threads OpenMP would use; 1 when built without OpenMP.
int max_threads();
}  // namespace omp

#undef DIQFT_KERNEL_DECLS

/// Index of the i-th basis label whose bit q is zero.
inline std::uint64_t insert_zero_bit(std::uint64_t i, Qubit q) {
    const std::uint64_t low = i & ((std::uint64_t{1} << q) - 1);
    return ((i >> q) << (q + 1)) | low;
}

/// Index of the i-th basis label whose bits lo < hi are both zero.
inline std::uint64_t insert_two_zero_bits(std::uint64_t i, Qubit lo, Qubit hi) {
    return insert_zero_bit(insert_zero_bit(i, lo), hi);
}

}  // namespace diqft::kernels
