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
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "diqft/circuit.hpp"
#include "diqft/kernels.hpp"
#include "diqft/lowering.hpp"

namespace diqft {

using Amplitude = kernels::Amplitude;

/// Dense 2^n amplitude array plus a classical bit store. Wire 0 is the least
/// significant bit of a basis label.
class StateVector {
   public:
    static constexpr std::uint32_t kDefaultQubitCap = 24;

    /// |0...0> on n qubits. Throws CapacityError above `cap`.
    explicit StateVector(std::uint32_t n, std::uint32_t cap = kDefaultQubitCap);
    /// Size must be a power of two; amplitudes are taken as given.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes, std::uint32_t cap = kDefaultQubitCap);

    StateVector(const StateVector &other);
    StateVector &operator=(const StateVector &other);
    StateVector(StateVector &&) noexcept = default;
    StateVector &operator=(StateVector &&) noexcept = default;

    std::uint32_t num_qubits() const { return n_; }
    std::size_t size() const { return amps_.size(); }
    std::span<Amplitude> amplitudes() { return amps_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;

    void reset_classical(int count) { bits_.assign(static_cast<std::size_t>(count), -1); }
    int classical_count() const { return static_cast<int>(bits_.size()); }
    /// nullopt until the bit has been written by a measurement.
    std::optional<bool> bit(int id) const;
    void set_bit(int id, bool value);
    /// Measurement record in bit-id order; unwritten bits read as -1.
    const std::vector<std::int8_t> &classical_bits() const { return bits_; }

    /// Number of amplitude buffers ever allocated in this process.
    static std::size_t allocation_count();

   private:
    std::uint32_t n_ = 0;
    std::vector<Amplitude> amps_;
    std::vector<std::int8_t> bits_;
};

/// Applies one gate. Measurements draw from the stream keyed by
/// (seed, op_index), project and renormalise, and record the bit.
void apply(StateVector &state, const Gate &gate, std::uint64_t seed, std::uint64_t op_index);

StateVector basis_state(std::uint32_t n, std::uint64_t x);
/// a_y = exp(2 pi i x y / 2^n) / sqrt(2^n), evaluated directly.
StateVector prepare_fourier_state(std::uint64_t x, std::uint32_t n);
/// Normalised complex-Gaussian vector (Haar distributed).
StateVector haar_random_state(std::uint32_t n, std::uint64_t seed);

/// Output bit i of the result is wire `permutation[i]` of `state`.
StateVector permute_qubits(const StateVector &state, std::span<const Qubit> permutation);

struct RunOptions {
    std::uint32_t qubit_cap = StateVector::kDefaultQubitCap;
};

/// Relabels the input by the circuit's input permutation, then executes all gates.
StateVector run(const Circuit &circuit, const StateVector &input, std::uint64_t seed = 0);

/// Executes a lowered program on `input` (its logical register). Ancilla wires
/// must finish in definite basis states; the logical register is read from
/// `final_location`. The input permutation is applied before the first op.
StateVector run(const LoweredProgram &program, const StateVector &input, std::uint64_t seed,
                const RunOptions &options = {});

/// Amplitudes as little-endian (real, imag) float64 pairs.
void dump_amplitudes(std::ostream &out, const StateVector &state);
StateVector load_amplitudes(std::istream &in, std::uint32_t cap = StateVector::kDefaultQubitCap);

}  // namespace diqft
