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

#include "diqft/statevector.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include "diqft/errors.hpp"
#include "diqft/rng.hpp"

namespace diqft {

namespace {

std::atomic<std::size_t> g_allocations{0};

namespace kern = kernels::omp;

void check_cap(std::uint32_t n, std::uint32_t cap) {
    if (n > cap) {
        throw CapacityError("register of " + std::to_string(n) + " qubits exceeds the simulator cap of " +
                            std::to_string(cap));
    }
}

// out[y] = in[x] where bit `wire_for_bit[i]` of x equals bit i of y and the
// remaining bits of x are `fixed`.
std::vector<Amplitude> gather(std::span<const Amplitude> in, std::span<const Qubit> wire_for_bit,
                              std::uint64_t fixed) {
    const std::size_t out_size = std::size_t{1} << wire_for_bit.size();
    std::vector<Amplitude> out(out_size);
    for (std::size_t y = 0; y < out_size; ++y) {
        std::uint64_t x = fixed;
        for (std::size_t i = 0; i < wire_for_bit.size(); ++i) {
            x |= static_cast<std::uint64_t>((y >> i) & 1U) << wire_for_bit[i];
        }
        out[y] = in[x];
    }
    return out;
}

// Returns the definite value of a wire that has been measured.
bool definite_value(const StateVector &state, Qubit q) {
    const double p1 = kern::probability_one(state.amplitudes(), q);
    if (p1 < 1e-9) {
        return false;
    }
    if (p1 > 1.0 - 1e-9) {
        return true;
    }
    throw std::logic_error("wire " + std::to_string(q) + " is still in superposition (p1 = " + std::to_string(p1) +
                           ")");
}

}  // namespace

StateVector::StateVector(std::uint32_t n, std::uint32_t cap) : n_(n) {
    check_cap(n, cap);
    amps_.assign(std::size_t{1} << n, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
    ++g_allocations;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes, std::uint32_t cap) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    const auto n = static_cast<std::uint32_t>(std::countr_zero(amplitudes.size()));
    check_cap(n, cap);
    StateVector state(0, cap);
    state.n_ = n;
    state.amps_ = std::move(amplitudes);
    return state;
}

StateVector::StateVector(const StateVector &other) : n_(other.n_), amps_(other.amps_), bits_(other.bits_) {
    ++g_allocations;
}

StateVector &StateVector::operator=(const StateVector &other) {
    if (this != &other) {
        n_ = other.n_;
        amps_ = other.amps_;
        bits_ = other.bits_;
        ++g_allocations;
    }
    return *this;
}

double StateVector::norm_squared() const { return kern::norm_squared(amps_); }

std::optional<bool> StateVector::bit(int id) const {
    if (id < 0 || id >= classical_count()) {
        throw AddressingError("classical bit " + std::to_string(id) + " is not allocated");
    }
    const auto v = bits_[static_cast<std::size_t>(id)];
    if (v < 0) {
        return std::nullopt;
    }
    return v == 1;
}

void StateVector::set_bit(int id, bool value) {
    if (id < 0 || id >= classical_count()) {
        throw AddressingError("classical bit " + std::to_string(id) + " is not allocated");
    }
    bits_[static_cast<std::size_t>(id)] = value ? 1 : 0;
}

std::size_t StateVector::allocation_count() { return g_allocations.load(); }

void apply(StateVector &state, const Gate &gate, std::uint64_t seed, std::uint64_t op_index) {
    auto amps = state.amplitudes();
    const Qubit a = gate.qubits[0];
    const Qubit b = gate.qubits[1];
    for (std::size_t j = 0; j < gate.arity(); ++j) {
        if (gate.qubits[j] >= state.num_qubits()) {
            throw AddressingError(to_string(gate) + " addresses a wire outside the state");
        }
    }
    switch (gate.kind) {
        case GateKind::H: kern::hadamard(amps, a); break;
        case GateKind::X: kern::pauli_x(amps, a); break;
        case GateKind::Z: kern::pauli_z(amps, a); break;
        case GateKind::CNOT: kern::cnot(amps, a, b); break;
        case GateKind::CP: kern::phase_both_set(amps, a, b, std::polar(1.0, gate.angle())); break;
        case GateKind::MeasureZ: {
            const double p1 = kern::probability_one(amps, a);
            const bool outcome = uniform_draw(seed, op_index) < p1;
            const double p = outcome ? p1 : kern::norm_squared(amps) - p1;
            if (p < 1e-30) {
                throw NumericalDegeneracyError("measurement branch on wire " + std::to_string(a) +
                                               " has probability " + std::to_string(p));
            }
            kern::collapse(amps, a, outcome, 1.0 / std::sqrt(p));
            state.set_bit(gate.bit, outcome);
            break;
        }
        case GateKind::ClassicallyControlled: {
            const auto value = state.bit(gate.bit);
            if (!value) {
                throw std::logic_error("classical bit " + std::to_string(gate.bit) + " read before it was written");
            }
            if (*value) {
                if (gate.inner == GateKind::X) {
                    kern::pauli_x(amps, a);
                } else if (gate.inner == GateKind::Z) {
                    kern::pauli_z(amps, a);
                } else {
                    throw std::invalid_argument("classically controlled gate must wrap X or Z");
                }
            }
            break;
        }
        case GateKind::EprPair: {
            // Both halves were measured earlier (or never touched); reset to |00>.
            if (definite_value(state, a)) {
                kern::pauli_x(amps, a);
            }
            if (definite_value(state, b)) {
                kern::pauli_x(amps, b);
            }
            kern::hadamard(amps, a);
            kern::cnot(amps, a, b);
            break;
        }
    }
}

StateVector basis_state(std::uint32_t n, std::uint64_t x) {
    StateVector state(n);
    if (x >= state.size()) {
        throw AddressingError("basis label " + std::to_string(x) + " is outside a " + std::to_string(n) +
                              "-qubit register");
    }
    auto amps = state.amplitudes();
    amps[0] = 0.0;
    amps[x] = 1.0;
    return state;
}

StateVector prepare_fourier_state(std::uint64_t x, std::uint32_t n) {
    StateVector state(n);
    const std::uint64_t dim = state.size();
    if (x >= dim) {
        throw AddressingError("Fourier label " + std::to_string(x) + " is outside a " + std::to_string(n) +
                              "-qubit register");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    auto amps = state.amplitudes();
    const std::uint64_t mask = dim - 1;
    for (std::uint64_t y = 0; y < dim; ++y) {
        // Reduce x*y mod 2^n in integers so the phase argument stays exact.
        const std::uint64_t r = (x * y) & mask;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(dim);
        amps[y] = std::polar(scale, angle);
    }
    return state;
}

StateVector haar_random_state(std::uint32_t n, std::uint64_t seed) {
    StateVector state(n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto amps = state.amplitudes();
    for (auto &a : amps) {
        const double re = normal(rng);
        const double im = normal(rng);
        a = {re, im};
    }
    const double scale = 1.0 / std::sqrt(state.norm_squared());
    for (auto &a : amps) {
        a *= scale;
    }
    return state;
}

StateVector permute_qubits(const StateVector &state, std::span<const Qubit> permutation) {
    if (permutation.size() != state.num_qubits()) {
        throw std::invalid_argument("permutation size does not match register");
    }
    return StateVector::from_amplitudes(gather(state.amplitudes(), permutation, 0), state.num_qubits());
}

StateVector run(const Circuit &circuit, const StateVector &input, std::uint64_t seed) {
    if (input.num_qubits() != circuit.num_qubits()) {
        throw std::invalid_argument("input has " + std::to_string(input.num_qubits()) + " qubits, circuit has " +
                                    std::to_string(circuit.num_qubits()));
    }
    StateVector state = circuit.input_permutation.empty() ? input : permute_qubits(input, circuit.input_permutation);
    state.reset_classical(circuit.classical_bits);
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        apply(state, circuit.gates[i], seed, i);
    }
    return state;
}

StateVector run(const LoweredProgram &program, const StateVector &input, std::uint64_t seed,
                const RunOptions &options) {
    const std::uint32_t n = program.num_logical();
    if (input.num_qubits() != n) {
        throw std::invalid_argument("input has " + std::to_string(input.num_qubits()) + " qubits, program has " +
                                    std::to_string(n));
    }
    check_cap(program.width, options.qubit_cap);

    std::vector<Amplitude> wide(std::size_t{1} << program.width, Amplitude{0.0, 0.0});
    const StateVector loaded =
        program.input_permutation.empty() ? input : permute_qubits(input, program.input_permutation);
    std::copy(loaded.amplitudes().begin(), loaded.amplitudes().end(), wide.begin());
    StateVector state = StateVector::from_amplitudes(std::move(wide), options.qubit_cap);
    state.reset_classical(program.classical_bits);
    for (std::size_t i = 0; i < program.ops.size(); ++i) {
        apply(state, program.ops[i], seed, i);
    }

    std::vector<bool> is_logical(program.width, false);
    for (Qubit w : program.final_location) {
        is_logical[w] = true;
    }
    std::uint64_t fixed = 0;
    for (Qubit w = 0; w < program.width; ++w) {
        if (!is_logical[w] && definite_value(state, w)) {
            fixed |= std::uint64_t{1} << w;
        }
    }
    std::vector<Qubit> wire_for_bit(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        wire_for_bit[i] = program.final_location[i];
    }
    StateVector out = StateVector::from_amplitudes(gather(state.amplitudes(), wire_for_bit, fixed), options.qubit_cap);
    const double mass = out.norm_squared();
    if (std::abs(mass - 1.0) > 1e-9) {
        throw std::logic_error("ancilla wires are still entangled with the logical register (mass " +
                               std::to_string(mass) + ")");
    }
    return out;
}

void dump_amplitudes(std::ostream &out, const StateVector &state) {
    static_assert(std::endian::native == std::endian::little, "amplitude dump assumes a little-endian host");
    for (const Amplitude &a : state.amplitudes()) {
        const double pair[2] = {a.real(), a.imag()};
        out.write(reinterpret_cast<const char *>(pair), sizeof(pair));
    }
}

StateVector load_amplitudes(std::istream &in, std::uint32_t cap) {
    std::vector<Amplitude> amps;
    double pair[2];
    while (in.read(reinterpret_cast<char *>(pair), sizeof(pair))) {
        amps.emplace_back(pair[0], pair[1]);
    }
    return StateVector::from_amplitudes(std::move(amps), cap);
}

}  // namespace diqft
