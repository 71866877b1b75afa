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

#include <stdexcept>
#include <string>

namespace diqft {

/// Qubit or node index outside the layout.
struct AddressingError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Non-positive index difference passed to the rotation-angle algebra.
struct InvalidDistanceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Error tolerance outside (0, 1).
struct InvalidToleranceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Register, ancilla budget or simulator width exceeded.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Post-measurement branch with vanishing probability.
struct NumericalDegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ratio metric with a zero denominator (e.g. coupling ratio at Q = 1).
struct UndefinedRatioError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace diqft
