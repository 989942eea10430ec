// Copyright 2026 The holoqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "holoqc/gates.hpp"
#include "holoqc/holostate.hpp"

namespace holoqc {

using Rng = std::mt19937_64;

/// Normalized state with i.i.d. complex Gaussian amplitudes.
HoloState random_state(std::size_t nqubits, Rng& rng);

/// Unitary from Gram-Schmidt orthonormalization of a complex Gaussian 2x2.
Eigen::Matrix2cd random_unitary_2x2(Rng& rng);

/// Gate drawn uniformly over all kinds (CU gets a random unitary).
GateSpec random_gate(std::size_t nqubits, Rng& rng);

/// Circuit of exactly depth gates; two-qubit kinds are only drawn when
/// nqubits >= 2.
Circuit random_circuit(std::size_t nqubits, std::size_t depth, Rng& rng);

}  // namespace holoqc
