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

#include <vector>

#include <Eigen/Dense>

#include "holoqc/gates.hpp"
#include "holoqc/holostate.hpp"

namespace holoqc {

/// Dense state vector in the same big-endian order as HoloState.
struct StateVector {
  std::size_t nqubits = 1;
  std::vector<Complex> amps;

  static StateVector zero(std::size_t nqubits);
  static StateVector from_holo(const HoloState& state);
  HoloState to_holo() const;
  double norm() const;
};

Eigen::Matrix2cd gate_matrix_1q(const GateSpec& gate);
/// 4x4 matrix in the basis |q0 q1> with q0 = gate.qubits[0] most significant.
Eigen::Matrix4cd gate_matrix_2q(const GateSpec& gate);

/// Applies the 2x2 / 4x4 unitary by index arithmetic, in place.
void apply_gate_matrix(const GateSpec& gate, StateVector& state);
StateVector run_circuit_matrix(const Circuit& circuit, StateVector state);

/// Max entrywise |a - e^{i theta} b| with theta chosen so the two agree in
/// phase on a's largest-magnitude amplitude. No alignment when b vanishes
/// there.
double compare_states(const StateVector& a, const HoloState& b);
double compare_states(const StateVector& a, const StateVector& b);

}  // namespace holoqc
