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

#include "holoqc/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace holoqc {

StateVector StateVector::zero(std::size_t nqubits) {
  if (nqubits == 0 || nqubits > kMaxQubits) throw InputError("StateVector: bad qubit count");
  StateVector v{nqubits, std::vector<Complex>(std::size_t{1} << nqubits)};
  v.amps[0] = 1.0;
  return v;
}

StateVector StateVector::from_holo(const HoloState& state) {
  return StateVector{state.nqubits(), state.to_dense()};
}

HoloState StateVector::to_holo() const { return encode_state(amps); }

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return std::sqrt(s);
}

Eigen::Matrix2cd gate_matrix_1q(const GateSpec& gate) {
  const Complex i{0.0, 1.0};
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd m;
  switch (gate.kind) {
    case GateKind::X: m << 0, 1, 1, 0; break;
    case GateKind::Y: m << 0, -i, i, 0; break;
    case GateKind::Z: m << 1, 0, 0, -1; break;
    case GateKind::H: m << s, s, s, -s; break;
    default: throw InputError("gate_matrix_1q: not a single-qubit gate");
  }
  return m;
}

Eigen::Matrix4cd gate_matrix_2q(const GateSpec& gate) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  switch (gate.kind) {
    case GateKind::SWAP:
      m(1, 1) = m(2, 2) = 0.0;
      m(1, 2) = m(2, 1) = 1.0;
      break;
    case GateKind::CNOT:
      m(2, 2) = m(3, 3) = 0.0;
      m(2, 3) = m(3, 2) = 1.0;
      break;
    case GateKind::CZ:
      m(3, 3) = -1.0;
      break;
    case GateKind::CU:
      if (!gate.u) throw InputError("gate_matrix_2q: CU without payload");
      m.bottomRightCorner<2, 2>() = *gate.u;
      break;
    default:
      throw InputError("gate_matrix_2q: not a two-qubit gate");
  }
  return m;
}

void apply_gate_matrix(const GateSpec& gate, StateVector& state) {
  validate(gate, state.nqubits);
  const std::size_t n = state.nqubits;
  const std::size_t dim = state.amps.size();
  auto& v = state.amps;

  if (arity(gate.kind) == 1) {
    const auto m = gate_matrix_1q(gate);
    const std::size_t mask = BasisConvention::mask(gate.qubits[0], n);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & mask) continue;
      const Complex v0 = v[i];
      const Complex v1 = v[i | mask];
      v[i] = m(0, 0) * v0 + m(0, 1) * v1;
      v[i | mask] = m(1, 0) * v0 + m(1, 1) * v1;
    }
    return;
  }

  const auto m = gate_matrix_2q(gate);
  const std::size_t m0 = BasisConvention::mask(gate.qubits[0], n);
  const std::size_t m1 = BasisConvention::mask(gate.qubits[1], n);
  const std::array<std::size_t, 4> offsets{0, m1, m0, m0 | m1};
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & (m0 | m1)) continue;
    std::array<Complex, 4> in{};
    for (int r = 0; r < 4; ++r) in[r] = v[i | offsets[r]];
    for (int r = 0; r < 4; ++r) {
      Complex acc{};
      for (int c = 0; c < 4; ++c) acc += m(r, c) * in[c];
      v[i | offsets[r]] = acc;
    }
  }
}

StateVector run_circuit_matrix(const Circuit& circuit, StateVector state) {
  validate(circuit);
  if (state.nqubits != circuit.nqubits) throw InputError("run_circuit_matrix: qubit count mismatch");
  for (const auto& g : circuit.gates) apply_gate_matrix(g, state);
  return state;
}

double compare_states(const StateVector& a, const StateVector& b) {
  if (a.nqubits != b.nqubits || a.amps.size() != b.amps.size()) {
    throw InputError("compare_states: qubit count mismatch");
  }
  std::size_t k = 0;
  for (std::size_t i = 1; i < a.amps.size(); ++i) {
    if (std::abs(a.amps[i]) > std::abs(a.amps[k])) k = i;
  }
  Complex phase{1.0};
  if (std::abs(a.amps[k]) > kZeroTol && std::abs(b.amps[k]) > kZeroTol) {
    const Complex ratio = a.amps[k] / b.amps[k];
    phase = ratio / std::abs(ratio);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.amps.size(); ++i) {
    worst = std::max(worst, std::abs(a.amps[i] - phase * b.amps[i]));
  }
  return worst;
}

double compare_states(const StateVector& a, const HoloState& b) {
  if (a.nqubits != b.nqubits()) throw InputError("compare_states: qubit count mismatch");
  return compare_states(a, StateVector::from_holo(b));
}

}  // namespace holoqc
