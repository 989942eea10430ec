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

#include "holoqc/gates.hpp"

#include <algorithm>
#include <cmath>

namespace holoqc {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 8> kGateNames{{
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::H, "H"},
    {GateKind::SWAP, "SWAP"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::CZ, "CZ"},
    {GateKind::CU, "CU"},
}};

bool is_unitary(const Eigen::Matrix2cd& u, double tol) {
  return (u * u.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= tol;
}

// (1 + Z_c)/2 and (1 - Z_c)/2
std::pair<DiffOperator, DiffOperator> control_projectors(std::size_t n, std::size_t c) {
  const auto one = DiffOperator::scalar(n, 1.0);
  const auto zc = pauli_z_op(n, c);
  return {(one + zc) * 0.5, (one - zc) * 0.5};
}

}  // namespace

std::string_view to_string(GateKind kind) {
  for (const auto& [k, name] : kGateNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  for (const auto& [k, n] : kGateNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::size_t arity(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
      return 1;
    default:
      return 2;
  }
}

void validate(const GateSpec& gate, std::size_t nqubits) {
  const std::string name(to_string(gate.kind));
  if (gate.qubits.size() != arity(gate.kind)) {
    throw InputError("gate " + name + " takes " + std::to_string(arity(gate.kind)) +
                     " qubit(s), got " + std::to_string(gate.qubits.size()));
  }
  for (auto q : gate.qubits) {
    if (q >= nqubits) {
      throw InputError("gate " + name + ": qubit " + std::to_string(q + 1) +
                       " out of range for " + std::to_string(nqubits) + " qubits");
    }
  }
  if (gate.qubits.size() == 2 && gate.qubits[0] == gate.qubits[1]) {
    throw InputError("gate " + name + ": qubit indices must be distinct");
  }
  if (gate.kind == GateKind::CU) {
    if (!gate.u) throw InputError("gate CU requires a 2x2 unitary payload");
    if (!gate.u->allFinite() || !is_unitary(*gate.u, 1e-10)) {
      throw InputError("gate CU: payload is not unitary within 1e-10");
    }
  }
}

void validate(const Circuit& circuit) {
  if (circuit.nqubits == 0 || circuit.nqubits > kMaxQubits) {
    throw InputError("circuit qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
  }
  for (const auto& g : circuit.gates) validate(g, circuit.nqubits);
}

std::array<Complex, 4> pauli_decompose(const Eigen::Matrix2cd& u) {
  const Complex i{0.0, 1.0};
  // tr(P u)/2 for P in {I, X, Y, Z}
  return {
      (u(0, 0) + u(1, 1)) * 0.5,
      (u(1, 0) + u(0, 1)) * 0.5,
      (-i * u(1, 0) + i * u(0, 1)) * 0.5,
      (u(0, 0) - u(1, 1)) * 0.5,
  };
}

DiffOperator controlled_u(std::size_t nqubits, std::size_t control, std::size_t target,
                          const Eigen::Matrix2cd& u) {
  if (control >= nqubits || target >= nqubits || control == target) {
    throw InputError("controlled_u: control and target must be distinct and in range");
  }
  if (!u.allFinite() || !is_unitary(u, 1e-10)) {
    throw InputError("controlled_u: matrix is not unitary within 1e-10");
  }
  const auto [u00, u01, u10, u11] = pauli_decompose(u);
  DiffOperator ut = DiffOperator::scalar(nqubits, u00);
  ut += pauli_x_op(nqubits, target) * u01;
  ut += pauli_y_op(nqubits, target) * u10;
  ut += pauli_z_op(nqubits, target) * u11;

  auto [p0, p1] = control_projectors(nqubits, control);
  return p0 + compose(p1, ut);
}

GateOperator gate_operator(const GateSpec& gate, std::size_t n, GateForm form) {
  validate(gate, n);
  const auto& q = gate.qubits;
  switch (gate.kind) {
    case GateKind::X:
      return pauli_x_op(n, q[0]);
    case GateKind::Y:
      return pauli_y_op(n, q[0]);
    case GateKind::Z:
      return pauli_z_op(n, q[0]);
    case GateKind::H:
      if (form == GateForm::kPreferred) return hadamard_substitution(n, q[0]);
      return (pauli_x_op(n, q[0]) + pauli_z_op(n, q[0])) * (1.0 / std::sqrt(2.0));
    case GateKind::SWAP: {
      if (form == GateForm::kPreferred) return swap_substitution(n, q[0], q[1]);
      DiffOperator op = DiffOperator::scalar(n, 1.0);
      op += compose(pauli_x_op(n, q[0]), pauli_x_op(n, q[1]));
      op += compose(pauli_y_op(n, q[0]), pauli_y_op(n, q[1]));
      op += compose(pauli_z_op(n, q[0]), pauli_z_op(n, q[1]));
      return op * 0.5;
    }
    case GateKind::CNOT: {
      auto [p0, p1] = control_projectors(n, q[0]);
      return p0 + compose(p1, pauli_x_op(n, q[1]));
    }
    case GateKind::CZ: {
      const auto zc = pauli_z_op(n, q[0]);
      const auto zt = pauli_z_op(n, q[1]);
      DiffOperator op = DiffOperator::scalar(n, 1.0) + zc + zt - compose(zc, zt);
      return op * 0.5;
    }
    case GateKind::CU:
      return controlled_u(n, q[0], q[1], *gate.u);
  }
  throw InputError("gate_operator: unknown gate kind");
}

SparsePoly apply_operator(const GateOperator& op, const SparsePoly& poly) {
  return std::visit(
      [&](const auto& o) -> SparsePoly {
        if constexpr (std::is_same_v<std::decay_t<decltype(o)>, DiffOperator>) {
          return apply_diffop(o, poly);
        } else {
          return apply_substitution(o, poly);
        }
      },
      op);
}

GateTable default_gate_table() {
  return [](const GateSpec& g, std::size_t n) { return gate_operator(g, n); };
}

HoloState apply_gate(const GateSpec& gate, const HoloState& state) {
  return apply_gate(gate, state, default_gate_table());
}

HoloState apply_gate(const GateSpec& gate, const HoloState& state, const GateTable& table) {
  validate(gate, state.nqubits());
  return from_poly(apply_operator(table(gate, state.nqubits()), to_poly(state)));
}

HoloState run_circuit_holo(const Circuit& circuit, const HoloState& initial) {
  return run_circuit_holo(circuit, initial, default_gate_table());
}

HoloState run_circuit_holo(const Circuit& circuit, const HoloState& initial,
                           const GateTable& table, const GateObserver& observer) {
  validate(circuit);
  if (initial.nqubits() != circuit.nqubits) {
    throw InputError("circuit has " + std::to_string(circuit.nqubits) + " qubits, state has " +
                     std::to_string(initial.nqubits()));
  }
  SparsePoly poly = to_poly(initial);
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    poly = apply_operator(table(circuit.gates[i], circuit.nqubits), poly);
    if (observer) observer(i, poly);
    // Decoding each step rejects a broken operator at the gate that broke it.
    if (!check_homogeneity_all(poly)) {
      (void)from_poly(poly);
    }
  }
  return from_poly(poly);
}

}  // namespace holoqc
