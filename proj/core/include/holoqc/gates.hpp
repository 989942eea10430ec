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

#include <array>
#include <functional>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "holoqc/diffop.hpp"
#include "holoqc/holostate.hpp"

namespace holoqc {

enum class GateKind { X, Y, Z, H, SWAP, CNOT, CZ, CU };

std::string_view to_string(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);
/// Number of qubits the kind acts on (1 or 2).
std::size_t arity(GateKind kind);

/// One gate application. Qubits are 0-based; for controlled kinds qubits[0]
/// is the control and qubits[1] the target. u is only used by CU.
struct GateSpec {
  GateKind kind;
  std::vector<std::size_t> qubits;
  std::optional<Eigen::Matrix2cd> u;
};

/// Throws InputError unless indices are distinct and below nqubits, the
/// arity matches, and u (CU only, required there) is unitary within 1e-10.
void validate(const GateSpec& gate, std::size_t nqubits);

struct Circuit {
  std::size_t nqubits = 1;
  std::vector<GateSpec> gates;
};

void validate(const Circuit& circuit);

enum class GateForm {
  kPreferred,     // substitution for H and SWAP, differential otherwise
  kDifferential,  // always a DiffOperator (H as (X+Z)/sqrt2, SWAP via Paulis)
};

using GateOperator = std::variant<DiffOperator, Substitution>;

/// Signature of the gate table used by the holomorphic engine.
using GateTable = std::function<GateOperator(const GateSpec&, std::size_t nqubits)>;

GateOperator gate_operator(const GateSpec& gate, std::size_t nqubits,
                           GateForm form = GateForm::kPreferred);

/// Lambda_c(U_t) = (1 + Z_c)/2 + (1 - Z_c)/2 * U_t with
/// U = u00 + u01 X + u10 Y + u11 Z, coefficients taken by trace projection.
DiffOperator controlled_u(std::size_t nqubits, std::size_t control,
                          std::size_t target, const Eigen::Matrix2cd& u);

/// Pauli coefficients (u00, u01, u10, u11) of a 2x2 matrix.
std::array<Complex, 4> pauli_decompose(const Eigen::Matrix2cd& u);

SparsePoly apply_operator(const GateOperator& op, const SparsePoly& poly);

HoloState apply_gate(const GateSpec& gate, const HoloState& state);
HoloState apply_gate(const GateSpec& gate, const HoloState& state,
                     const GateTable& table);

/// Called after every gate with the gate index and the raw output
/// polynomial (before decoding), so callers can audit homogeneity.
using GateObserver = std::function<void(std::size_t, const SparsePoly&)>;

HoloState run_circuit_holo(const Circuit& circuit, const HoloState& initial);
HoloState run_circuit_holo(const Circuit& circuit, const HoloState& initial,
                           const GateTable& table, const GateObserver& observer = {});

/// The default gate table (gate_operator with GateForm::kPreferred).
GateTable default_gate_table();

}  // namespace holoqc
