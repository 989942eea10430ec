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

#include "holoqc/random.hpp"

#include <cmath>

namespace holoqc {

HoloState random_state(std::size_t nqubits, Rng& rng) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> amps(std::size_t{1} << nqubits);
  double norm2 = 0.0;
  for (auto& a : amps) {
    a = Complex{gauss(rng), gauss(rng)};
    norm2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= inv;
  return encode_state(amps);
}

Eigen::Matrix2cd random_unitary_2x2(Rng& rng) {
  std::normal_distribution<double> gauss;
  Eigen::Vector2cd c0{Complex{gauss(rng), gauss(rng)}, Complex{gauss(rng), gauss(rng)}};
  Eigen::Vector2cd c1{Complex{gauss(rng), gauss(rng)}, Complex{gauss(rng), gauss(rng)}};
  c0.normalize();
  c1 -= c0.dot(c1) * c0;
  c1.normalize();
  Eigen::Matrix2cd u;
  u.col(0) = c0;
  u.col(1) = c1;
  return u;
}

GateSpec random_gate(std::size_t nqubits, Rng& rng) {
  static constexpr GateKind kAll[] = {GateKind::X,    GateKind::Y,  GateKind::Z,  GateKind::H,
                                      GateKind::SWAP, GateKind::CNOT, GateKind::CZ, GateKind::CU};
  // The first four entries are the single-qubit kinds.
  const std::size_t choices = nqubits >= 2 ? std::size(kAll) : 4;
  std::uniform_int_distribution<std::size_t> pick_kind(0, choices - 1);
  std::uniform_int_distribution<std::size_t> pick_qubit(0, nqubits - 1);

  GateSpec g{kAll[pick_kind(rng)], {}, std::nullopt};
  g.qubits.push_back(pick_qubit(rng));
  if (arity(g.kind) == 2) {
    std::uniform_int_distribution<std::size_t> pick_other(0, nqubits - 2);
    std::size_t t = pick_other(rng);
    if (t >= g.qubits[0]) ++t;
    g.qubits.push_back(t);
  }
  if (g.kind == GateKind::CU) g.u = random_unitary_2x2(rng);
  return g;
}

Circuit random_circuit(std::size_t nqubits, std::size_t depth, Rng& rng) {
  Circuit c{nqubits, {}};
  c.gates.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) c.gates.push_back(random_gate(nqubits, rng));
  return c;
}

}  // namespace holoqc
