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
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "holoqc/common.hpp"

namespace holoqc {

/// Mode amplitudes (z_a1, z_b1, ..., z_aN, z_bN).
struct CoherentPoint {
  Eigen::VectorXcd z;

  std::size_t nqubits() const { return static_cast<std::size_t>(z.size()) / 2; }
};

/// H(zbar, z) = zbar^T h z with Hermitian h.
class QuadraticHamiltonian {
 public:
  /// Throws InputError unless h is square, of even size and Hermitian
  /// within 1e-12.
  explicit QuadraticHamiltonian(Eigen::MatrixXcd h);

  const Eigen::MatrixXcd& matrix() const { return h_; }
  std::size_t nqubits() const { return static_cast<std::size_t>(h_.rows()) / 2; }

  double energy(const CoherentPoint& point) const;

 private:
  Eigen::MatrixXcd h_;
};

Eigen::Matrix2cd pauli_matrix(PauliGenerator generator);

/// The Pauli matrix embedded on the (a_q, b_q) mode pair.
QuadraticHamiltonian pauli_hamiltonian(PauliGenerator generator, std::size_t qubit,
                                       std::size_t nqubits);

/// z(t) = exp(-i h t) z0 via Hermitian eigendecomposition.
CoherentPoint evolve_classical(const QuadraticHamiltonian& h, const CoherentPoint& z0,
                               double t);

/// dH/dzbar as a function of z; i zdot = dH/dzbar.
using HamiltonianGradient = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;

/// Fixed-step RK4 on zdot = -i dH/dzbar.
CoherentPoint evolve_stepped(const HamiltonianGradient& grad, const CoherentPoint& z0,
                             double t, double dt);
CoherentPoint evolve_stepped(const QuadraticHamiltonian& h, const CoherentPoint& z0,
                             double t, double dt);

/// Max ||evolve_classical - (cos t - i sin t sigma) z0|| over seeded random
/// starting points, the second factor applied to the mode pair directly.
double compare_with_gate(PauliGenerator generator, std::size_t qubit, std::size_t nqubits,
                         double t, std::size_t samples, std::uint64_t seed = 0xC0FFEE);

struct ClassicalSample {
  double t;
  CoherentPoint point;
};

/// Samples of the exact flow on the grid 0, dt, 2dt, ..., t_final.
std::vector<ClassicalSample> classical_series(const QuadraticHamiltonian& h,
                                              const CoherentPoint& z0, double t_final,
                                              double dt);

/// Instantaneous Hadamard on one mode pair (no generating Hamiltonian).
CoherentPoint apply_hadamard_modes(const CoherentPoint& point, std::size_t qubit);

}  // namespace holoqc
