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
#include <iosfwd>
#include <vector>

#include "holoqc/common.hpp"

namespace holoqc {

/// Reduce an angle to [0, 2pi).
double wrap_angle(double angle);
/// Reduce an angle to (-pi, pi].
double wrap_signed(double angle);
/// Shortest distance between two angles on the circle, in [0, pi].
double circular_distance(double a, double b);

/// Point of the 2N-torus, phases (phi_a1, phi_b1, ..., phi_aN, phi_bN) in [0, 2pi).
class TorusPoint {
 public:
  /// Phases are wrapped on construction; non-finite input is rejected.
  explicit TorusPoint(std::vector<double> phases);
  static TorusPoint single(double phi_a, double phi_b);

  std::size_t nqubits() const { return phases_.size() / 2; }
  const std::vector<double>& phases() const { return phases_; }
  double phase_a(std::size_t qubit) const { return phases_.at(2 * qubit); }
  double phase_b(std::size_t qubit) const { return phases_.at(2 * qubit + 1); }
  /// phi_a - phi_b wrapped to (-pi, pi].
  double delta(std::size_t qubit) const;
  /// phi_a + phi_b (of the wrapped representatives).
  double sum(std::size_t qubit) const;

 private:
  std::vector<double> phases_;
};

/// H_Z = dphi, H_X = sin(dphi), H_Y = -cos(dphi). H_Z lives on the cover.
double pauli_hamiltonian_value(PauliGenerator generator, double delta);

/// (dphi_a/dt, dphi_b/dt) of the flow generated on one qubit pair:
///   Z: (-1, 1), X: (cos d, -cos d), Y: (sin d, -sin d).
std::array<double, 2> vector_field(PauliGenerator generator, double phi_a, double phi_b);
std::array<double, 2> vector_field(PauliGenerator generator, const TorusPoint& point,
                                   std::size_t qubit);

struct FlowSpec {
  PauliGenerator generator = PauliGenerator::Z;
  std::size_t qubit = 0;
  double t_final = 1.0;
  double dt = 1e-3;
};

void validate(const FlowSpec& spec, std::size_t nqubits);

struct TrajectorySample {
  double t;
  TorusPoint point;
  /// phi_a + phi_b per qubit on the unwrapped cover.
  std::vector<double> sum_phase;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
};

/// Fixed-step classical RK4. The integrator runs on unwrapped phases; only
/// the stored samples are wrapped. The last step is shortened to land on
/// t_final exactly. record_every thins the stored samples (the final state
/// is always stored).
Trajectory integrate_flow(const FlowSpec& spec, const TorusPoint& start,
                          std::size_t record_every = 1);

/// Time-t_final flow map on unwrapped phases of one qubit pair.
std::array<double, 2> flow_map(const FlowSpec& spec, std::array<double, 2> phases);

/// Delimiter-separated export: t, phi_a_1, phi_b_1, ..., sum_phase_1, ...
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

using TorusField = std::function<double(double phi_a, double phi_b)>;

/// {f, g} = df/dphi_a dg/dphi_b - df/dphi_b dg/dphi_a by central differences.
double poisson_bracket(const TorusField& f, const TorusField& g, double phi_a,
                       double phi_b, double step = 1e-6);

/// Hadamard-induced map on qubit pair j:
///   phi'_a = Sigma/2 + arg(1 + e^{i d}),  phi'_b = Sigma/2 + arg(1 - e^{i d}).
/// Throws NumericalError within 1e-9 of d in {0, pi}, where one of the two
/// arguments is taken of zero.
TorusPoint hadamard_torus_map(const TorusPoint& point, std::size_t qubit);

inline constexpr double kSingularityGuard = 1e-9;
inline constexpr double kJacobianGuard = 1e-3;

using TorusMap2 = std::function<std::array<double, 2>(std::array<double, 2>)>;

/// Determinant of the central-difference Jacobian of a map of the 2-torus,
/// differences unwrapped to (-pi, pi].
double jacobian_det(const TorusMap2& map, std::array<double, 2> point,
                    double step = 1e-6);

/// jacobian_det of hadamard_torus_map; rejects points within 1e-3 of a
/// singular d.
double hadamard_jacobian_det(double phi_a, double phi_b);

/// Exchange of the (phi_a, phi_b) pairs of qubits j and k.
TorusPoint swap_torus(const TorusPoint& point, std::size_t j, std::size_t k);

}  // namespace holoqc
