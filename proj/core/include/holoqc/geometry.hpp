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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "holoqc/holostate.hpp"

namespace holoqc {

/// |<psi|phi>|^2 for normalized states; throws InputError otherwise.
double fidelity(const HoloState& psi, const HoloState& phi);

/// arccos(|<psi|phi>| / (|psi| |phi|)), in [0, pi/2].
///
/// Evaluated as 2 asin(|psi^ - e^{i t} phi^| / 2) on the normalized, phase
/// aligned representatives, which keeps full precision near zero distance.
double fubini_study_distance(const HoloState& psi, const HoloState& phi);
double fubini_study_distance(std::span<const Complex> psi, std::span<const Complex> phi);

/// prod_j (c_0j z_{a_j} + c_1j z_{b_j}), each factor normalized.
struct ProductState {
  std::vector<std::array<Complex, 2>> factors;

  std::size_t nqubits() const { return factors.size(); }
  std::vector<Complex> to_dense() const;
  HoloState to_state() const;
};

struct EntanglementOptions {
  std::size_t restarts = 16;
  std::size_t max_iterations = 500;
  double gain_tol = 1e-12;
  std::uint64_t seed = 0xC0FFEE;
};

struct RestartStats {
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  double overlap = 0.0;
  bool converged = false;
  /// No sweep ever lowered the overlap (beyond 1e-14 rounding slack).
  bool monotone = true;
};

struct EntanglementResult {
  /// min over product states of the Fubini-Study distance.
  double measure = 0.0;
  double max_overlap = 0.0;
  ProductState witness;
  std::vector<RestartStats> restarts;
  std::size_t best_restart = 0;
};

/// Distance to the Segre variety by multi-start alternating maximization of
/// |<phi|psi>| over product states phi. Each sweep replaces one factor by
/// its normalized partial overlap, the exact maximizer with the others fixed.
EntanglementResult entanglement_measure(const HoloState& psi,
                                        const EntanglementOptions& options = {});

struct SeparabilityResult {
  bool separable = false;
  double measure = 0.0;
  std::optional<ProductState> witness;
};

inline constexpr double kSeparabilityTol = 1e-6;

SeparabilityResult is_separable(const HoloState& psi, double tol = kSeparabilityTol,
                                const EntanglementOptions& options = {});

struct SchmidtResult {
  double lambda_max = 0.0;
  double distance = 0.0;
};

/// Two-qubit reference: largest singular value of the 2x2 matrix c_{s1 s2}.
SchmidtResult schmidt_oracle(const HoloState& psi);

/// Closed loop of states psi_0 .. psi_{M-1}; the closing state equal to
/// psi_0 up to phase may be supplied as psi_M and is then dropped.
class StateLoop {
 public:
  explicit StateLoop(std::vector<HoloState> states);

  std::size_t size() const { return states_.size(); }
  const std::vector<HoloState>& states() const { return states_; }

 private:
  std::vector<HoloState> states_;
};

inline constexpr std::size_t kMinLoopPoints = 16;

/// gamma = -arg prod_k <psi_k|psi_{k+1 mod M}>, in (-pi, pi].
/// Throws InputError for M < 16, NumericalError on a vanishing overlap.
double berry_holonomy(const StateLoop& loop);

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> for phi = 2 pi k / M.
StateLoop bloch_circle_loop(double theta, std::size_t points);

/// -pi (1 - cos theta) wrapped to (-pi, pi].
double bloch_circle_reference(double theta);

}  // namespace holoqc
