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

#include "holoqc/geometry.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "holoqc/random.hpp"
#include "holoqc/torus.hpp"

namespace holoqc {

namespace {

void require_normalized(const HoloState& psi, const char* who) {
  if (!psi.is_normalized()) {
    throw InputError(std::string(who) + ": state is not normalized (norm^2 = " +
                     std::to_string(psi.norm_squared()) + ")");
  }
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

// w[s] = sum over basis indices with bit(qubit) == s of
//        conj(prod_{k != qubit} v_k[bit_k]) * psi[i]
std::array<Complex, 2> partial_overlap(const std::vector<Complex>& psi,
                                       const std::vector<std::array<Complex, 2>>& factors,
                                       std::size_t qubit) {
  const std::size_t n = factors.size();
  std::array<Complex, 2> w{};
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (psi[i] == Complex{}) continue;
    Complex weight = psi[i];
    for (std::size_t k = 0; k < n; ++k) {
      if (k == qubit) continue;
      weight *= std::conj(factors[k][BasisConvention::bit(i, k, n)]);
    }
    w[BasisConvention::bit(i, qubit, n)] += weight;
  }
  return w;
}

std::array<Complex, 2> normalized(std::array<Complex, 2> v) {
  const double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  return {v[0] / norm, v[1] / norm};
}

RestartStats run_restart(const std::vector<Complex>& psi, std::size_t n,
                         const EntanglementOptions& options, std::uint64_t seed,
                         std::vector<std::array<Complex, 2>>& factors) {
  Rng rng(seed);
  std::normal_distribution<double> gauss;
  factors.assign(n, {});
  for (auto& f : factors) f = normalized({Complex{gauss(rng), gauss(rng)}, Complex{gauss(rng), gauss(rng)}});

  RestartStats stats;
  stats.seed = seed;
  double overlap = std::abs(dot(ProductState{factors}.to_dense(), psi));
  stats.overlap = overlap;

  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    const double sweep_start = overlap;
    for (std::size_t j = 0; j < n; ++j) {
      const auto w = partial_overlap(psi, factors, j);
      const double norm_w = std::sqrt(std::norm(w[0]) + std::norm(w[1]));
      if (norm_w <= kZeroTol) continue;  // factor j is currently irrelevant
      factors[j] = {w[0] / norm_w, w[1] / norm_w};
      if (norm_w < overlap - 1e-14) stats.monotone = false;
      overlap = norm_w;
    }
    stats.iterations = it + 1;
    if (overlap - sweep_start < options.gain_tol) {
      stats.converged = true;
      break;
    }
  }
  stats.overlap = overlap;
  return stats;
}

}  // namespace

double fubini_study_distance(std::span<const Complex> psi, std::span<const Complex> phi) {
  if (psi.size() != phi.size()) throw InputError("fubini_study_distance: dimension mismatch");
  const double na = std::sqrt(std::real(dot(psi, psi)));
  const double nb = std::sqrt(std::real(dot(phi, phi)));
  if (na <= kZeroTol || nb <= kZeroTol) throw InputError("fubini_study_distance: zero vector");
  const Complex o = dot(psi, phi);
  const Complex align = std::abs(o) > 0.0 ? std::conj(o) / std::abs(o) : Complex{1.0};
  double chord2 = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    chord2 += std::norm(psi[i] / na - align * phi[i] / nb);
  }
  return 2.0 * std::asin(std::min(1.0, 0.5 * std::sqrt(chord2)));
}

double fubini_study_distance(const HoloState& psi, const HoloState& phi) {
  if (psi.nqubits() != phi.nqubits()) throw InputError("fubini_study_distance: qubit count mismatch");
  const auto a = psi.to_dense();
  const auto b = phi.to_dense();
  return fubini_study_distance(a, b);
}

double fidelity(const HoloState& psi, const HoloState& phi) {
  require_normalized(psi, "fidelity");
  require_normalized(phi, "fidelity");
  return std::norm(sb_inner_product(to_poly(psi), to_poly(phi)));
}

std::vector<Complex> ProductState::to_dense() const {
  const std::size_t n = factors.size();
  std::vector<Complex> out(std::size_t{1} << n);
  for (std::size_t i = 0; i < out.size(); ++i) {
    Complex amp{1.0};
    for (std::size_t k = 0; k < n; ++k) amp *= factors[k][BasisConvention::bit(i, k, n)];
    out[i] = amp;
  }
  return out;
}

HoloState ProductState::to_state() const { return encode_state(to_dense()); }

EntanglementResult entanglement_measure(const HoloState& psi, const EntanglementOptions& options) {
  require_normalized(psi, "entanglement_measure");
  if (options.restarts == 0) throw InputError("entanglement_measure: need at least one restart");
  const std::size_t n = psi.nqubits();
  const auto dense = psi.to_dense();

  EntanglementResult result;
  std::vector<std::array<Complex, 2>> factors;
  std::vector<std::array<Complex, 2>> best;
  for (std::size_t r = 0; r < options.restarts; ++r) {
    auto stats = run_restart(dense, n, options, options.seed + r, factors);
    // Strict comparison keeps the lowest restart index on ties.
    if (r == 0 || stats.overlap > result.restarts[result.best_restart].overlap) {
      result.best_restart = r;
      best = factors;
    }
    result.restarts.push_back(stats);
  }
  result.witness = ProductState{best};
  const auto witness = result.witness.to_dense();
  result.max_overlap = std::min(1.0, std::abs(dot(witness, dense)));
  result.measure = fubini_study_distance(dense, witness);
  return result;
}

SeparabilityResult is_separable(const HoloState& psi, double tol, const EntanglementOptions& options) {
  const auto em = entanglement_measure(psi, options);
  SeparabilityResult out;
  out.measure = em.measure;
  out.separable = em.measure <= tol;
  if (out.separable) out.witness = em.witness;
  return out;
}

SchmidtResult schmidt_oracle(const HoloState& psi) {
  if (psi.nqubits() != 2) throw InputError("schmidt_oracle: needs exactly two qubits");
  require_normalized(psi, "schmidt_oracle");
  Eigen::Matrix2cd c;
  c << psi.amplitude(0), psi.amplitude(1), psi.amplitude(2), psi.amplitude(3);
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(c);
  const double lambda = std::min(1.0, svd.singularValues()(0));
  return {lambda, std::acos(lambda)};
}

StateLoop::StateLoop(std::vector<HoloState> states) : states_(std::move(states)) {
  if (states_.empty()) throw InputError("StateLoop: no states");
  const std::size_t n = states_.front().nqubits();
  for (const auto& s : states_) {
    if (s.nqubits() != n) throw InputError("StateLoop: mixed qubit counts");
    if (s.norm_squared() <= kZeroTol) throw InputError("StateLoop: zero state");
  }
  if (states_.size() > 1 && fubini_study_distance(states_.front(), states_.back()) <= 1e-10) {
    states_.pop_back();
  }
}

double berry_holonomy(const StateLoop& loop) {
  const auto& states = loop.states();
  const std::size_t m = states.size();
  if (m < kMinLoopPoints) {
    throw InputError("berry_holonomy: loop has " + std::to_string(m) + " points, need at least " +
                     std::to_string(kMinLoopPoints));
  }
  Complex product{1.0};
  for (std::size_t k = 0; k < m; ++k) {
    const auto& a = states[k];
    const auto& b = states[(k + 1) % m];
    const Complex o = inner_product(a, b);
    const double scale = std::sqrt(a.norm_squared() * b.norm_squared());
    if (std::abs(o) <= 1e-12 * scale) {
      throw NumericalError("berry_holonomy: overlap between loop points " + std::to_string(k) +
                           " and " + std::to_string((k + 1) % m) + " vanishes; loop too coarse");
    }
    product *= o / std::abs(o);
    product /= std::abs(product);
  }
  return wrap_signed(-std::arg(product));
}

StateLoop bloch_circle_loop(double theta, std::size_t points) {
  if (points == 0) throw InputError("bloch_circle_loop: need at least one point");
  std::vector<HoloState> states;
  states.reserve(points);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  for (std::size_t k = 0; k < points; ++k) {
    const double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(points);
    const std::array<Complex, 2> amps{Complex{c}, std::polar(s, phi)};
    states.push_back(encode_state(amps));
  }
  return StateLoop(std::move(states));
}

double bloch_circle_reference(double theta) {
  return wrap_signed(-kPi * (1.0 - std::cos(theta)));
}

}  // namespace holoqc
