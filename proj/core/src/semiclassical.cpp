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

#include "holoqc/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace holoqc {

namespace {

void check_point(const QuadraticHamiltonian& h, const CoherentPoint& p) {
  if (p.z.size() != h.matrix().rows()) {
    throw InputError("coherent point has " + std::to_string(p.z.size()) +
                     " modes, Hamiltonian expects " + std::to_string(h.matrix().rows()));
  }
  if (!p.z.allFinite()) throw InputError("coherent point has non-finite entries");
}

}  // namespace

QuadraticHamiltonian::QuadraticHamiltonian(Eigen::MatrixXcd h) : h_(std::move(h)) {
  if (h_.rows() == 0 || h_.rows() != h_.cols() || h_.rows() % 2 != 0) {
    throw InputError("QuadraticHamiltonian: matrix must be square of even size");
  }
  if ((h_ - h_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InputError("QuadraticHamiltonian: matrix is not Hermitian within 1e-12");
  }
}

double QuadraticHamiltonian::energy(const CoherentPoint& point) const {
  check_point(*this, point);
  return std::real(point.z.dot(h_ * point.z));  // dot() conjugates the left operand
}

Eigen::Matrix2cd pauli_matrix(PauliGenerator generator) {
  const Complex i{0.0, 1.0};
  Eigen::Matrix2cd m;
  switch (generator) {
    case PauliGenerator::X: m << 0, 1, 1, 0; break;
    case PauliGenerator::Y: m << 0, -i, i, 0; break;
    case PauliGenerator::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

QuadraticHamiltonian pauli_hamiltonian(PauliGenerator generator, std::size_t qubit,
                                       std::size_t nqubits) {
  if (nqubits == 0 || qubit >= nqubits) throw InputError("pauli_hamiltonian: qubit out of range");
  const auto nv = static_cast<Eigen::Index>(2 * nqubits);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(nv, nv);
  h.block<2, 2>(static_cast<Eigen::Index>(2 * qubit), static_cast<Eigen::Index>(2 * qubit)) =
      pauli_matrix(generator);
  return QuadraticHamiltonian(std::move(h));
}

CoherentPoint evolve_classical(const QuadraticHamiltonian& h, const CoherentPoint& z0, double t) {
  check_point(h, z0);
  if (!(t >= 0.0) || !std::isfinite(t)) throw InputError("evolve_classical: t must be >= 0");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.matrix());
  const Eigen::VectorXd& lambda = es.eigenvalues();
  const Eigen::MatrixXcd& v = es.eigenvectors();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) phases(k) = std::polar(1.0, -lambda(k) * t);
  return {v * phases.asDiagonal() * (v.adjoint() * z0.z)};
}

CoherentPoint evolve_stepped(const HamiltonianGradient& grad, const CoherentPoint& z0, double t,
                             double dt) {
  if (!(t >= 0.0) || !(dt > 0.0)) throw InputError("evolve_stepped: need t >= 0 and dt > 0");
  const Complex minus_i{0.0, -1.0};
  auto f = [&](const Eigen::VectorXcd& z) -> Eigen::VectorXcd { return minus_i * grad(z); };
  Eigen::VectorXcd z = z0.z;
  const auto steps = static_cast<std::size_t>(std::ceil(t / dt - 1e-9));
  for (std::size_t k = 1; k <= steps; ++k) {
    const double h = std::min(static_cast<double>(k) * dt, t) -
                     std::min(static_cast<double>(k - 1) * dt, t);
    const Eigen::VectorXcd k1 = f(z);
    const Eigen::VectorXcd k2 = f(z + 0.5 * h * k1);
    const Eigen::VectorXcd k3 = f(z + 0.5 * h * k2);
    const Eigen::VectorXcd k4 = f(z + h * k3);
    z += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return {z};
}

CoherentPoint evolve_stepped(const QuadraticHamiltonian& h, const CoherentPoint& z0, double t,
                             double dt) {
  check_point(h, z0);
  const Eigen::MatrixXcd& m = h.matrix();
  return evolve_stepped([&m](const Eigen::VectorXcd& z) -> Eigen::VectorXcd { return m * z; },
                        z0, t, dt);
}

double compare_with_gate(PauliGenerator generator, std::size_t qubit, std::size_t nqubits,
                         double t, std::size_t samples, std::uint64_t seed) {
  const auto h = pauli_hamiltonian(generator, qubit, nqubits);
  // sigma^2 = 1, so exp(-i sigma t) = cos t - i sin t sigma.
  const Complex minus_i{0.0, -1.0};
  const Eigen::Matrix2cd gate = std::cos(t) * Eigen::Matrix2cd::Identity() +
                                minus_i * std::sin(t) * pauli_matrix(generator);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const auto nv = static_cast<Eigen::Index>(2 * nqubits);
  const auto off = static_cast<Eigen::Index>(2 * qubit);
  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    CoherentPoint z0{Eigen::VectorXcd(nv)};
    for (Eigen::Index k = 0; k < nv; ++k) z0.z(k) = Complex{gauss(rng), gauss(rng)};
    const auto evolved = evolve_classical(h, z0, t);
    Eigen::VectorXcd expected = z0.z;
    expected.segment<2>(off) = gate * z0.z.segment<2>(off);
    worst = std::max(worst, (evolved.z - expected).norm());
  }
  return worst;
}

std::vector<ClassicalSample> classical_series(const QuadraticHamiltonian& h,
                                              const CoherentPoint& z0, double t_final, double dt) {
  if (!(t_final >= 0.0) || !(dt > 0.0)) throw InputError("classical_series: need t_final >= 0, dt > 0");
  std::vector<ClassicalSample> out;
  out.push_back({0.0, z0});
  const auto steps = static_cast<std::size_t>(std::ceil(t_final / dt - 1e-9));
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t = std::min(static_cast<double>(k) * dt, t_final);
    out.push_back({t, evolve_classical(h, z0, t)});
  }
  return out;
}

CoherentPoint apply_hadamard_modes(const CoherentPoint& point, std::size_t qubit) {
  if (2 * qubit + 1 >= static_cast<std::size_t>(point.z.size())) {
    throw InputError("apply_hadamard_modes: qubit out of range");
  }
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << s, s, s, -s;
  CoherentPoint out = point;
  const auto off = static_cast<Eigen::Index>(2 * qubit);
  out.z.segment<2>(off) = h * point.z.segment<2>(off);
  return out;
}

}  // namespace holoqc
