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

#include "holoqc/torus.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>

namespace holoqc {

namespace {

// sin(pi t) and cos(pi t) with exact zeros at the integers / half-integers.
// The octant reductions below are exact in floating point.
double sinpi(double t) {
  double r = std::remainder(t, 2.0);  // [-1, 1]
  const double sign = r < 0 ? -1.0 : 1.0;
  const double x = std::abs(r);
  double v;
  if (x <= 0.25) {
    v = std::sin(kPi * x);
  } else if (x <= 0.75) {
    v = std::cos(kPi * (0.5 - x));
  } else {
    v = std::sin(kPi * (1.0 - x));
  }
  return sign * v;
}

double cospi(double t) {
  const double x = std::abs(std::remainder(t, 2.0));
  if (x <= 0.25) return std::cos(kPi * x);
  if (x <= 0.75) return std::sin(kPi * (0.5 - x));
  return -std::cos(kPi * (1.0 - x));
}

std::array<double, 2> pair_velocity(PauliGenerator generator, double delta) {
  switch (generator) {
    case PauliGenerator::Z:
      return {-1.0, 1.0};
    case PauliGenerator::X: {
      const double c = cospi(delta / kPi);
      return {c, -c};
    }
    case PauliGenerator::Y: {
      const double s = sinpi(delta / kPi);
      return {s, -s};
    }
  }
  return {0.0, 0.0};
}

void check_qubit(std::size_t qubit, std::size_t nqubits) {
  if (qubit >= nqubits) {
    throw InputError("qubit " + std::to_string(qubit + 1) + " out of range for " +
                     std::to_string(nqubits) + " qubits");
  }
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double wrap_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double wrap_signed(double angle) {
  const double r = wrap_angle(angle);
  return r > kPi ? r - kTwoPi : r;
}

double circular_distance(double a, double b) { return std::abs(wrap_signed(a - b)); }

TorusPoint::TorusPoint(std::vector<double> phases) : phases_(std::move(phases)) {
  if (phases_.empty() || phases_.size() % 2 != 0) {
    throw InputError("TorusPoint: need an even, nonzero number of phases");
  }
  for (auto& p : phases_) {
    if (!std::isfinite(p)) throw InputError("TorusPoint: non-finite phase");
    p = wrap_angle(p);
  }
}

TorusPoint TorusPoint::single(double phi_a, double phi_b) { return TorusPoint({phi_a, phi_b}); }

double TorusPoint::delta(std::size_t qubit) const {
  return wrap_signed(phase_a(qubit) - phase_b(qubit));
}

double TorusPoint::sum(std::size_t qubit) const { return phase_a(qubit) + phase_b(qubit); }

double pauli_hamiltonian_value(PauliGenerator generator, double delta) {
  switch (generator) {
    case PauliGenerator::Z: return delta;
    case PauliGenerator::X: return std::sin(delta);
    case PauliGenerator::Y: return -std::cos(delta);
  }
  return 0.0;
}

std::array<double, 2> vector_field(PauliGenerator generator, double phi_a, double phi_b) {
  return pair_velocity(generator, phi_a - phi_b);
}

std::array<double, 2> vector_field(PauliGenerator generator, const TorusPoint& point,
                                   std::size_t qubit) {
  check_qubit(qubit, point.nqubits());
  return pair_velocity(generator, point.delta(qubit));
}

void validate(const FlowSpec& spec, std::size_t nqubits) {
  check_qubit(spec.qubit, nqubits);
  if (!(spec.dt > 0.0) || !std::isfinite(spec.dt)) throw InputError("flow: dt must be positive");
  if (!(spec.t_final >= 0.0) || !std::isfinite(spec.t_final)) {
    throw InputError("flow: t_final must be nonnegative");
  }
}

namespace {

// One RK4 step on an unwrapped (phi_a, phi_b) pair.
std::array<double, 2> rk4_step(PauliGenerator g, std::array<double, 2> p, double h) {
  auto f = [g](double a, double b) { return vector_field(g, a, b); };
  const auto k1 = f(p[0], p[1]);
  const auto k2 = f(p[0] + 0.5 * h * k1[0], p[1] + 0.5 * h * k1[1]);
  const auto k3 = f(p[0] + 0.5 * h * k2[0], p[1] + 0.5 * h * k2[1]);
  const auto k4 = f(p[0] + h * k3[0], p[1] + h * k3[1]);
  return {p[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
          p[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

std::size_t step_count(const FlowSpec& spec) {
  const double ratio = spec.t_final / spec.dt;
  return static_cast<std::size_t>(std::ceil(ratio - 1e-9));
}

}  // namespace

Trajectory integrate_flow(const FlowSpec& spec, const TorusPoint& start,
                          std::size_t record_every) {
  validate(spec, start.nqubits());
  if (record_every == 0) record_every = 1;

  std::vector<double> phases = start.phases();
  const std::size_t n = start.nqubits();
  const std::size_t ia = 2 * spec.qubit;

  Trajectory traj;
  auto record = [&](double t) {
    std::vector<double> sums(n);
    for (std::size_t q = 0; q < n; ++q) sums[q] = phases[2 * q] + phases[2 * q + 1];
    traj.samples.push_back({t, TorusPoint(phases), std::move(sums)});
  };

  record(0.0);
  const std::size_t steps = step_count(spec);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t = std::min(static_cast<double>(k) * spec.dt, spec.t_final);
    const double h = t - std::min(static_cast<double>(k - 1) * spec.dt, spec.t_final);
    const auto next = rk4_step(spec.generator, {phases[ia], phases[ia + 1]}, h);
    phases[ia] = next[0];
    phases[ia + 1] = next[1];
    if (k % record_every == 0 || k == steps) record(t);
  }
  return traj;
}

std::array<double, 2> flow_map(const FlowSpec& spec, std::array<double, 2> phases) {
  validate(spec, spec.qubit + 1);
  const std::size_t steps = step_count(spec);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t = std::min(static_cast<double>(k) * spec.dt, spec.t_final);
    const double h = t - std::min(static_cast<double>(k - 1) * spec.dt, spec.t_final);
    phases = rk4_step(spec.generator, phases, h);
  }
  return phases;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
  if (trajectory.samples.empty()) return;
  const std::size_t n = trajectory.samples.front().point.nqubits();
  out << "t";
  for (std::size_t q = 1; q <= n; ++q) out << ",phi_a_" << q << ",phi_b_" << q;
  for (std::size_t q = 1; q <= n; ++q) out << ",sum_phase_" << q;
  out << '\n';
  for (const auto& s : trajectory.samples) {
    out << fmt17(s.t);
    for (double p : s.point.phases()) out << ',' << fmt17(p);
    for (double sp : s.sum_phase) out << ',' << fmt17(sp);
    out << '\n';
  }
}

double poisson_bracket(const TorusField& f, const TorusField& g, double phi_a, double phi_b,
                       double step) {
  auto d_a = [&](const TorusField& h) {
    return (h(phi_a + step, phi_b) - h(phi_a - step, phi_b)) / (2.0 * step);
  };
  auto d_b = [&](const TorusField& h) {
    return (h(phi_a, phi_b + step) - h(phi_a, phi_b - step)) / (2.0 * step);
  };
  return d_a(f) * d_b(g) - d_b(f) * d_a(g);
}

TorusPoint hadamard_torus_map(const TorusPoint& point, std::size_t qubit) {
  check_qubit(qubit, point.nqubits());
  const double d = point.delta(qubit);
  if (circular_distance(d, 0.0) < kSingularityGuard || circular_distance(d, kPi) < kSingularityGuard) {
    throw NumericalError("hadamard_torus_map: relative phase " + fmt17(d) +
                         " is at a singular point (0 or pi)");
  }
  const double half_sum = point.phase_a(qubit) - 0.5 * d;
  const std::complex<double> w = std::polar(1.0, d);
  std::vector<double> phases = point.phases();
  phases[2 * qubit] = half_sum + std::arg(1.0 + w);
  phases[2 * qubit + 1] = half_sum + std::arg(1.0 - w);
  return TorusPoint(std::move(phases));
}

double jacobian_det(const TorusMap2& map, std::array<double, 2> point, double step) {
  double jac[2][2];
  for (int k = 0; k < 2; ++k) {
    auto plus = point;
    auto minus = point;
    plus[k] += step;
    minus[k] -= step;
    const auto fp = map(plus);
    const auto fm = map(minus);
    for (int r = 0; r < 2; ++r) jac[r][k] = wrap_signed(fp[r] - fm[r]) / (2.0 * step);
  }
  return jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
}

double hadamard_jacobian_det(double phi_a, double phi_b) {
  const double d = wrap_signed(phi_a - phi_b);
  if (circular_distance(d, 0.0) < kJacobianGuard || circular_distance(d, kPi) < kJacobianGuard) {
    throw InputError("hadamard_jacobian_det: point within 1e-3 of a singular relative phase");
  }
  auto map = [](std::array<double, 2> p) -> std::array<double, 2> {
    const auto out = hadamard_torus_map(TorusPoint::single(p[0], p[1]), 0);
    return {out.phase_a(0), out.phase_b(0)};
  };
  return jacobian_det(map, {phi_a, phi_b});
}

TorusPoint swap_torus(const TorusPoint& point, std::size_t j, std::size_t k) {
  check_qubit(j, point.nqubits());
  check_qubit(k, point.nqubits());
  if (j == k) throw InputError("swap_torus: qubits must be distinct");
  std::vector<double> phases = point.phases();
  std::swap(phases[2 * j], phases[2 * k]);
  std::swap(phases[2 * j + 1], phases[2 * k + 1]);
  return TorusPoint(std::move(phases));
}

}  // namespace holoqc
