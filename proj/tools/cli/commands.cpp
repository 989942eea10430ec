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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include "holoqc/geometry.hpp"
#include "holoqc/io.hpp"
#include "holoqc/oracle.hpp"
#include "holoqc/random.hpp"
#include "holoqc/semiclassical.hpp"
#include "holoqc/torus.hpp"

namespace holoqc::cli {
namespace {

namespace fs = std::filesystem;
using io::format_double;

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const HomogeneityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

void require_out_parent(const std::string& path) {
  if (path.empty()) return;
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty() && !fs::is_directory(parent)) {
    throw InputError("output directory does not exist: " + parent.string());
  }
}

void emit(const RunConfig& config, std::ostream& out, const std::string& contents) {
  if (config.out_path.empty()) {
    out << contents;
  } else {
    io::write_file_atomic(config.out_path, contents);
  }
}

std::size_t zero_based_qubit(std::size_t one_based, std::size_t nqubits) {
  if (one_based < 1 || one_based > nqubits) {
    throw InputError("--qubit must be in [1, " + std::to_string(nqubits) + "], got " +
                     std::to_string(one_based));
  }
  return one_based - 1;
}

PauliGenerator generator_of(const RunConfig& config) {
  const auto g = parse_pauli_generator(config.generator);
  if (!g) throw InputError("unknown generator \"" + config.generator + "\" (expected X, Y or Z)");
  return *g;
}

HoloState load_state_or_zero(const RunConfig& config, std::size_t nqubits) {
  if (config.state_path.empty()) return HoloState(nqubits, {{0, Complex{1.0}}});
  auto state = io::parse_state(io::read_file(config.state_path));
  if (state.nqubits() != nqubits) {
    throw InputError("state has " + std::to_string(state.nqubits()) + " qubits, circuit has " +
                     std::to_string(nqubits));
  }
  return state;
}

std::string complex_json(Complex c) {
  return "[" + format_double(c.real()) + ", " + format_double(c.imag()) + "]";
}

std::string bool_json(bool b) { return b ? "true" : "false"; }

}  // namespace

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.circuit_path.empty()) throw InputError("simulate: --circuit is required");
    if (config.out_path.empty()) throw InputError("simulate: --out is required");
    require_out_parent(config.out_path);
    const Circuit circuit = io::parse_circuit(io::read_file(config.circuit_path));
    const HoloState initial = load_state_or_zero(config, circuit.nqubits);

    std::size_t checked = 0;
    std::size_t violations = 0;
    const HoloState final_state = run_circuit_holo(
        circuit, initial, default_gate_table(), [&](std::size_t, const SparsePoly& poly) {
          ++checked;
          if (!check_homogeneity_all(poly)) ++violations;
        });

    std::ostringstream state_text;
    io::write_state(state_text, final_state);
    io::write_file_atomic(config.out_path, state_text.str());

    out << "gates: " << circuit.gates.size() << '\n'
        << "norm_squared: " << format_double(final_state.norm_squared()) << '\n'
        << "homogeneity: " << (violations == 0 ? "ok" : "violated") << " (" << checked
        << " gates checked, " << violations << " violations)\n";
    return violations == 0 ? kExitOk : kExitNumerical;
  });
}

int cmd_diff(const RunConfig& config, std::ostream& out, std::ostream& err, const GateTable& table) {
  return guarded(err, [&] {
    require_out_parent(config.out_path);
    const double tol = config.tol.value_or(1e-9);
    Circuit circuit;
    if (config.circuit_path.empty()) {
      if (config.qubits < 1 || config.qubits > kMaxQubits) throw InputError("diff: --qubits out of range");
      Rng rng(config.seed);
      circuit = random_circuit(config.qubits, config.depth, rng);
    } else {
      circuit = io::parse_circuit(io::read_file(config.circuit_path));
    }
    const HoloState initial = load_state_or_zero(config, circuit.nqubits);

    const HoloState holo = run_circuit_holo(circuit, initial, table);
    const StateVector reference = run_circuit_matrix(circuit, StateVector::from_holo(initial));
    const double deviation = compare_states(reference, holo);
    const bool pass = deviation <= tol;

    std::ostringstream report;
    report << "{\n"
           << "  \"source\": \"" << (config.circuit_path.empty() ? "random" : "file") << "\",\n"
           << "  \"seed\": " << config.seed << ",\n"
           << "  \"n\": " << circuit.nqubits << ",\n"
           << "  \"gates\": " << circuit.gates.size() << ",\n"
           << "  \"max_deviation\": " << format_double(deviation) << ",\n"
           << "  \"tolerance\": " << format_double(tol) << ",\n"
           << "  \"pass\": " << bool_json(pass) << "\n"
           << "}\n";
    emit(config, out, report.str());
    if (!pass) err << "error: deviation " << format_double(deviation) << " exceeds " << format_double(tol) << '\n';
    return pass ? kExitOk : kExitNumerical;
  });
}

int cmd_portrait(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PauliGenerator gen = generator_of(config);
    if (config.out_path.empty()) throw InputError("portrait: --out directory is required");
    if (config.offsets.empty()) throw InputError("portrait: need at least one offset");
    if (config.delta_points < 1) throw InputError("portrait: need at least one relative phase");
    const FlowSpec spec{gen, 0, config.t_final, config.dt};
    validate(spec, 1);
    const fs::path dir(config.out_path);
    if (fs::exists(dir) && !fs::is_directory(dir)) throw InputError("portrait: --out is not a directory");
    fs::create_directories(dir);

    out << "file,sum_phase_0,delta_0\n";
    for (std::size_t i = 0; i < config.offsets.size(); ++i) {
      for (std::size_t j = 0; j < config.delta_points; ++j) {
        const double sum0 = config.offsets[i];
        const double delta0 = -kPi + kTwoPi * static_cast<double>(j) / static_cast<double>(config.delta_points);
        const auto traj = integrate_flow(spec, TorusPoint::single(0.5 * (sum0 + delta0), 0.5 * (sum0 - delta0)),
                                         config.record_every);
        std::ostringstream csv;
        write_trajectory_csv(csv, traj);
        const std::string name = std::string(to_string(gen)) + "_s" + std::to_string(i) + "_d" + std::to_string(j) + ".csv";
        io::write_file_atomic((dir / name).string(), csv.str());
        out << name << ',' << format_double(sum0) << ',' << format_double(delta0) << '\n';
      }
    }
    return kExitOk;
  });
}

int cmd_entanglement(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.state_path.empty()) throw InputError("entanglement: --state is required");
    require_out_parent(config.out_path);
    const HoloState psi = io::parse_state(io::read_file(config.state_path));
    EntanglementOptions options;
    options.seed = config.seed;
    const auto res = entanglement_measure(psi, options);
    const double tol = config.tol.value_or(kSeparabilityTol);

    std::ostringstream report;
    report << "{\n"
           << "  \"n\": " << psi.nqubits() << ",\n"
           << "  \"measure\": " << format_double(res.measure) << ",\n"
           << "  \"max_overlap\": " << format_double(res.max_overlap) << ",\n"
           << "  \"separable\": " << bool_json(res.measure <= tol) << ",\n"
           << "  \"separability_tolerance\": " << format_double(tol) << ",\n"
           << "  \"witness\": [";
    for (std::size_t q = 0; q < res.witness.factors.size(); ++q) {
      const auto& f = res.witness.factors[q];
      report << (q ? ", " : "") << '[' << complex_json(f[0]) << ", " << complex_json(f[1]) << ']';
    }
    report << "],\n  \"best_restart\": " << res.best_restart << ",\n  \"restarts\": [";
    for (std::size_t r = 0; r < res.restarts.size(); ++r) {
      const auto& s = res.restarts[r];
      report << (r ? ",\n" : "\n") << "    {\"seed\": " << s.seed << ", \"iterations\": " << s.iterations
             << ", \"overlap\": " << format_double(s.overlap) << ", \"converged\": " << bool_json(s.converged)
             << ", \"monotone\": " << bool_json(s.monotone) << '}';
    }
    report << "\n  ]\n}\n";
    emit(config, out, report.str());
    return kExitOk;
  });
}

int cmd_holonomy(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_out_parent(config.out_path);
    const bool parametrized = config.loop_path.empty();
    if (parametrized && !config.theta) throw InputError("holonomy: give --theta or --loop");
    const StateLoop loop = parametrized ? bloch_circle_loop(*config.theta, config.samples)
                                        : io::parse_loop(io::read_file(config.loop_path));
    const double gamma = berry_holonomy(loop);

    std::ostringstream report;
    report << "{\n  \"points\": " << loop.size() << ",\n  \"gamma\": " << format_double(gamma);
    bool pass = true;
    if (parametrized) {
      const double reference = bloch_circle_reference(*config.theta);
      const double error = circular_distance(gamma, reference);
      report << ",\n  \"theta\": " << format_double(*config.theta)
             << ",\n  \"reference\": " << format_double(reference)
             << ",\n  \"error\": " << format_double(error);
      if (config.tol) pass = error <= *config.tol;
    }
    report << "\n}\n";
    emit(config, out, report.str());
    if (!pass) err << "error: holonomy differs from the reference by more than " << format_double(*config.tol) << '\n';
    return pass ? kExitOk : kExitNumerical;
  });
}

int cmd_classical_evolve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.point_path.empty()) throw InputError("classical-evolve: --point is required");
    require_out_parent(config.out_path);
    const PauliGenerator gen = generator_of(config);
    const CoherentPoint z0 = io::parse_point(io::read_file(config.point_path));
    const std::size_t n = z0.nqubits();
    const auto h = pauli_hamiltonian(gen, zero_based_qubit(config.qubit, n), n);
    const auto series = classical_series(h, z0, config.t_final, config.dt);
    const double tol = config.tol.value_or(1e-10);

    const double e0 = h.energy(z0);
    const double n0 = z0.z.squaredNorm();
    double energy_drift = 0.0;
    double norm_drift = 0.0;
    std::ostringstream csv;
    csv << 't';
    for (std::size_t k = 0; k < 2 * n; ++k) {
      const char mode = k % 2 == 0 ? 'a' : 'b';
      csv << ",re_" << mode << '_' << k / 2 + 1 << ",im_" << mode << '_' << k / 2 + 1;
    }
    csv << ",energy,norm_squared\n";
    for (const auto& s : series) {
      const double e = h.energy(s.point);
      const double nn = s.point.z.squaredNorm();
      energy_drift = std::max(energy_drift, std::abs(e - e0));
      norm_drift = std::max(norm_drift, std::abs(nn - n0));
      csv << format_double(s.t);
      for (Eigen::Index k = 0; k < s.point.z.size(); ++k) {
        csv << ',' << format_double(s.point.z(k).real()) << ',' << format_double(s.point.z(k).imag());
      }
      csv << ',' << format_double(e) << ',' << format_double(nn) << '\n';
    }
    emit(config, out, csv.str());

    const double scale = std::max(1.0, std::max(std::abs(e0), n0));
    const bool pass = energy_drift <= tol * scale && norm_drift <= tol * scale;
    if (!config.out_path.empty()) {
      out << "samples: " << series.size() << '\n'
          << "energy_drift: " << format_double(energy_drift) << '\n'
          << "norm_drift: " << format_double(norm_drift) << '\n';
    }
    if (!pass) err << "error: conservation drift exceeds " << format_double(tol) << '\n';
    return pass ? kExitOk : kExitNumerical;
  });
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.command == "simulate") return cmd_simulate(config, out, err);
  if (config.command == "diff") return cmd_diff(config, out, err);
  if (config.command == "portrait") return cmd_portrait(config, out, err);
  if (config.command == "entanglement") return cmd_entanglement(config, out, err);
  if (config.command == "holonomy") return cmd_holonomy(config, out, err);
  if (config.command == "classical-evolve") return cmd_classical_evolve(config, out, err);
  err << "error: unknown command \"" << config.command << "\"\n";
  return kExitInput;
}

}  // namespace holoqc::cli
