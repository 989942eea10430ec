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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

using holoqc::cli::RunConfig;

void add_seed(CLI::App* app, RunConfig& c) {
  app->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
}

void add_flow(CLI::App* app, RunConfig& c) {
  app->add_option("--generator", c.generator, "Pauli generator: X, Y or Z")->capture_default_str();
  app->add_option("--dt", c.dt, "Step size")->capture_default_str();
  app->add_option("--t-final", c.t_final, "Integration horizon")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holoqc: holomorphic quantum circuit toolkit"};
  app.require_subcommand(1);
  RunConfig config;
  double tol = 0.0;

  auto* simulate = app.add_subcommand("simulate", "Run a circuit with the holomorphic engine");
  simulate->add_option("--circuit", config.circuit_path, "Circuit file")->required();
  simulate->add_option("--state", config.state_path, "Initial state file (default |0...0>)");
  simulate->add_option("--out", config.out_path, "Output state file")->required();

  auto* diff = app.add_subcommand("diff", "Compare the holomorphic engine with the state-vector oracle");
  diff->add_option("--circuit", config.circuit_path, "Circuit file (default: random circuit)");
  diff->add_option("--state", config.state_path, "Initial state file (default |0...0>)");
  diff->add_option("--out", config.out_path, "Report file (default stdout)");
  diff->add_option("--tol", tol, "Maximum allowed deviation (default 1e-9)");
  diff->add_option("--qubits", config.qubits, "Random circuit width")->capture_default_str();
  diff->add_option("--depth", config.depth, "Random circuit depth")->capture_default_str();
  add_seed(diff, config);

  auto* portrait = app.add_subcommand("portrait", "Write torus flow trajectories for a Pauli generator");
  add_flow(portrait, config);
  portrait->add_option("--out", config.out_path, "Output directory")->required();
  portrait->add_option("--offsets", config.offsets, "Initial sum-phase offsets")->capture_default_str();
  portrait->add_option("--deltas", config.delta_points, "Relative phases per offset")->capture_default_str();
  portrait->add_option("--record-every", config.record_every, "Keep every k-th step")->capture_default_str();

  auto* entanglement = app.add_subcommand("entanglement", "Geometric entanglement report for a state");
  entanglement->add_option("--state", config.state_path, "State file")->required();
  entanglement->add_option("--out", config.out_path, "Report file (default stdout)");
  entanglement->add_option("--tol", tol, "Separability threshold (default 1e-6)");
  add_seed(entanglement, config);

  auto* holonomy = app.add_subcommand("holonomy", "Discrete Berry phase of a closed loop of states");
  holonomy->add_option("--theta", config.theta, "Polar angle of a Bloch circle loop");
  holonomy->add_option("--samples", config.samples, "Points on the Bloch circle")->capture_default_str();
  holonomy->add_option("--loop", config.loop_path, "Explicit loop file");
  holonomy->add_option("--out", config.out_path, "Report file (default stdout)");
  holonomy->add_option("--tol", tol, "Fail if the error against the reference exceeds this");

  auto* classical = app.add_subcommand("classical-evolve", "Evolve a coherent point under a Pauli Hamiltonian");
  add_flow(classical, config);
  classical->add_option("--point", config.point_path, "Coherent point file")->required();
  classical->add_option("--qubit", config.qubit, "Qubit (1-based)")->capture_default_str();
  classical->add_option("--out", config.out_path, "CSV file (default stdout)");
  classical->add_option("--tol", tol, "Relative conservation tolerance (default 1e-10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : holoqc::cli::kExitInput;
  }

  for (auto* sub : app.get_subcommands()) {
    config.command = sub->get_name();
    const auto* opt = sub->get_option_no_throw("--tol");
    if (opt != nullptr && opt->count() > 0) config.tol = tol;
  }
  return holoqc::cli::dispatch(config, std::cout, std::cerr);
}
