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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "holoqc/gates.hpp"

namespace holoqc::cli {

enum ExitCode : int { kExitOk = 0, kExitNumerical = 1, kExitInput = 2 };

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct RunConfig {
  std::string command;

  std::string circuit_path;
  std::string state_path;
  std::string loop_path;
  std::string point_path;
  std::string out_path;

  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tol;

  // Random-circuit shape for `diff` without --circuit.
  std::size_t qubits = 4;
  std::size_t depth = 30;

  // Flows: generator name, 1-based qubit, step and horizon.
  std::string generator = "Z";
  std::size_t qubit = 1;
  double dt = 1e-2;
  double t_final = 10.0;

  // Portrait grid: sum-phase offsets times evenly spaced relative phases.
  std::vector<double> offsets = {-1.2, -0.6, 0.0, 0.6, 1.2};
  std::size_t delta_points = 8;
  std::size_t record_every = 10;

  // Holonomy: Bloch circle at polar angle theta with `samples` points.
  std::optional<double> theta;
  std::size_t samples = 2000;
};

/// Each command writes its primary output to `out_path` (atomically) or to
/// `out` when no path is given, and diagnostics to `err`.
int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_diff(const RunConfig& config, std::ostream& out, std::ostream& err,
             const GateTable& table = default_gate_table());
int cmd_portrait(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_entanglement(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_holonomy(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_classical_evolve(const RunConfig& config, std::ostream& out, std::ostream& err);

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace holoqc::cli
