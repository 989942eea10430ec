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

#include <iosfwd>
#include <string>
#include <string_view>

#include "holoqc/gates.hpp"
#include "holoqc/geometry.hpp"
#include "holoqc/holostate.hpp"
#include "holoqc/semiclassical.hpp"

namespace holoqc::io {

// File formats (JSON). Duplicate object keys are rejected everywhere.
//
//   state:    { "n": N, "amplitudes": { "<bits>": [re, im], ... } }
//   circuit:  { "n": N, "gates": [ { "kind": "CU", "qubits": [1, 2],
//                                    "u": [[[re, im], [re, im]], [[..], [..]]] } ] }
//   loop:     { "n": N, "states": [ { "<bits>": [re, im], ... }, ... ] }
//   point:    { "n": N, "z": [[re, im], ...] }             (2N entries)
//
// Qubit indices in files are 1-based.

HoloState parse_state(std::string_view text);
Circuit parse_circuit(std::string_view text);
StateLoop parse_loop(std::string_view text);
CoherentPoint parse_point(std::string_view text);

void write_state(std::ostream& out, const HoloState& state);
void write_circuit(std::ostream& out, const Circuit& circuit);

/// %.17g formatting used for every floating-point value we emit.
std::string format_double(double value);

std::string read_file(const std::string& path);

/// Writes via a temporary sibling file and renames it into place.
void write_file_atomic(const std::string& path, std::string_view contents);

}  // namespace holoqc::io
