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

#include "holoqc/common.hpp"

namespace holoqc {

std::string_view to_string(PauliGenerator g) {
  switch (g) {
    case PauliGenerator::X: return "X";
    case PauliGenerator::Y: return "Y";
    case PauliGenerator::Z: return "Z";
  }
  return "?";
}

std::optional<PauliGenerator> parse_pauli_generator(std::string_view name) {
  if (name == "X" || name == "x") return PauliGenerator::X;
  if (name == "Y" || name == "y") return PauliGenerator::Y;
  if (name == "Z" || name == "z") return PauliGenerator::Z;
  return std::nullopt;
}

}  // namespace holoqc
