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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holoqc {

using Complex = std::complex<double>;

/// Coefficients with magnitude at or below this are dropped from polynomials,
/// operators and states.
inline constexpr double kZeroTol = 1e-14;

/// A state is flagged normalized when |sum |c|^2 - 1| is below this.
inline constexpr double kNormTol = 1e-10;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Largest register handled by the dense paths (oracle, geometry).
inline constexpr std::size_t kMaxQubits = 24;

/// Bad input: malformed files, violated preconditions, out-of-range indices.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A polynomial left the physical (degree one per pair) subspace.
class HomogeneityError : public InputError {
 public:
  using InputError::InputError;
};

/// Numerical breakdown: singular points, vanishing overlaps.
class NumericalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The one place that fixes how qubits map onto holomorphic variables.
///
/// Qubit q (0-based) owns the variable pair (z_{a_q}, z_{b_q}) stored at
/// positions 2q and 2q+1 of every exponent vector. Bit value 0 selects
/// z_a (|0>, spin up), bit value 1 selects z_b (|1>, spin down). Basis
/// indices are big-endian: qubit 0 is the most significant bit.
struct BasisConvention {
  static constexpr std::size_t var_a(std::size_t qubit) { return 2 * qubit; }
  static constexpr std::size_t var_b(std::size_t qubit) { return 2 * qubit + 1; }
  static constexpr std::size_t var(std::size_t qubit, unsigned bit) {
    return 2 * qubit + bit;
  }
  static constexpr unsigned bit(std::uint64_t index, std::size_t qubit,
                                std::size_t nqubits) {
    return static_cast<unsigned>((index >> (nqubits - 1 - qubit)) & 1U);
  }
  static constexpr std::uint64_t mask(std::size_t qubit, std::size_t nqubits) {
    return std::uint64_t{1} << (nqubits - 1 - qubit);
  }
};

enum class PauliGenerator { X, Y, Z };

std::string_view to_string(PauliGenerator g);
std::optional<PauliGenerator> parse_pauli_generator(std::string_view name);

}  // namespace holoqc
