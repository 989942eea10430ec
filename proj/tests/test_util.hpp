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

#include <cmath>
#include <complex>
#include <string>

#include <gtest/gtest.h>

#include "holoqc/holostate.hpp"

namespace holoqc::testing {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline ::testing::AssertionResult ComplexNear(Complex actual, Complex expected, double tol) {
  if (std::abs(actual - expected) <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure()
         << "got (" << actual.real() << ", " << actual.imag() << "), expected ("
         << expected.real() << ", " << expected.imag() << "), |diff| = "
         << std::abs(actual - expected);
}

inline HoloState bell_state() {
  return HoloState(2, {{0b00, Complex{kInvSqrt2}}, {0b11, Complex{kInvSqrt2}}});
}

/// Exponent vector from a compact spec like "a1 b2" or "a1^2".
inline Exponent exps(std::size_t nqubits, const std::string& spec) {
  Exponent e(2 * nqubits, 0);
  std::size_t i = 0;
  while (i < spec.size()) {
    if (spec[i] == ' ') {
      ++i;
      continue;
    }
    const bool is_b = spec[i] == 'b';
    std::size_t j = i + 1;
    std::size_t q = 0;
    while (j < spec.size() && std::isdigit(static_cast<unsigned char>(spec[j]))) q = q * 10 + (spec[j++] - '0');
    unsigned power = 1;
    if (j < spec.size() && spec[j] == '^') {
      power = 0;
      ++j;
      while (j < spec.size() && std::isdigit(static_cast<unsigned char>(spec[j]))) power = power * 10 + (spec[j++] - '0');
    }
    e[2 * (q - 1) + (is_b ? 1 : 0)] += static_cast<std::uint16_t>(power);
    i = j;
  }
  return e;
}

inline SparsePoly mono(std::size_t nqubits, const std::string& spec, Complex c = 1.0) {
  return SparsePoly::monomial(nqubits, exps(nqubits, spec), c);
}

}  // namespace holoqc::testing
