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
#include <map>
#include <string>
#include <vector>

#include "holoqc/common.hpp"

namespace holoqc {

/// Exponent vector over the 2N variables, ordered (a_1, b_1, ..., a_N, b_N).
using Exponent = std::vector<std::uint16_t>;

/// Sparse polynomial in the 2N holomorphic variables of an N-qubit register.
///
/// This is the ambient space gates act on; physical states are the subset
/// that is degree one in every (z_a, z_b) pair. Terms are kept in a sorted
/// map so iteration order (and everything printed from it) is deterministic.
/// Coefficients at or below kZeroTol are never stored.
class SparsePoly {
 public:
  using TermMap = std::map<Exponent, Complex>;

  explicit SparsePoly(std::size_t nqubits);

  static SparsePoly constant(std::size_t nqubits, Complex value);
  static SparsePoly monomial(std::size_t nqubits, Exponent exponent,
                             Complex coeff = 1.0);
  /// The degree-one polynomial sum_k coeffs[k] z_k.
  static SparsePoly linear(std::size_t nqubits, const std::vector<Complex>& coeffs);

  std::size_t nqubits() const { return nqubits_; }
  std::size_t nvars() const { return 2 * nqubits_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Complex coeff(const Exponent& exponent) const;

  /// Accumulates coeff into the term for exponent, pruning if it cancels.
  void add_term(const Exponent& exponent, Complex coeff);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(Complex scalar);

  friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
  friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
  friend SparsePoly operator*(SparsePoly lhs, Complex s) { return lhs *= s; }
  friend SparsePoly operator*(Complex s, SparsePoly rhs) { return rhs *= s; }
  friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs);

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  /// Largest coefficient-wise difference, with missing terms read as zero.
  double max_abs_diff(const SparsePoly& other) const;

  /// Human-readable form, e.g. "(0.6)*za1*za2 + (0.8)*zb1*za2".
  std::string to_string() const;

 private:
  void check_exponent(const Exponent& exponent) const;
  void check_compatible(const SparsePoly& other) const;

  std::size_t nqubits_;
  TermMap terms_;
};

std::string exponent_to_string(const Exponent& exponent);

}  // namespace holoqc
