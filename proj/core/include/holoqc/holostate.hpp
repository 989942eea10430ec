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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holoqc/common.hpp"
#include "holoqc/sparse_poly.hpp"

namespace holoqc {

/// N-qubit state as the coefficients c_s of its holomorphic polynomial
///   f(z) = sum_s c_s prod_j z_{a_j}^{1-s_j} z_{b_j}^{s_j}.
///
/// Amplitudes are keyed by big-endian basis index. Zero amplitudes are not
/// stored. The normalized flag is computed on construction and never acted
/// upon: nothing in the library rescales a state behind the caller's back.
class HoloState {
 public:
  using AmplitudeMap = std::map<std::uint64_t, Complex>;

  explicit HoloState(std::size_t nqubits, AmplitudeMap amplitudes = {});

  /// |s> for a bit string such as "01".
  static HoloState basis(std::string_view bits);

  std::size_t nqubits() const { return nqubits_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << nqubits_; }
  const AmplitudeMap& amplitudes() const { return amplitudes_; }
  bool is_normalized() const { return normalized_; }

  Complex amplitude(std::uint64_t index) const;
  Complex amplitude(std::string_view bits) const;
  double norm_squared() const;

  std::vector<Complex> to_dense() const;

  friend bool operator==(const HoloState& a, const HoloState& b) {
    return a.nqubits_ == b.nqubits_ && a.amplitudes_ == b.amplitudes_;
  }

 private:
  std::size_t nqubits_;
  AmplitudeMap amplitudes_;
  bool normalized_;
};

std::string index_to_bits(std::uint64_t index, std::size_t nqubits);
std::uint64_t bits_to_index(std::string_view bits);

/// Single monomial prod_j z_{a_j}^{1-s_j} z_{b_j}^{s_j}.
SparsePoly encode_basis(std::string_view bits);

/// Dense big-endian amplitude vector to HoloState. Length must be 2^N.
HoloState encode_state(std::span<const Complex> amplitudes);

SparsePoly to_poly(const HoloState& state);

/// Reads c_s back off a physical polynomial; throws HomogeneityError naming
/// the first term outside the degree-one-per-pair lattice.
HoloState from_poly(const SparsePoly& poly);

/// True iff every term has e_{a_q} + e_{b_q} == 1 (Euler eigenvalue 1).
bool check_homogeneity(const SparsePoly& poly, std::size_t qubit);
bool check_homogeneity_all(const SparsePoly& poly);

/// Segal-Bargmann inner product <f, g> = sum_e conj(f_e) g_e prod_k e_k!.
Complex sb_inner_product(const SparsePoly& f, const SparsePoly& g);

/// Plain Hermitian dot product of amplitude maps, <a|b>.
Complex inner_product(const HoloState& a, const HoloState& b);

}  // namespace holoqc
