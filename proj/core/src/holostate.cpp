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

#include "holoqc/holostate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace holoqc {

namespace {

void check_nqubits(std::size_t nqubits) {
  if (nqubits == 0 || nqubits > 63) {
    throw InputError("qubit count must be in [1, 63], got " + std::to_string(nqubits));
  }
}

double factorial(unsigned k) {
  double f = 1.0;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

HoloState::HoloState(std::size_t nqubits, AmplitudeMap amplitudes) : nqubits_(nqubits) {
  check_nqubits(nqubits);
  const std::uint64_t dim = std::uint64_t{1} << nqubits;
  for (const auto& [index, c] : amplitudes) {
    if (index >= dim) {
      throw InputError("basis index " + std::to_string(index) + " out of range for " +
                       std::to_string(nqubits) + " qubits");
    }
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InputError("non-finite amplitude at " + index_to_bits(index, nqubits));
    }
    if (std::abs(c) > kZeroTol) amplitudes_.emplace(index, c);
  }
  normalized_ = std::abs(norm_squared() - 1.0) < kNormTol;
}

HoloState HoloState::basis(std::string_view bits) {
  return HoloState(bits.size(), {{bits_to_index(bits), Complex{1.0}}});
}

Complex HoloState::amplitude(std::uint64_t index) const {
  auto it = amplitudes_.find(index);
  return it == amplitudes_.end() ? Complex{} : it->second;
}

Complex HoloState::amplitude(std::string_view bits) const {
  if (bits.size() != nqubits_) throw InputError("bit string length does not match qubit count");
  return amplitude(bits_to_index(bits));
}

double HoloState::norm_squared() const {
  double s = 0.0;
  for (const auto& [index, c] : amplitudes_) s += std::norm(c);
  return s;
}

std::vector<Complex> HoloState::to_dense() const {
  if (nqubits_ > kMaxQubits) throw InputError("state too large for a dense vector");
  std::vector<Complex> out(dimension());
  for (const auto& [index, c] : amplitudes_) out[index] = c;
  return out;
}

std::string index_to_bits(std::uint64_t index, std::size_t nqubits) {
  std::string bits(nqubits, '0');
  for (std::size_t q = 0; q < nqubits; ++q) {
    if (BasisConvention::bit(index, q, nqubits)) bits[q] = '1';
  }
  return bits;
}

std::uint64_t bits_to_index(std::string_view bits) {
  check_nqubits(bits.size());
  std::uint64_t index = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw InputError("invalid bit '" + std::string(1, ch) + "' in bit string \"" +
                       std::string(bits) + "\"");
    }
    index = (index << 1) | static_cast<std::uint64_t>(ch - '0');
  }
  return index;
}

SparsePoly encode_basis(std::string_view bits) {
  const std::uint64_t index = bits_to_index(bits);
  const std::size_t n = bits.size();
  Exponent e(2 * n, 0);
  for (std::size_t q = 0; q < n; ++q) {
    e[BasisConvention::var(q, BasisConvention::bit(index, q, n))] = 1;
  }
  return SparsePoly::monomial(n, std::move(e));
}

HoloState encode_state(std::span<const Complex> amplitudes) {
  const std::size_t len = amplitudes.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw InputError("amplitude vector length " + std::to_string(len) +
                     " is not a power of two >= 2");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(len));
  HoloState::AmplitudeMap map;
  for (std::uint64_t i = 0; i < len; ++i) map.emplace(i, amplitudes[i]);
  return HoloState(n, std::move(map));
}

SparsePoly to_poly(const HoloState& state) {
  const std::size_t n = state.nqubits();
  SparsePoly p(n);
  Exponent e(2 * n);
  for (const auto& [index, c] : state.amplitudes()) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t q = 0; q < n; ++q) e[BasisConvention::var(q, BasisConvention::bit(index, q, n))] = 1;
    p.add_term(e, c);
  }
  return p;
}

HoloState from_poly(const SparsePoly& poly) {
  const std::size_t n = poly.nqubits();
  HoloState::AmplitudeMap map;
  for (const auto& [e, c] : poly.terms()) {
    std::uint64_t index = 0;
    for (std::size_t q = 0; q < n; ++q) {
      const unsigned ea = e[BasisConvention::var_a(q)];
      const unsigned eb = e[BasisConvention::var_b(q)];
      if (ea + eb != 1) {
        throw HomogeneityError("homogeneity violated on qubit " + std::to_string(q + 1) +
                               " by term with exponent " + exponent_to_string(e) +
                               " (pair degree " + std::to_string(ea + eb) + ")");
      }
      index = (index << 1) | eb;
    }
    map.emplace(index, c);
  }
  return HoloState(n, std::move(map));
}

bool check_homogeneity(const SparsePoly& poly, std::size_t qubit) {
  if (qubit >= poly.nqubits()) throw InputError("check_homogeneity: qubit out of range");
  const std::size_t a = BasisConvention::var_a(qubit);
  const std::size_t b = BasisConvention::var_b(qubit);
  for (const auto& [e, c] : poly.terms()) {
    if (e[a] + e[b] != 1) return false;
  }
  return true;
}

bool check_homogeneity_all(const SparsePoly& poly) {
  for (std::size_t q = 0; q < poly.nqubits(); ++q) {
    if (!check_homogeneity(poly, q)) return false;
  }
  return true;
}

Complex sb_inner_product(const SparsePoly& f, const SparsePoly& g) {
  if (f.nqubits() != g.nqubits()) throw InputError("sb_inner_product: qubit count mismatch");
  Complex acc{};
  // Iterate the smaller map, look up in the larger.
  const bool f_small = f.size() <= g.size();
  const SparsePoly& small = f_small ? f : g;
  const SparsePoly& large = f_small ? g : f;
  for (const auto& [e, cs] : small.terms()) {
    auto it = large.terms().find(e);
    if (it == large.terms().end()) continue;
    double weight = 1.0;
    for (auto k : e) weight *= factorial(k);
    const Complex fe = f_small ? cs : it->second;
    const Complex ge = f_small ? it->second : cs;
    acc += std::conj(fe) * ge * weight;
  }
  return acc;
}

Complex inner_product(const HoloState& a, const HoloState& b) {
  if (a.nqubits() != b.nqubits()) throw InputError("inner_product: qubit count mismatch");
  Complex acc{};
  for (const auto& [index, ca] : a.amplitudes()) acc += std::conj(ca) * b.amplitude(index);
  return acc;
}

}  // namespace holoqc
