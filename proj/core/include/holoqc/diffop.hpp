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

#include <map>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "holoqc/common.hpp"
#include "holoqc/sparse_poly.hpp"

namespace holoqc {

/// Finite sum of normal-ordered terms coeff * z^mult * d^deriv over the
/// 2N holomorphic variables (Weyl algebra element).
///
/// A term with empty mult and deriv is the literal scalar; it acts as the
/// identity on every polynomial, and therefore also on the physical subspace.
class DiffOperator {
 public:
  using Key = std::pair<Exponent, Exponent>;  // (mult, deriv)
  using TermMap = std::map<Key, Complex>;

  explicit DiffOperator(std::size_t nqubits);

  static DiffOperator scalar(std::size_t nqubits, Complex value);
  /// z_{mult_var} * d/dz_{deriv_var}.
  static DiffOperator hop(std::size_t nqubits, std::size_t mult_var,
                          std::size_t deriv_var, Complex coeff = 1.0);

  std::size_t nqubits() const { return nqubits_; }
  std::size_t nvars() const { return 2 * nqubits_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(Complex coeff, const Exponent& mult, const Exponent& deriv);

  DiffOperator& operator+=(const DiffOperator& other);
  DiffOperator& operator-=(const DiffOperator& other);
  DiffOperator& operator*=(Complex scalar);

  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(DiffOperator a, Complex s) { return a *= s; }
  friend DiffOperator operator*(Complex s, DiffOperator a) { return a *= s; }

  friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

  std::string to_string() const;

 private:
  void check_compatible(const DiffOperator& other) const;

  std::size_t nqubits_;
  TermMap terms_;
};

/// Exact action on a polynomial: differentiate (falling factorials), then
/// multiply, then collect.
SparsePoly apply_diffop(const DiffOperator& op, const SparsePoly& poly);

/// Normal-ordered product op1 o op2. Per variable, d^k z^m is rewritten with
///   d^k z^m = sum_r C(k, r) m!/(m-r)! z^(m-r) d^(k-r).
DiffOperator compose(const DiffOperator& op1, const DiffOperator& op2);

/// Single-qubit building blocks; qubit is 0-based.
DiffOperator pauli_x_op(std::size_t nqubits, std::size_t qubit);
DiffOperator pauli_y_op(std::size_t nqubits, std::size_t qubit);
DiffOperator pauli_z_op(std::size_t nqubits, std::size_t qubit);
/// Euler operator z_a d_a + z_b d_b of one pair.
DiffOperator euler_op(std::size_t nqubits, std::size_t qubit);

/// Pullback f(z) -> f(M z) by a 2N x 2N matrix.
class Substitution {
 public:
  Substitution(std::size_t nqubits, Eigen::MatrixXcd matrix);

  static Substitution identity(std::size_t nqubits);

  std::size_t nqubits() const { return nqubits_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  bool is_unitary(double tol = 1e-10) const;

 private:
  std::size_t nqubits_;
  Eigen::MatrixXcd matrix_;
};

SparsePoly apply_substitution(const Substitution& sub, const SparsePoly& poly);

Substitution hadamard_substitution(std::size_t nqubits, std::size_t qubit);
Substitution swap_substitution(std::size_t nqubits, std::size_t j, std::size_t k);

}  // namespace holoqc
