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

#include "holoqc/diffop.hpp"

#include <cmath>
#include <sstream>

namespace holoqc {

namespace {

// m (m-1) ... (m-r+1)
double falling(unsigned m, unsigned r) {
  double f = 1.0;
  for (unsigned i = 0; i < r; ++i) f *= static_cast<double>(m - i);
  return f;
}

double binomial(unsigned n, unsigned k) {
  double b = 1.0;
  for (unsigned i = 1; i <= k; ++i) b = b * static_cast<double>(n - k + i) / i;
  return b;
}

}  // namespace

DiffOperator::DiffOperator(std::size_t nqubits) : nqubits_(nqubits) {
  if (nqubits == 0) throw InputError("DiffOperator: nqubits must be positive");
}

DiffOperator DiffOperator::scalar(std::size_t nqubits, Complex value) {
  DiffOperator op(nqubits);
  const Exponent zero(2 * nqubits, 0);
  op.add_term(value, zero, zero);
  return op;
}

DiffOperator DiffOperator::hop(std::size_t nqubits, std::size_t mult_var,
                               std::size_t deriv_var, Complex coeff) {
  DiffOperator op(nqubits);
  if (mult_var >= op.nvars() || deriv_var >= op.nvars()) {
    throw InputError("DiffOperator::hop: variable index out of range");
  }
  Exponent mult(op.nvars(), 0);
  Exponent deriv(op.nvars(), 0);
  mult[mult_var] = 1;
  deriv[deriv_var] = 1;
  op.add_term(coeff, mult, deriv);
  return op;
}

void DiffOperator::add_term(Complex coeff, const Exponent& mult, const Exponent& deriv) {
  if (mult.size() != nvars() || deriv.size() != nvars()) {
    throw InputError("DiffOperator: multi-index length mismatch");
  }
  if (std::abs(coeff) <= kZeroTol) return;
  auto [it, inserted] = terms_.try_emplace(Key{mult, deriv}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (std::abs(it->second) <= kZeroTol) terms_.erase(it);
  }
}

void DiffOperator::check_compatible(const DiffOperator& other) const {
  if (other.nqubits_ != nqubits_) throw InputError("DiffOperator: qubit count mismatch");
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& other) {
  check_compatible(other);
  for (const auto& [key, c] : other.terms_) add_term(c, key.first, key.second);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& other) {
  check_compatible(other);
  for (const auto& [key, c] : other.terms_) add_term(-c, key.first, key.second);
  return *this;
}

DiffOperator& DiffOperator::operator*=(Complex scalar) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scalar;
    if (std::abs(it->second) <= kZeroTol) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

std::string DiffOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(6);
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.real();
    if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << 'i';
    os << ')';
    const auto& [mult, deriv] = key;
    for (std::size_t k = 0; k < mult.size(); ++k) {
      if (mult[k] == 0) continue;
      os << "*z" << (k % 2 == 0 ? 'a' : 'b') << (k / 2 + 1);
      if (mult[k] > 1) os << '^' << mult[k];
    }
    for (std::size_t k = 0; k < deriv.size(); ++k) {
      if (deriv[k] == 0) continue;
      os << "*d" << (k % 2 == 0 ? 'a' : 'b') << (k / 2 + 1);
      if (deriv[k] > 1) os << '^' << deriv[k];
    }
  }
  return os.str();
}

SparsePoly apply_diffop(const DiffOperator& op, const SparsePoly& poly) {
  if (op.nqubits() != poly.nqubits()) throw InputError("apply_diffop: qubit count mismatch");
  SparsePoly out(poly.nqubits());
  const std::size_t nv = poly.nvars();
  Exponent e_out(nv);
  for (const auto& [key, c] : op.terms()) {
    const auto& [mult, deriv] = key;
    for (const auto& [e, a] : poly.terms()) {
      double factor = 1.0;
      bool vanishes = false;
      for (std::size_t k = 0; k < nv; ++k) {
        if (e[k] < deriv[k]) {
          vanishes = true;
          break;
        }
        factor *= falling(e[k], deriv[k]);
        e_out[k] = static_cast<std::uint16_t>(e[k] - deriv[k] + mult[k]);
      }
      if (!vanishes) out.add_term(e_out, c * a * factor);
    }
  }
  return out;
}

DiffOperator compose(const DiffOperator& op1, const DiffOperator& op2) {
  if (op1.nqubits() != op2.nqubits()) throw InputError("compose: qubit count mismatch");
  DiffOperator out(op1.nqubits());
  const std::size_t nv = op1.nvars();
  Exponent mult(nv);
  Exponent deriv(nv);

  for (const auto& [key1, c1] : op1.terms()) {
    const auto& [m1, d1] = key1;
    for (const auto& [key2, c2] : op2.terms()) {
      const auto& [m2, d2] = key2;
      // Each variable contributes an independent sum over r (number of
      // contractions between d1 and m2 on that variable).
      auto expand = [&](auto&& self, std::size_t v, Complex coeff) -> void {
        if (v == nv) {
          out.add_term(coeff, mult, deriv);
          return;
        }
        const unsigned rmax = std::min<unsigned>(d1[v], m2[v]);
        for (unsigned r = 0; r <= rmax; ++r) {
          mult[v] = static_cast<std::uint16_t>(m1[v] + m2[v] - r);
          deriv[v] = static_cast<std::uint16_t>(d1[v] - r + d2[v]);
          self(self, v + 1, coeff * (binomial(d1[v], r) * falling(m2[v], r)));
        }
      };
      expand(expand, 0, c1 * c2);
    }
  }
  return out;
}

DiffOperator pauli_x_op(std::size_t nqubits, std::size_t qubit) {
  if (qubit >= nqubits) throw InputError("pauli_x_op: qubit out of range");
  const auto a = BasisConvention::var_a(qubit);
  const auto b = BasisConvention::var_b(qubit);
  return DiffOperator::hop(nqubits, a, b) + DiffOperator::hop(nqubits, b, a);
}

DiffOperator pauli_y_op(std::size_t nqubits, std::size_t qubit) {
  if (qubit >= nqubits) throw InputError("pauli_y_op: qubit out of range");
  const auto a = BasisConvention::var_a(qubit);
  const auto b = BasisConvention::var_b(qubit);
  const Complex minus_i{0.0, -1.0};
  return (DiffOperator::hop(nqubits, a, b) - DiffOperator::hop(nqubits, b, a)) * minus_i;
}

DiffOperator pauli_z_op(std::size_t nqubits, std::size_t qubit) {
  if (qubit >= nqubits) throw InputError("pauli_z_op: qubit out of range");
  const auto a = BasisConvention::var_a(qubit);
  const auto b = BasisConvention::var_b(qubit);
  return DiffOperator::hop(nqubits, a, a) - DiffOperator::hop(nqubits, b, b);
}

DiffOperator euler_op(std::size_t nqubits, std::size_t qubit) {
  if (qubit >= nqubits) throw InputError("euler_op: qubit out of range");
  const auto a = BasisConvention::var_a(qubit);
  const auto b = BasisConvention::var_b(qubit);
  return DiffOperator::hop(nqubits, a, a) + DiffOperator::hop(nqubits, b, b);
}

Substitution::Substitution(std::size_t nqubits, Eigen::MatrixXcd matrix)
    : nqubits_(nqubits), matrix_(std::move(matrix)) {
  const auto nv = static_cast<Eigen::Index>(2 * nqubits);
  if (nqubits == 0 || matrix_.rows() != nv || matrix_.cols() != nv) {
    throw InputError("Substitution: matrix must be 2N x 2N");
  }
  if (std::abs(matrix_.determinant()) < 1e-12) throw InputError("Substitution: matrix is singular");
}

Substitution Substitution::identity(std::size_t nqubits) {
  const auto nv = static_cast<Eigen::Index>(2 * nqubits);
  return Substitution(nqubits, Eigen::MatrixXcd::Identity(nv, nv));
}

bool Substitution::is_unitary(double tol) const {
  const auto eye = Eigen::MatrixXcd::Identity(matrix_.rows(), matrix_.cols());
  return (matrix_ * matrix_.adjoint() - eye).cwiseAbs().maxCoeff() <= tol;
}

SparsePoly apply_substitution(const Substitution& sub, const SparsePoly& poly) {
  if (sub.nqubits() != poly.nqubits()) throw InputError("apply_substitution: qubit count mismatch");
  const std::size_t n = poly.nqubits();
  const std::size_t nv = poly.nvars();
  const auto& m = sub.matrix();

  // z_k -> sum_l M(k, l) z_l
  std::vector<SparsePoly> images;
  images.reserve(nv);
  for (std::size_t k = 0; k < nv; ++k) {
    std::vector<Complex> row(nv);
    for (std::size_t l = 0; l < nv; ++l) {
      row[l] = m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
    }
    images.push_back(SparsePoly::linear(n, row));
  }

  SparsePoly out(n);
  for (const auto& [e, c] : poly.terms()) {
    SparsePoly term = SparsePoly::constant(n, c);
    for (std::size_t k = 0; k < nv; ++k) {
      for (unsigned p = 0; p < e[k]; ++p) term = term * images[k];
    }
    out += term;
  }
  return out;
}

Substitution hadamard_substitution(std::size_t nqubits, std::size_t qubit) {
  if (qubit >= nqubits) throw InputError("hadamard_substitution: qubit out of range");
  const auto nv = static_cast<Eigen::Index>(2 * nqubits);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(nv, nv);
  const auto a = static_cast<Eigen::Index>(BasisConvention::var_a(qubit));
  const auto b = static_cast<Eigen::Index>(BasisConvention::var_b(qubit));
  const double s = 1.0 / std::sqrt(2.0);
  m(a, a) = s;
  m(a, b) = s;
  m(b, a) = s;
  m(b, b) = -s;
  return Substitution(nqubits, std::move(m));
}

Substitution swap_substitution(std::size_t nqubits, std::size_t j, std::size_t k) {
  if (j >= nqubits || k >= nqubits || j == k) {
    throw InputError("swap_substitution: qubits must be distinct and in range");
  }
  const auto nv = static_cast<Eigen::Index>(2 * nqubits);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(nv, nv);
  for (unsigned bit = 0; bit < 2; ++bit) {
    const auto vj = static_cast<Eigen::Index>(BasisConvention::var(j, bit));
    const auto vk = static_cast<Eigen::Index>(BasisConvention::var(k, bit));
    m(vj, vj) = 0.0;
    m(vk, vk) = 0.0;
    m(vj, vk) = 1.0;
    m(vk, vj) = 1.0;
  }
  return Substitution(nqubits, std::move(m));
}

}  // namespace holoqc
