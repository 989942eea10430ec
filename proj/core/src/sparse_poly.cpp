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

#include "holoqc/sparse_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace holoqc {

SparsePoly::SparsePoly(std::size_t nqubits) : nqubits_(nqubits) {
  if (nqubits == 0) throw InputError("SparsePoly: nqubits must be positive");
}

SparsePoly SparsePoly::constant(std::size_t nqubits, Complex value) {
  SparsePoly p(nqubits);
  p.add_term(Exponent(2 * nqubits, 0), value);
  return p;
}

SparsePoly SparsePoly::monomial(std::size_t nqubits, Exponent exponent, Complex coeff) {
  SparsePoly p(nqubits);
  p.add_term(exponent, coeff);
  return p;
}

SparsePoly SparsePoly::linear(std::size_t nqubits, const std::vector<Complex>& coeffs) {
  SparsePoly p(nqubits);
  if (coeffs.size() != p.nvars()) throw InputError("SparsePoly::linear: wrong coefficient count");
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Exponent e(p.nvars(), 0);
    e[k] = 1;
    p.add_term(e, coeffs[k]);
  }
  return p;
}

Complex SparsePoly::coeff(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Complex{} : it->second;
}

void SparsePoly::check_exponent(const Exponent& exponent) const {
  if (exponent.size() != nvars()) {
    throw InputError("SparsePoly: exponent vector has length " +
                     std::to_string(exponent.size()) + ", expected " +
                     std::to_string(nvars()));
  }
}

void SparsePoly::check_compatible(const SparsePoly& other) const {
  if (other.nqubits_ != nqubits_) throw InputError("SparsePoly: qubit count mismatch");
}

void SparsePoly::add_term(const Exponent& exponent, Complex coeff) {
  check_exponent(exponent);
  if (std::abs(coeff) <= kZeroTol) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (std::abs(it->second) <= kZeroTol) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(Complex scalar) {
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

SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
  lhs.check_compatible(rhs);
  SparsePoly out(lhs.nqubits_);
  Exponent e(lhs.nvars());
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = el[k] + er[k];
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

double SparsePoly::max_abs_diff(const SparsePoly& other) const {
  check_compatible(other);
  double worst = 0.0;
  for (const auto& [e, c] : terms_) worst = std::max(worst, std::abs(c - other.coeff(e)));
  for (const auto& [e, c] : other.terms_) {
    if (!terms_.contains(e)) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

std::string exponent_to_string(const Exponent& exponent) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < exponent.size(); ++k) {
    if (k) os << ',';
    os << exponent[k];
  }
  os << ')';
  return os.str();
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(6);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.real();
    if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << 'i';
    os << ')';
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << "*z" << (k % 2 == 0 ? 'a' : 'b') << (k / 2 + 1);
      if (e[k] > 1) os << '^' << e[k];
    }
  }
  return os.str();
}

}  // namespace holoqc
