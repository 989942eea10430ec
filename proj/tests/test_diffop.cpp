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

#include <gtest/gtest.h>

#include "holoqc/diffop.hpp"
#include "holoqc/gates.hpp"
#include "holoqc/oracle.hpp"
#include "holoqc/random.hpp"
#include "test_util.hpp"

namespace holoqc {
namespace {

using testing::exps;
using testing::kInvSqrt2;
using testing::mono;

const Complex kI{0.0, 1.0};

TEST(ApplyDiffop, PauliXSwapsModes) {
  EXPECT_EQ(apply_diffop(pauli_x_op(1, 0), mono(1, "a1")), mono(1, "b1"));
}

TEST(ApplyDiffop, PauliZEigenvalueOnOne) {
  EXPECT_EQ(apply_diffop(pauli_z_op(1, 0), mono(1, "b1")), mono(1, "b1", -1.0));
}

TEST(ApplyDiffop, PowerRule) {
  DiffOperator d(1);
  d.add_term(1.0, Exponent{0, 0}, Exponent{1, 0});
  EXPECT_EQ(apply_diffop(d, mono(1, "a1^3")), mono(1, "a1^2", 3.0));
  // second derivative: falling factorial 3*2
  DiffOperator d2(1);
  d2.add_term(1.0, Exponent{0, 0}, Exponent{2, 0});
  EXPECT_EQ(apply_diffop(d2, mono(1, "a1^3")), mono(1, "a1", 6.0));
  EXPECT_TRUE(apply_diffop(d2, mono(1, "a1")).empty());
}

TEST(Compose, CanonicalCommutator) {
  DiffOperator d(1);
  d.add_term(1.0, Exponent{0, 0}, Exponent{1, 0});
  DiffOperator z(1);
  z.add_term(1.0, Exponent{1, 0}, Exponent{0, 0});
  const auto composed = compose(d, z);
  DiffOperator expected = DiffOperator::hop(1, 0, 0) + DiffOperator::scalar(1, 1.0);
  EXPECT_EQ(composed, expected);
}

// Sequential application is the oracle for compose.
TEST(Compose, MatchesSequentialApplication) {
  Rng rng(3);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 40; ++trial) {
    auto random_op = [&] {
      DiffOperator op(1);
      std::uniform_int_distribution<int> e(0, 2);
      for (int t = 0; t < 3; ++t) {
        op.add_term(Complex{gauss(rng), gauss(rng)},
                    Exponent{static_cast<std::uint16_t>(e(rng)), static_cast<std::uint16_t>(e(rng))},
                    Exponent{static_cast<std::uint16_t>(e(rng)), static_cast<std::uint16_t>(e(rng))});
      }
      return op;
    };
    const auto a = random_op();
    const auto b = random_op();
    SparsePoly p(1);
    std::uniform_int_distribution<int> e(0, 3);
    for (int t = 0; t < 4; ++t) {
      p.add_term(Exponent{static_cast<std::uint16_t>(e(rng)), static_cast<std::uint16_t>(e(rng))},
                 Complex{gauss(rng), gauss(rng)});
    }
    const auto lhs = apply_diffop(compose(a, b), p);
    const auto rhs = apply_diffop(a, apply_diffop(b, p));
    EXPECT_LT(lhs.max_abs_diff(rhs), 1e-10);
  }
}

TEST(Compose, ZSquaredActsAsIdentity) {
  const auto zz = compose(pauli_z_op(1, 0), pauli_z_op(1, 0));
  EXPECT_EQ(apply_diffop(zz, mono(1, "a1")), mono(1, "a1"));
  EXPECT_EQ(apply_diffop(zz, mono(1, "b1")), mono(1, "b1"));
}

TEST(Compose, CommutatorXYIsTwoIZ) {
  const auto x = pauli_x_op(1, 0);
  const auto y = pauli_y_op(1, 0);
  const auto comm = compose(x, y) - compose(y, x);
  EXPECT_LT(apply_diffop(comm, mono(1, "a1")).max_abs_diff(mono(1, "a1", 2.0 * kI)), 1e-15);
  EXPECT_LT(apply_diffop(comm, mono(1, "b1")).max_abs_diff(mono(1, "b1", -2.0 * kI)), 1e-15);
}

// XY = iZ, YZ = iX, ZX = iY on both basis monomials of every qubit.
TEST(PauliAlgebra, ProductsOnPhysicalSubspace) {
  const std::size_t n = 3;
  for (std::size_t q = 0; q < n; ++q) {
    const auto x = pauli_x_op(n, q);
    const auto y = pauli_y_op(n, q);
    const auto z = pauli_z_op(n, q);
    const std::pair<DiffOperator, DiffOperator> cases[] = {
        {compose(x, y), z * kI}, {compose(y, z), x * kI}, {compose(z, x), y * kI},
        {compose(x, x), DiffOperator::scalar(n, 1.0)},
        {compose(y, y), DiffOperator::scalar(n, 1.0)},
        {compose(z, z), DiffOperator::scalar(n, 1.0)}};
    for (std::uint64_t idx = 0; idx < 8; ++idx) {
      const auto p = encode_basis(index_to_bits(idx, n));
      for (const auto& [lhs, rhs] : cases) {
        EXPECT_LT(apply_diffop(lhs, p).max_abs_diff(apply_diffop(rhs, p)), 1e-14);
      }
    }
  }
}

TEST(GateOperator, PauliXTerms) {
  const auto op = std::get<DiffOperator>(gate_operator({GateKind::X, {0}, {}}, 1));
  ASSERT_EQ(op.size(), 2u);
  EXPECT_EQ(op.terms().at({Exponent{1, 0}, Exponent{0, 1}}), Complex{1.0});
  EXPECT_EQ(op.terms().at({Exponent{0, 1}, Exponent{1, 0}}), Complex{1.0});
}

TEST(GateOperator, HadamardIsSubstitutionBlock) {
  const auto sub = std::get<Substitution>(gate_operator({GateKind::H, {0}, {}}, 1));
  const auto& m = sub.matrix();
  EXPECT_NEAR(std::abs(m(0, 0) - kInvSqrt2), 0.0, 1e-16);
  EXPECT_NEAR(std::abs(m(0, 1) - kInvSqrt2), 0.0, 1e-16);
  EXPECT_NEAR(std::abs(m(1, 0) - kInvSqrt2), 0.0, 1e-16);
  EXPECT_NEAR(std::abs(m(1, 1) + kInvSqrt2), 0.0, 1e-16);
  EXPECT_TRUE(sub.is_unitary());
  EXPECT_TRUE(std::holds_alternative<DiffOperator>(
      gate_operator({GateKind::H, {0}, {}}, 1, GateForm::kDifferential)));
}

TEST(GateOperator, CnotDifferentialFormMatchesMatrix) {
  const auto op = gate_operator({GateKind::CNOT, {0, 1}, {}}, 2);
  EXPECT_EQ(apply_operator(op, mono(2, "b1 a2")), mono(2, "b1 b2"));
  // All four basis states against the oracle matrix.
  for (std::uint64_t idx = 0; idx < 4; ++idx) {
    StateVector v{2, std::vector<Complex>(4)};
    v.amps[idx] = 1.0;
    apply_gate_matrix({GateKind::CNOT, {0, 1}, {}}, v);
    const auto got = from_poly(apply_operator(op, encode_basis(index_to_bits(idx, 2))));
    EXPECT_EQ(compare_states(v, got), 0.0) << index_to_bits(idx, 2);
  }
}

TEST(GateOperator, RejectsBadSpecs) {
  EXPECT_THROW(gate_operator({GateKind::X, {2}, {}}, 2), InputError);
  EXPECT_THROW(gate_operator({GateKind::CNOT, {1, 1}, {}}, 2), InputError);
  EXPECT_THROW(gate_operator({GateKind::CNOT, {0}, {}}, 2), InputError);
  Eigen::Matrix2cd bad;
  bad << 1, 1, 0, 1;
  EXPECT_THROW(gate_operator({GateKind::CU, {0, 1}, bad}, 2), InputError);
  EXPECT_THROW(gate_operator({GateKind::CU, {0, 1}, std::nullopt}, 2), InputError);
}

TEST(ApplySubstitution, HadamardAndSwap) {
  const auto h = hadamard_substitution(1, 0);
  EXPECT_LT(apply_substitution(h, mono(1, "a1")).max_abs_diff(mono(1, "a1", kInvSqrt2) + mono(1, "b1", kInvSqrt2)), 1e-16);
  EXPECT_LT(apply_substitution(h, mono(1, "b1")).max_abs_diff(mono(1, "a1", kInvSqrt2) + mono(1, "b1", -kInvSqrt2)), 1e-16);
  EXPECT_EQ(apply_substitution(swap_substitution(2, 0, 1), mono(2, "a1 b2")), mono(2, "a2 b1"));
}

TEST(ApplySubstitution, ExpandsHigherDegree) {
  // (z_a + z_b)^2 / 2 from z_a^2
  const auto out = apply_substitution(hadamard_substitution(1, 0), mono(1, "a1^2"));
  const auto expected = mono(1, "a1^2", 0.5) + mono(1, "a1 b1", 1.0) + mono(1, "b1^2", 0.5);
  EXPECT_LT(out.max_abs_diff(expected), 1e-15);
}

TEST(ControlledU, IdentityPayload) {
  const auto op = controlled_u(2, 0, 1, Eigen::Matrix2cd::Identity());
  for (std::uint64_t idx = 0; idx < 4; ++idx) {
    const auto p = encode_basis(index_to_bits(idx, 2));
    EXPECT_LT(apply_diffop(op, p).max_abs_diff(p), 1e-15);
  }
}

TEST(ControlledU, XAndZPayloadsMatchCnotAndCz) {
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  Eigen::Matrix2cd z;
  z << 1, 0, 0, -1;
  const auto cux = controlled_u(2, 0, 1, x);
  const auto cuz = controlled_u(2, 0, 1, z);
  const auto cnot = gate_operator({GateKind::CNOT, {0, 1}, {}}, 2);
  const auto cz = gate_operator({GateKind::CZ, {0, 1}, {}}, 2);
  for (std::uint64_t idx = 0; idx < 4; ++idx) {
    const auto p = encode_basis(index_to_bits(idx, 2));
    EXPECT_LT(apply_diffop(cux, p).max_abs_diff(apply_operator(cnot, p)), 1e-15);
    EXPECT_LT(apply_diffop(cuz, p).max_abs_diff(apply_operator(cz, p)), 1e-15);
  }
}

TEST(ControlledU, PauliDecompositionReassembles) {
  Rng rng(5);
  const auto u = random_unitary_2x2(rng);
  const auto [c0, c1, c2, c3] = pauli_decompose(u);
  Eigen::Matrix2cd x, y, z;
  x << 0, 1, 1, 0;
  y << 0, -kI, kI, 0;
  z << 1, 0, 0, -1;
  const Eigen::Matrix2cd back = c0 * Eigen::Matrix2cd::Identity() + c1 * x + c2 * y + c3 * z;
  EXPECT_LT((back - u).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(ApplyGate, Examples) {
  EXPECT_EQ(apply_gate({GateKind::X, {0}, {}}, HoloState::basis("0")), HoloState::basis("1"));
  const auto plus = apply_gate({GateKind::H, {0}, {}}, HoloState::basis("0"));
  EXPECT_NEAR(std::abs(plus.amplitude("0") - kInvSqrt2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(plus.amplitude("1") - kInvSqrt2), 0.0, 1e-15);
}

TEST(RunCircuitHolo, Examples) {
  const auto zero = HoloState::basis("00");
  EXPECT_EQ(run_circuit_holo(Circuit{2, {}}, zero), zero);

  const Circuit xx{1, {{GateKind::X, {0}, {}}, {GateKind::X, {0}, {}}}};
  EXPECT_EQ(run_circuit_holo(xx, HoloState::basis("0")), HoloState::basis("0"));

  const Circuit bell{2, {{GateKind::H, {0}, {}}, {GateKind::CNOT, {0, 1}, {}}}};
  const auto out = run_circuit_holo(bell, zero);
  EXPECT_LT(compare_states(StateVector::from_holo(testing::bell_state()), out), 1e-15);
}

// CNOT's own formula fixes |00>; the Bell state needs the Hadamard first.
TEST(RunCircuitHolo, CnotAloneFixesZeroZero) {
  const Circuit c{2, {{GateKind::CNOT, {0, 1}, {}}}};
  EXPECT_EQ(run_circuit_holo(c, HoloState::basis("00")), HoloState::basis("00"));
}

TEST(RunCircuitHolo, CorruptedTableIsCaughtAtTheGate) {
  // An operator that raises degree breaks the physical subspace.
  GateTable broken = [](const GateSpec& g, std::size_t n) -> GateOperator {
    DiffOperator op(n);
    Exponent m(2 * n, 0);
    m[2 * g.qubits[0]] = 1;
    op.add_term(1.0, m, Exponent(2 * n, 0));
    return op;
  };
  const Circuit c{1, {{GateKind::X, {0}, {}}}};
  EXPECT_THROW(run_circuit_holo(c, HoloState::basis("0"), broken), HomogeneityError);
}

TEST(DualForms, HadamardSubstitutionMatchesDifferential) {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto psi = to_poly(random_state(n, rng));
    for (std::size_t q = 0; q < n; ++q) {
      const GateSpec h{GateKind::H, {q}, {}};
      const auto a = apply_operator(gate_operator(h, n, GateForm::kPreferred), psi);
      const auto b = apply_operator(gate_operator(h, n, GateForm::kDifferential), psi);
      EXPECT_LT(a.max_abs_diff(b), 1e-12);
    }
  }
}

TEST(DualForms, SwapSubstitutionMatchesPauliDecomposition) {
  const GateSpec s{GateKind::SWAP, {0, 1}, {}};
  const auto sub = gate_operator(s, 2, GateForm::kPreferred);
  const auto diff = gate_operator(s, 2, GateForm::kDifferential);
  for (std::uint64_t idx = 0; idx < 4; ++idx) {
    const auto p = encode_basis(index_to_bits(idx, 2));
    EXPECT_LT(apply_operator(sub, p).max_abs_diff(apply_operator(diff, p)), 1e-15);
  }
}

TEST(GateProperties, PreservesHomogeneityAndNorm) {
  // 200 random states (50 per register size), every kind on every qubit
  // assignment, both operator forms.
  Rng rng(23);
  const GateKind kinds[] = {GateKind::X,    GateKind::Y,    GateKind::Z,  GateKind::H,
                            GateKind::SWAP, GateKind::CNOT, GateKind::CZ, GateKind::CU};
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto psi = random_state(n, rng);
      const auto poly = to_poly(psi);
      for (auto kind : kinds) {
        std::vector<std::vector<std::size_t>> assignments;
        if (arity(kind) == 1) {
          for (std::size_t q = 0; q < n; ++q) assignments.push_back({q});
        } else {
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t t = 0; t < n; ++t)
              if (c != t) assignments.push_back({c, t});
        }
        for (const auto& qs : assignments) {
          GateSpec gate{kind, qs, std::nullopt};
          if (kind == GateKind::CU) gate.u = random_unitary_2x2(rng);
          for (auto form : {GateForm::kPreferred, GateForm::kDifferential}) {
            const auto out = apply_operator(gate_operator(gate, n, form), poly);
            for (std::size_t q = 0; q < n; ++q) ASSERT_TRUE(check_homogeneity(out, q));
            EXPECT_NEAR(std::real(sb_inner_product(out, out)), 1.0, 1e-10);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace holoqc
