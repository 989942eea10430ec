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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "holoqc/holostate.hpp"
#include "holoqc/random.hpp"
#include "test_util.hpp"

namespace holoqc {
namespace {

using testing::ComplexNear;
using testing::kInvSqrt2;
using testing::mono;

// Brute-force Segal-Bargmann norm of a one-variable monomial:
// int |z|^(2m) e^{-|z|^2} d^2z / pi, midpoint rule on a square.
double gaussian_moment(unsigned m, unsigned mprime) {
  const double L = 8.0;
  const int steps = 800;
  const double h = 2 * L / steps;
  std::complex<double> acc{};
  for (int ix = 0; ix < steps; ++ix) {
    const double x = -L + (ix + 0.5) * h;
    for (int iy = 0; iy < steps; ++iy) {
      const double y = -L + (iy + 0.5) * h;
      const std::complex<double> z{x, y};
      acc += std::conj(std::pow(z, static_cast<int>(m))) * std::pow(z, static_cast<int>(mprime)) *
             std::exp(-(x * x + y * y));
    }
  }
  return std::real(acc) * h * h / kPi;
}

TEST(EncodeBasis, SingleQubitStates) {
  EXPECT_EQ(encode_basis("0"), mono(1, "a1"));
  EXPECT_EQ(encode_basis("1"), mono(1, "b1"));
}

TEST(EncodeBasis, TwoQubitProduct) { EXPECT_EQ(encode_basis("01"), mono(2, "a1 b2")); }

TEST(EncodeBasis, RejectsInvalidBit) {
  EXPECT_THROW(encode_basis("02"), InputError);
  EXPECT_THROW(encode_basis(""), InputError);
}

TEST(EncodeState, BasisAndSuperposition) {
  const std::vector<Complex> zero{1.0, 0.0};
  const auto s0 = encode_state(zero);
  EXPECT_EQ(s0.amplitudes().size(), 1u);
  EXPECT_EQ(s0.amplitude("0"), Complex{1.0});
  EXPECT_TRUE(s0.is_normalized());

  const std::vector<Complex> plus{kInvSqrt2, kInvSqrt2};
  const auto sp = encode_state(plus);
  EXPECT_EQ(sp.amplitude("0"), Complex{kInvSqrt2});
  EXPECT_EQ(sp.amplitude("1"), Complex{kInvSqrt2});
}

TEST(EncodeState, BellIsBigEndian) {
  const std::vector<Complex> bell{kInvSqrt2, 0.0, 0.0, kInvSqrt2};
  const auto s = encode_state(bell);
  EXPECT_EQ(s, testing::bell_state());
  EXPECT_EQ(s.amplitude("00"), Complex{kInvSqrt2});
  EXPECT_EQ(s.amplitude("11"), Complex{kInvSqrt2});
  EXPECT_EQ(s.amplitude("01"), Complex{});
}

TEST(EncodeState, FlagsButNeverFixesNormalization) {
  const std::vector<Complex> v{1.0, 1.0};
  const auto s = encode_state(v);
  EXPECT_FALSE(s.is_normalized());
  EXPECT_DOUBLE_EQ(s.norm_squared(), 2.0);
}

TEST(EncodeState, RejectsNonPowerOfTwo) {
  const std::vector<Complex> v{1.0, 0.0, 0.0};
  EXPECT_THROW(encode_state(v), InputError);
  EXPECT_THROW(encode_state(std::vector<Complex>{1.0}), InputError);
}

TEST(ToPoly, Examples) {
  EXPECT_EQ(to_poly(HoloState::basis("0")), mono(1, "a1"));
  const auto plus = to_poly(encode_state(std::vector<Complex>{kInvSqrt2, kInvSqrt2}));
  EXPECT_EQ(plus, mono(1, "a1", kInvSqrt2) + mono(1, "b1", kInvSqrt2));
  EXPECT_EQ(to_poly(testing::bell_state()), mono(2, "a1 a2", kInvSqrt2) + mono(2, "b1 b2", kInvSqrt2));
}

TEST(FromPoly, ReadsCoefficients) {
  EXPECT_EQ(from_poly(mono(1, "b1")), HoloState::basis("1"));
  const auto s = from_poly(mono(2, "a1 a2", 0.6) + mono(2, "b1 a2", 0.8));
  EXPECT_EQ(s.amplitude("00"), Complex{0.6});
  EXPECT_EQ(s.amplitude("10"), Complex{0.8});
  EXPECT_EQ(s.amplitudes().size(), 2u);
}

TEST(FromPoly, RejectsNonPhysicalWithExponent) {
  try {
    (void)from_poly(mono(1, "a1^2"));
    FAIL() << "expected HomogeneityError";
  } catch (const HomogeneityError& e) {
    EXPECT_NE(std::string(e.what()).find("(2,0)"), std::string::npos) << e.what();
  }
}

TEST(CheckHomogeneity, Examples) {
  EXPECT_TRUE(check_homogeneity(mono(1, "a1"), 0));
  EXPECT_FALSE(check_homogeneity(mono(1, "a1 b1"), 0));
  EXPECT_FALSE(check_homogeneity(SparsePoly::constant(1, 1.0), 0));
  EXPECT_THROW(check_homogeneity(mono(1, "a1"), 1), InputError);
}

TEST(SbInnerProduct, Examples) {
  EXPECT_EQ(sb_inner_product(mono(1, "a1"), mono(1, "a1")), Complex{1.0});
  EXPECT_EQ(sb_inner_product(mono(1, "a1"), mono(1, "b1")), Complex{});
  EXPECT_EQ(sb_inner_product(mono(1, "a1^2"), mono(1, "a1^2")), Complex{2.0});
  EXPECT_THROW(sb_inner_product(mono(1, "a1"), mono(2, "a1 a2")), InputError);
}

TEST(SbInnerProduct, MatchesGaussianQuadrature) {
  // Frozen from the quadrature above: moments m! and orthogonality.
  EXPECT_NEAR(gaussian_moment(2, 2), 2.0, 1e-6);
  EXPECT_NEAR(gaussian_moment(1, 1), 1.0, 1e-6);
  EXPECT_NEAR(gaussian_moment(1, 2), 0.0, 1e-6);
  EXPECT_NEAR(std::real(sb_inner_product(mono(1, "a1^3"), mono(1, "a1^3"))), gaussian_moment(3, 3), 1e-5);
}

TEST(SparsePoly, PrunesCancelledTerms) {
  auto p = mono(1, "a1", 1.0) + mono(1, "b1", 1.0);
  p -= mono(1, "a1", 1.0 - 1e-15);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_THROW(p.add_term(Exponent{1}, 1.0), InputError);
}

// Properties over random physical states.
TEST(HoloStateProperties, RoundTripHomogeneityAndInnerProduct) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto psi = random_state(n, rng);
    const auto phi = random_state(n, rng);
    const auto p = to_poly(psi);
    EXPECT_EQ(from_poly(p), psi);
    for (std::size_t q = 0; q < n; ++q) EXPECT_TRUE(check_homogeneity(p, q));
    EXPECT_TRUE(ComplexNear(sb_inner_product(p, to_poly(phi)), inner_product(psi, phi), 1e-12));
  }
}

TEST(HoloStateProperties, InnerProductHermitianAndPositive) {
  Rng rng(11);
  std::uniform_int_distribution<int> deg(0, 4);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 2;
    auto random_poly = [&] {
      SparsePoly p(n);
      for (int t = 0; t < 5; ++t) {
        Exponent e(2 * n, 0);
        int budget = deg(rng);
        std::uniform_int_distribution<std::size_t> var(0, 2 * n - 1);
        while (budget-- > 0) ++e[var(rng)];
        p.add_term(e, Complex{gauss(rng), gauss(rng)});
      }
      return p;
    };
    const auto f = random_poly();
    const auto g = random_poly();
    EXPECT_TRUE(ComplexNear(sb_inner_product(f, g), std::conj(sb_inner_product(g, f)), 1e-12));
    if (!f.empty()) {
      const Complex ff = sb_inner_product(f, f);
      EXPECT_GT(ff.real(), 0.0);
      EXPECT_NEAR(ff.imag(), 0.0, 1e-12);
    }
  }
}

}  // namespace
}  // namespace holoqc
