// Copyright 2026 The reldeleg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reldeleg/amplify.hpp"
#include "reldeleg/errors.hpp"
#include "reldeleg/hamiltonian.hpp"
#include "reldeleg/spectral.hpp"

using namespace reldeleg;

namespace {

XZHamiltonian ham(std::size_t n, std::initializer_list<std::pair<double, const char*>> terms) {
  std::vector<HamiltonianTerm> t;
  for (const auto& [g, w] : terms) t.push_back({g, parse_pauli(w)});
  return XZHamiltonian(n, std::move(t));
}

// Oracle: (1/m) sum gamma_l H_l from Kronecker products of 2x2 matrices.
oracle::Matrix oracle_dense(const XZHamiltonian& h) {
  const auto dim = Eigen::Index{1} << h.num_qubits();
  oracle::Matrix m = oracle::Matrix::Zero(dim, dim);
  for (const auto& t : h.terms()) m += oracle::word(t.letters.word(), t.gamma);
  return m / static_cast<double>(h.num_terms());
}

XZHamiltonian random_xz(std::size_t n, std::size_t m, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<HamiltonianTerm> terms;
  for (std::size_t l = 0; l < m; ++l) {
    std::vector<Pauli> letters(n);
    for (auto& p : letters) p = static_cast<Pauli>(std::array{0, 1, 3}[gen() % 3]);
    terms.push_back({u(gen), PauliString(letters)});
  }
  return XZHamiltonian(n, std::move(terms));
}

}  // namespace

TEST(GroundEnergy, Examples) {
  EXPECT_NEAR(ground_energy(ham(1, {{1.0, "Z"}})), -1.0, 1e-9);
  EXPECT_NEAR(ground_energy(ham(1, {{1.0, "X"}, {1.0, "Z"}})), -std::sqrt(2.0) / 2, 1e-9);
  EXPECT_NEAR(ground_energy(ham(2, {{1.0, "II"}})), 1.0, 1e-9);
}

TEST(GroundEnergy, Errors) {
  EXPECT_THROW(XZHamiltonian(1, {}), ShapeError);
  EXPECT_THROW(ground_energy(ham(5, {{1.0, "ZZZZZ"}}), 4), CapacityError);
}

TEST(OperatorNorm, Examples) {
  EXPECT_NEAR(operator_norm(ham(1, {{1.0, "Z"}})), 1.0, 1e-9);
  EXPECT_NEAR(operator_norm(ham(1, {{1.0, "X"}, {1.0, "Z"}})), std::sqrt(2.0) / 2, 1e-9);
  EXPECT_NEAR(operator_norm(ham(2, {{0.5, "ZZ"}})), 0.5, 1e-9);
}

TEST(Hamiltonian, DenseMatchesOracle) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 20; ++trial) {
    const XZHamiltonian h = random_xz(1 + gen() % 3, 1 + gen() % 5, gen);
    EXPECT_LT((h.dense() - oracle_dense(h)).norm(), 1e-12);
    EXPECT_NEAR(ground_energy(h), oracle::smallest_eigenvalue(oracle_dense(h)), 1e-9);
  }
}

TEST(Hamiltonian, Validation) {
  EXPECT_THROW(ham(2, {{1.0, "XY"}}), ShapeError);
  EXPECT_THROW(ham(2, {{1.0, "X"}}), ShapeError);
  EXPECT_THROW(XZHamiltonian(3, {{1.0, parse_pauli("XXZ")}}, 2), ShapeError);
  EXPECT_THROW(XZHamiltonian(1, {{1.0, parse_pauli("Z")}}, std::nullopt, 0.5, 0.2), ShapeError);
}

TEST(Hamiltonian, NormalForm) {
  EXPECT_TRUE(ham(1, {{1.0, "Z"}}).is_normal_form());
  const XZHamiltonian abused = ham(1, {{2.0, "Z"}});
  EXPECT_FALSE(abused.is_normal_form());
  EXPECT_THROW(abused.require_normal_form(), std::invalid_argument);
}

TEST(Hamiltonian, FileRoundTripIsExact) {
  std::mt19937_64 gen(22);
  for (int trial = 0; trial < 20; ++trial) {
    XZHamiltonian h = random_xz(1 + gen() % 3, 1 + gen() % 5, gen);
    if (trial % 2) h.set_thresholds(0.1 * trial / 20.0, 0.3 + 1.0 / 3.0);
    const std::string text = h.serialize();
    const XZHamiltonian back = XZHamiltonian::parse(text);
    EXPECT_EQ(back, h);
    EXPECT_EQ(back.serialize(), text);
  }
}

TEST(Hamiltonian, ParseErrorsCarryLineNumbers) {
  try {
    XZHamiltonian::parse("n 2\nk 2\n1 XZ\n0.5 XQ\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.index(), 4u);
  }
  EXPECT_THROW(XZHamiltonian::parse("k 1\n1 Z\n"), ParseError);
  EXPECT_THROW(XZHamiltonian::parse("n x\n1 Z\n"), ParseError);
}

TEST(Hamiltonian, ParsesCommentsAndThresholds) {
  const XZHamiltonian h =
      XZHamiltonian::parse("# two terms\nn 1\nk 1\nalpha 0.25\nbeta 0.75\n1 X  # first\n-0.5 Z\n");
  EXPECT_EQ(h.num_terms(), 2u);
  EXPECT_EQ(*h.alpha(), 0.25);
  EXPECT_EQ(h.term(1).gamma, -0.5);
}

TEST(Spectral, VariationalBound) {
  std::mt19937_64 gen(23);
  const XZHamiltonian h = random_xz(3, 4, gen);
  const double e0 = ground_energy(h);
  const oracle::Matrix m = oracle_dense(h);
  for (int k = 0; k < 20; ++k) {
    const oracle::Vector v = oracle::random_state(3, gen);
    EXPECT_LE(e0, (v.adjoint() * m * v)(0, 0).real() + 1e-12);
  }
}

TEST(Spectral, GroundStateIsEigenvector) {
  std::mt19937_64 gen(24);
  for (int trial = 0; trial < 10; ++trial) {
    const XZHamiltonian h = random_xz(2, 3, gen);
    const GroundState g = ground_state(h);
    const oracle::Matrix m = oracle_dense(h);
    const oracle::Vector v =
        Eigen::Map<const oracle::Vector>(g.state.amplitudes().data(), g.state.dimension());
    EXPECT_LT((m * v - g.energy * v).norm(), 1e-9);
    EXPECT_GE(g.degeneracy, 1u);
  }
}

TEST(Spectral, DegeneracyReported) {
  EXPECT_EQ(ground_state(ham(2, {{1.0, "ZI"}})).degeneracy, 2u);
}

TEST(ShiftScale, ZBecomesHalfIPlusZ) {
  const ShiftScaled s = shift_scale_nonneg(ham(1, {{1.0, "Z"}}));
  EXPECT_NEAR(s.shift, 1.0, 1e-12);
  EXPECT_NEAR(s.scale, 2.0, 1e-12);
  EXPECT_NEAR(ground_energy(s.hamiltonian), 0.0, 1e-9);
  oracle::Matrix expected = (oracle::word("Z") + oracle::word("I")) / 2.0;
  EXPECT_LT((s.hamiltonian.dense() - expected).norm(), 1e-12);
  EXPECT_NEAR(s.map_energy(-1.0), 0.0, 1e-12);
}

TEST(ShiftScale, LeavesValidInputUnchanged) {
  const XZHamiltonian h = ham(1, {{1.0, "I"}, {1.0, "Z"}});
  const ShiftScaled s = shift_scale_nonneg(h);
  EXPECT_EQ(s.shift, 0.0);
  EXPECT_EQ(s.scale, 1.0);
  EXPECT_EQ(s.hamiltonian, h);
}

TEST(ShiftScale, MapsSpectrumAffinely) {
  std::mt19937_64 gen(25);
  for (int trial = 0; trial < 20; ++trial) {
    XZHamiltonian h = random_xz(2, 3, gen);
    h.set_thresholds(-0.1, 0.2);
    const ShiftScaled s = shift_scale_nonneg(h);
    const Spectrum a = diagonalize(h.dense());
    const Spectrum b = diagonalize(s.hamiltonian.dense());
    for (Eigen::Index i = 0; i < a.values.size(); ++i) {
      EXPECT_NEAR(s.map_energy(a.values(i)), b.values(i), 1e-9);
    }
    EXPECT_GE(b.values(0), -1e-9);
    EXPECT_LE(operator_norm(s.hamiltonian), 1.0 + 1e-9);
    EXPECT_NEAR(*s.hamiltonian.alpha(), s.map_energy(-0.1), 1e-12);
  }
}

TEST(Amplify, PowerRounding) {
  EXPECT_EQ(amplification_power(0.0, 0.5), 2u);
  EXPECT_EQ(amplification_power(0.0, 1.0 / 3.0), 3u);
  EXPECT_EQ(amplification_power(0.1, 0.5), 3u);
  EXPECT_EQ(amplification_power(0.0, 1.0), 1u);
  EXPECT_THROW(amplification_power(0.5, 0.5), std::invalid_argument);
}

TEST(Amplify, HalfIPlusHalfZAtPowerTwo) {
  const XZHamiltonian h = ham(1, {{1.0, "I"}, {1.0, "Z"}});
  const Amplified a = amplify_power(h, 2);
  const oracle::Matrix expected =
      0.5 * oracle::word("ZI") + 0.5 * oracle::word("IZ") - 0.25 * oracle::word("ZZ");
  EXPECT_LT((dense_operator(a.raw) - expected).norm(), 1e-12);
  EXPECT_NEAR(oracle::smallest_eigenvalue(expected), -1.25, 1e-12);
  EXPECT_NEAR(ground_energy(a.normalized) * a.rescale, -1.25, 1e-9);
}

TEST(Amplify, PowerOneIsHMinusIdentity) {
  // I - ((1 + 1) I - H) = H - I.
  const XZHamiltonian h = ham(1, {{1.0, "I"}, {0.5, "Z"}});
  const Amplified a = amplify_power(h, 1);
  const oracle::Matrix expected = oracle_dense(h) - oracle::Matrix::Identity(2, 2);
  EXPECT_LT((dense_operator(a.raw) - expected).norm(), 1e-12);
}

TEST(Amplify, PreconditionEnforced) {
  EXPECT_THROW(amplify_power(ham(1, {{1.0, "Z"}}), 2), std::invalid_argument);
}

TEST(Amplify, CapsEnforced) {
  const XZHamiltonian h = ham(1, {{1.0, "I"}, {1.0, "Z"}});
  AmplifyOptions o;
  o.max_terms = 10;
  EXPECT_THROW(amplify_power(h, 3, o), CapacityError);
}

TEST(Amplify, OutputIsXZAndNormalized) {
  std::mt19937_64 gen(26);
  for (int trial = 0; trial < 20; ++trial) {
    const XZHamiltonian h = shift_scale_nonneg(random_xz(1 + gen() % 2, 2, gen)).hamiltonian;
    const std::size_t a = 1 + gen() % 3;
    const Amplified amp = amplify_power(h, a);
    for (const auto& p : amp.raw.strings()) EXPECT_TRUE(p.is_xz());
    EXPECT_TRUE(amp.normalized.is_normal_form());
    EXPECT_EQ(amp.normalized.num_qubits(), h.num_qubits() * a);
    EXPECT_LT((amp.normalized.dense() * amp.rescale - dense_operator(amp.raw)).norm(), 1e-9);
  }
}

TEST(Amplify, GroundEnergyClosedForm) {
  // lambda_0(H') = 1 - (1 + 1/a - lambda_0(H))^a, from the block spectrum.
  std::mt19937_64 gen(27);
  for (int trial = 0; trial < 20; ++trial) {
    const XZHamiltonian h = shift_scale_nonneg(random_xz(1 + gen() % 2, 3, gen)).hamiltonian;
    const std::size_t a = 1 + gen() % 3;
    const Amplified amp = amplify_power(h, a);
    const double l0 = oracle::smallest_eigenvalue(oracle_dense(h));
    const double expected = 1 - std::pow(1 + 1.0 / a - l0, static_cast<double>(a));
    EXPECT_NEAR(oracle::smallest_eigenvalue(dense_operator(amp.raw)), expected, 1e-9);
  }
}
