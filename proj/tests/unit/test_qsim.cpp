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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reldeleg/block_state.hpp"
#include "reldeleg/errors.hpp"
#include "reldeleg/statevector.hpp"

using namespace reldeleg;
using namespace reldeleg::qsim;

namespace {

StateVector from_oracle(const oracle::Vector& v) {
  return StateVector::from_amplitudes(std::vector<Amplitude>(v.data(), v.data() + v.size()));
}

oracle::Vector to_oracle(const StateVector& s) {
  return Eigen::Map<const oracle::Vector>(s.amplitudes().data(), s.dimension());
}

// Phase-insensitive overlap between a state and an oracle vector.
double overlap(const StateVector& s, const oracle::Vector& v) {
  return std::norm(v.dot(to_oracle(s)));
}

}  // namespace

TEST(BasisState, Examples) {
  EXPECT_EQ(basis_state(1).amplitudes(), (std::vector<Amplitude>{1, 0}));
  EXPECT_EQ(basis_state(2).amplitudes(), (std::vector<Amplitude>{1, 0, 0, 0}));
  EXPECT_THROW(basis_state(kDefaultDenseCap + 1), CapacityError);
  EXPECT_THROW(basis_state(0), ShapeError);
}

TEST(EprRegister, OnePair) {
  const StateVector s = epr_register(1);
  const double r = std::sqrt(0.5);
  EXPECT_NEAR(std::abs(s.amplitude(0) - r), 0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(3) - r), 0, 1e-15);
  EXPECT_EQ(s.amplitude(1), Amplitude(0));
  EXPECT_EQ(s.amplitude(2), Amplitude(0));
}

TEST(EprRegister, TwoPairsCorrelated) {
  const StateVector s = epr_register(2);
  EXPECT_EQ(s.qubits("epr_A"), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(s.qubits("epr_B"), (std::vector<std::size_t>{2, 3}));
  EXPECT_NEAR(s.expectation(parse_pauli("ZIZI")), 1.0, 1e-12);
  EXPECT_NEAR(s.expectation(parse_pauli("XIXI")), 1.0, 1e-12);
  EXPECT_NEAR(s.expectation(parse_pauli("ZIIZ")), 0.0, 1e-12);
}

TEST(EprRegister, Errors) {
  EXPECT_THROW(epr_register(0), ShapeError);
  EXPECT_THROW(epr_register(kDefaultDenseCap / 2 + 1), CapacityError);
}

TEST(StateVector, FromAmplitudesValidates) {
  EXPECT_THROW(StateVector::from_amplitudes({1, 0, 0}), ShapeError);
  EXPECT_THROW(StateVector::from_amplitudes({1, 1}), ShapeError);
  EXPECT_NO_THROW(StateVector::from_amplitudes({0, 1}));
}

TEST(Expectation, Examples) {
  const StateVector zero = basis_state(1);
  EXPECT_NEAR(zero.expectation(parse_pauli("Z")), 1.0, 1e-15);
  EXPECT_NEAR(zero.expectation(parse_pauli("X")), 0.0, 1e-15);
  EXPECT_THROW(zero.expectation(parse_pauli("ZZ")), ShapeError);
}

TEST(Expectation, MatchesDenseQuadraticForm) {
  std::mt19937_64 gen(11);
  static const char kLetters[] = "IXYZ";
  for (int trial = 0; trial < 50; ++trial) {
    const oracle::Vector v = oracle::random_state(3, gen);
    std::string w(3, 'I');
    for (auto& c : w) c = kLetters[gen() % 4];
    const double coef = std::uniform_real_distribution<double>(-2, 2)(gen);
    const double expected = (v.adjoint() * oracle::word(w, coef) * v)(0, 0).real();
    PauliString p = parse_pauli(w);
    p.set_coefficient(coef);
    const double got = from_oracle(v).expectation(p);
    EXPECT_NEAR(got, expected, 1e-12);
    EXPECT_LE(std::abs(got), std::abs(coef) + 1e-10);
  }
}

TEST(Gates, PreserveNorm) {
  std::mt19937_64 gen(3);
  StateVector s = from_oracle(oracle::random_state(4, gen));
  for (int k = 0; k < 100; ++k) {
    const std::size_t a = gen() % 4;
    std::size_t b = gen() % 4;
    if (b == a) b = (a + 1) % 4;
    switch (gen() % 3) {
      case 0: s.apply_h(a); break;
      case 1: s.apply_cnot(a, b); break;
      default: s.apply_pauli(parse_pauli("XYZI"));
    }
    ASSERT_NEAR(s.norm(), 1.0, 1e-10);
  }
}

TEST(Gates, ApplyMatchesOracle) {
  std::mt19937_64 gen(5);
  const oracle::Vector v = oracle::random_state(3, gen);
  StateVector s = from_oracle(v);
  s.apply_h(1);
  s.apply_cnot(0, 2);
  oracle::Matrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  oracle::Matrix cnot02 = oracle::Matrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) cnot02((i & 4) ? (i ^ 1) : i, i) = 1;
  const oracle::Vector expected =
      cnot02 * oracle::kron(oracle::kron(oracle::letter('I'), h), oracle::letter('I')) * v;
  EXPECT_LT((to_oracle(s) - expected).norm(), 1e-12);
}

TEST(Measure, DeterministicOnEigenstates) {
  Rng rng(1);
  StateVector zero = basis_state(1);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(zero.measure_observable(parse_pauli("Z"), rng), 1);
  StateVector epr = epr_register(1);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(epr.measure_observable(parse_pauli("ZZ"), rng), 1);
}

TEST(Measure, UniformOnConjugateBasis) {
  Rng rng(2);
  const int draws = 10000;
  int plus = 0;
  for (int k = 0; k < draws; ++k) {
    StateVector s = basis_state(1);
    plus += s.measure_observable(parse_pauli("X"), rng) == 1;
  }
  // 3 sigma of a fair binomial.
  EXPECT_NEAR(plus, draws / 2, 3 * std::sqrt(draws * 0.25));
}

TEST(Measure, RejectsNonBinaryCoefficient) {
  Rng rng(0);
  StateVector s = basis_state(1);
  EXPECT_THROW(s.measure_observable(parse_pauli("0.5 Z"), rng), std::invalid_argument);
}

TEST(Measure, PostStateIsProjection) {
  Rng rng(4);
  StateVector s = basis_state(1);
  const int o = s.measure_observable(parse_pauli("X"), rng);
  EXPECT_NEAR(s.expectation(parse_pauli("X")), o, 1e-12);
}

TEST(BranchObservable, ProbabilitiesMatchProjectors) {
  std::mt19937_64 gen(9);
  const oracle::Vector v = oracle::random_state(2, gen);
  const StateVector s = from_oracle(v);
  const std::size_t q[2] = {0, 1};
  const auto branches = s.branch_observable(q, parse_pauli("XZ"));
  const oracle::Matrix plus = (oracle::Matrix::Identity(4, 4) + oracle::word("XZ")) / 2.0;
  double total = 0;
  for (const auto& b : branches) {
    const double expected =
        b.outcome == 1 ? (v.adjoint() * plus * v)(0, 0).real() : 1 - (v.adjoint() * plus * v)(0, 0).real();
    EXPECT_NEAR(b.probability, expected, 1e-12);
    total += b.probability;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(BellMeasure, OnEprPairGivesZeroZero) {
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    StateVector s = epr_register(1);
    const BellOutcome o = bell_measure(s, 0, 1, rng);
    EXPECT_EQ(o.a, 0);
    EXPECT_EQ(o.b, 0);
  }
}

TEST(BellMeasure, CollisionThrows) {
  Rng rng(5);
  StateVector s = epr_register(1);
  EXPECT_THROW(bell_measure(s, 0, 0, rng), ShapeError);
}

TEST(BellMeasure, UniformOutcomesOnProductInput) {
  Rng rng(6);
  const int draws = 10000;
  std::array<int, 4> counts{};
  for (int k = 0; k < draws; ++k) {
    StateVector s = basis_state(1).kron(epr_register(1));
    const BellOutcome o = bell_measure(s, 0, 1, rng);
    ++counts[2 * o.a + o.b];
  }
  for (int c : counts) EXPECT_NEAR(c, draws / 4, 3 * std::sqrt(draws * 0.25 * 0.75));
}

TEST(BellMeasure, RemoteQubitCarriesFrame) {
  // Exhaustive over the four outcomes for random inputs: the remote qubit is
  // X^a Z^b |phi> up to global phase.
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 20; ++trial) {
    const oracle::Vector phi = oracle::random_state(1, gen);
    const StateVector s = from_oracle(phi).kron(epr_register(1));
    const auto branches = branch_bell(s, 0, 1, BellMode::kRemove);
    ASSERT_EQ(branches.size(), 4u);
    for (const auto& br : branches) {
      EXPECT_NEAR(br.probability, 0.25, 1e-12);
      oracle::Matrix frame = oracle::Matrix::Identity(2, 2);
      if (br.outcome.a) frame = frame * oracle::letter('X');
      if (br.outcome.b) frame = frame * oracle::letter('Z');
      EXPECT_NEAR(overlap(br.state, frame * phi), 1.0, 1e-12);
    }
  }
}

TEST(BellMeasure, KeepModeLeavesBellState) {
  std::mt19937_64 gen(10);
  const StateVector s = from_oracle(oracle::random_state(1, gen)).kron(epr_register(1));
  for (const auto& br : branch_bell(s, 0, 1, BellMode::kKeep)) {
    EXPECT_EQ(br.state.num_qubits(), 3u);
    // Phi_ab on (0, 1): <X^a Z^b ⊗ I applied to (|00>+|11>)/sqrt2 ...>; check
    // the stabilizers XX and ZZ with the matching signs.
    const double xx = br.state.expectation(parse_pauli("XXI"));
    const double zz = br.state.expectation(parse_pauli("ZZI"));
    EXPECT_NEAR(xx, br.outcome.b ? -1.0 : 1.0, 1e-12);
    EXPECT_NEAR(zz, br.outcome.a ? -1.0 : 1.0, 1e-12);
  }
}

TEST(Teleport, FrameIdentityForZAndX) {
  // Measuring Z on the uncorrected remote qubit equals (-1)^{a} times Z on
  // phi; measuring X equals (-1)^{b} times X on phi.
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 20; ++trial) {
    const oracle::Vector phi = oracle::random_state(1, gen);
    const double z = (phi.adjoint() * oracle::letter('Z') * phi)(0, 0).real();
    const double x = (phi.adjoint() * oracle::letter('X') * phi)(0, 0).real();
    const StateVector s = from_oracle(phi).kron(epr_register(1));
    for (const auto& br : branch_bell(s, 0, 1, BellMode::kRemove)) {
      EXPECT_NEAR(br.state.expectation(parse_pauli("Z")), (br.outcome.a ? -1 : 1) * z, 1e-12);
      EXPECT_NEAR(br.state.expectation(parse_pauli("X")), (br.outcome.b ? -1 : 1) * x, 1e-12);
    }
  }
}

TEST(Teleport, OneQubitOneInput) {
  Rng rng(13);
  for (int k = 0; k < 40; ++k) {
    StateVector s = StateVector::from_amplitudes({0, 1}).kron(epr_register(1));
    s.add_register("src", 0, 1);
    const TeleportRecord rec = teleport(s, "src", {0}, rng);
    const std::size_t remote = s.qubits("epr_B")[0];
    const std::size_t q[1] = {remote};
    const int z = s.measure_observable_on(q, parse_pauli("Z"), rng);
    EXPECT_EQ(z, -1 * (rec.a[0] ? -1 : 1));
  }
}

TEST(Teleport, EntanglementSwapping) {
  // Reference R entangled with source S; after teleporting S and correcting,
  // <Z_R Z_remote> = +1.
  Rng rng(14);
  for (int k = 0; k < 20; ++k) {
    StateVector s = epr_register(1);  // (R, S) as epr_A/epr_B of the first pair
    StateVector full = StateVector::from_amplitudes(s.amplitudes()).kron(epr_register(1));
    full.add_register("src", 1, 1);
    const TeleportRecord rec = teleport(full, "src", {0}, rng);
    const std::size_t remote = full.qubits("epr_B")[0];
    PauliString corr(full.num_qubits());
    if (rec.a[0]) corr.set(remote, Pauli::X);
    full.apply_pauli(corr);
    PauliString zz(full.num_qubits());
    zz.set(0, Pauli::Z);
    zz.set(remote, Pauli::Z);
    EXPECT_NEAR(full.expectation(zz), 1.0, 1e-12);
    PauliString xx(full.num_qubits());
    xx.set(0, Pauli::X);
    xx.set(remote, Pauli::X);
    const double sign = rec.b[0] ? -1.0 : 1.0;
    EXPECT_NEAR(full.expectation(xx), sign, 1e-12);
  }
}

TEST(Teleport, CorrectedZeroStateHasFidelityOne) {
  Rng rng(15);
  StateVector s = basis_state(2).kron(epr_register(3));
  s.add_register("src", 0, 2);
  const std::vector<std::size_t> positions = {2, 0};
  const TeleportRecord rec = teleport(s, "src", positions, rng);
  const auto remote_all = s.qubits("epr_B");
  for (std::size_t i = 0; i < 2; ++i) {
    PauliString corr(s.num_qubits());
    const std::size_t r = remote_all[positions[i]];
    const Pauli fix = rec.a[i] ? (rec.b[i] ? Pauli::Y : Pauli::X) : (rec.b[i] ? Pauli::Z : Pauli::I);
    corr.set(r, fix);
    s.apply_pauli(corr);
    PauliString z(s.num_qubits());
    z.set(r, Pauli::Z);
    EXPECT_NEAR(s.expectation(z), 1.0, 1e-10);
  }
}

TEST(Teleport, RejectsBadPositions) {
  Rng rng(0);
  StateVector s = basis_state(2).kron(epr_register(2));
  s.add_register("src", 0, 2);
  EXPECT_THROW(teleport(s, "src", {0, 0}, rng), ShapeError);
  EXPECT_THROW(teleport(s, "src", {0, 5}, rng), ShapeError);
  EXPECT_THROW(teleport(s, "src", {0}, rng), ShapeError);
}

TEST(Consistency, HonestPauliMeasurementsAgree) {
  Rng rng(16);
  for (int k = 0; k < 30; ++k) {
    StateVector s = epr_register(3);
    const char* words[] = {"XZX", "ZZI", "IXZ"};
    const PauliString w = parse_pauli(words[k % 3]);
    for (std::size_t j = 0; j < 3; ++j) {
      if (w[j] == Pauli::I) continue;
      const PauliString single(std::vector<Pauli>{w[j]});
      const std::size_t a[1] = {j};
      const std::size_t b[1] = {3 + j};
      const int oa = s.measure_observable_on(a, single, rng);
      const int ob = s.measure_observable_on(b, single, rng);
      EXPECT_EQ(oa, ob);
    }
  }
}

TEST(WithoutQubits, DropsRegistersAndRenormalizes) {
  StateVector s = basis_state(1).kron(epr_register(1));
  s.add_register("src", 0, 1);
  const std::size_t q[1] = {0};
  const std::uint8_t bits[1] = {0};
  const StateVector t = s.without_qubits(q, bits);
  EXPECT_EQ(t.num_qubits(), 2u);
  EXPECT_NEAR(t.norm(), 1.0, 1e-12);
  EXPECT_EQ(t.qubits("epr_A"), (std::vector<std::size_t>{0}));
}

TEST(BlockState, UntouchedPairsStaySeparate) {
  BlockState bs;
  const auto p1 = bs.add(epr_register(1));
  const auto p2 = bs.add(epr_register(1));
  EXPECT_EQ(bs.num_blocks(), 2u);
  Rng rng(17);
  const std::size_t ids[1] = {p1[0]};
  const int o = bs.measure(ids, parse_pauli("Z"), rng);
  const std::size_t other[1] = {p1[1]};
  EXPECT_EQ(bs.measure(other, parse_pauli("Z"), rng), o);
  EXPECT_EQ(bs.num_blocks(), 2u);
  const std::size_t both[2] = {p1[0], p2[0]};
  bs.expectation(both, parse_pauli("ZZ"));
  EXPECT_EQ(bs.num_blocks(), 1u);
}

TEST(BlockState, TeleportMatchesDenseFrame) {
  std::mt19937_64 gen(18);
  Rng rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const oracle::Vector phi = oracle::random_state(2, gen);
    BlockState bs;
    const auto src = bs.add(from_oracle(phi));
    const auto pa = bs.add(epr_register(1));
    const auto pb = bs.add(epr_register(1));
    const BellOutcome o1 = bs.bell_measure(src[0], pa[0], rng);
    const BellOutcome o2 = bs.bell_measure(src[1], pb[0], rng);
    EXPECT_FALSE(bs.alive(src[0]));
    const std::size_t remote[2] = {pa[1], pb[1]};
    const StateVector got = bs.extract(remote);
    auto frame = [](const BellOutcome& o) {
      oracle::Matrix f = oracle::Matrix::Identity(2, 2);
      if (o.a) f = f * oracle::letter('X');
      if (o.b) f = f * oracle::letter('Z');
      return f;
    };
    EXPECT_NEAR(overlap(got, oracle::kron(frame(o1), frame(o2)) * phi), 1.0, 1e-10);
  }
}

TEST(BlockState, CapOnMerge) {
  BlockState bs(3);
  const auto a = bs.add(epr_register(1));
  const auto b = bs.add(epr_register(1));
  const std::size_t ids[2] = {a[0], b[0]};
  EXPECT_THROW(bs.expectation(ids, parse_pauli("ZZ")), CapacityError);
}
