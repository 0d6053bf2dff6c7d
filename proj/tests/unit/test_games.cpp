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
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reldeleg/errors.hpp"
#include "reldeleg/games.hpp"
#include "reldeleg/rounds.hpp"
#include "reldeleg/strategies.hpp"

using namespace reldeleg;
using namespace reldeleg::games;

namespace {

XZHamiltonian ham(std::size_t n, std::initializer_list<std::pair<double, const char*>> terms) {
  std::vector<HamiltonianTerm> t;
  for (const auto& [g, w] : terms) t.push_back({g, parse_pauli(w)});
  return XZHamiltonian(n, std::move(t));
}

std::vector<std::uint8_t> ones(std::size_t t) { return std::vector<std::uint8_t>(t, 1); }

// W(e)_{T_i} equals letter i of the term, and T is injective.
bool embedding_valid(const PauliString& term, const PauliWord& w, const std::vector<std::uint8_t>& e,
                     const std::vector<std::size_t>& positions) {
  if (positions.size() != term.size()) return false;
  if (std::set<std::size_t>(positions.begin(), positions.end()).size() != positions.size()) {
    return false;
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const std::size_t s = positions[i];
    if (s >= w.size()) return false;
    const Pauli shown = e[s] ? w[s] : Pauli::I;
    if (shown != term[i]) return false;
  }
  return true;
}

}  // namespace

TEST(MagicSquare, TableRowsAndColumnsMultiplyToSignedIdentity) {
  const auto& table = magic_square_table();
  const oracle::Matrix id = oracle::Matrix::Identity(4, 4);
  for (std::size_t r = 0; r < 3; ++r) {
    oracle::Matrix prod = id;
    for (std::size_t c = 0; c < 3; ++c) prod = prod * dense_matrix(table[r][c]);
    EXPECT_LT((prod - id).norm(), 1e-12);
  }
  for (std::size_t c = 0; c < 3; ++c) {
    oracle::Matrix prod = id;
    for (std::size_t r = 0; r < 3; ++r) prod = prod * dense_matrix(table[r][c]);
    EXPECT_LT((prod - double(magic_square_column_sign(c)) * id).norm(), 1e-12);
  }
}

TEST(MagicSquare, ColumnSigns) {
  EXPECT_EQ(magic_square_column_sign(0), 1);
  EXPECT_EQ(magic_square_column_sign(1), 1);
  EXPECT_EQ(magic_square_column_sign(2), -1);
}

TEST(MagicSquare, WinRuleCompletesThirdEntries) {
  // Brute force over every answer pair: the completed row and column must
  // agree on the shared cell.
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      for (int bits = 0; bits < 16; ++bits) {
        const MagicSquareAnswer ra{bits & 1 ? -1 : 1, bits & 2 ? -1 : 1};
        const MagicSquareAnswer ca{bits & 4 ? -1 : 1, bits & 8 ? -1 : 1};
        const int row[3] = {ra.first, ra.second, ra.first * ra.second};
        const int sign = c == 2 ? -1 : 1;
        const int col[3] = {ca.first, ca.second, sign * ca.first * ca.second};
        EXPECT_EQ(magic_square_wins(r, c, ra, ca), row[c] == col[r]);
      }
    }
  }
}

TEST(Embedding, ExampleMatch) {
  Rng rng(1);
  const PauliString term = parse_pauli("XZ");
  const PauliWord w = PauliWord::from_string("XZXZ");
  const auto t = embed_positions(term, w, ones(4), rng);
  EXPECT_TRUE(embedding_valid(term, w, ones(4), t));
}

TEST(Embedding, NoXSlot) {
  Rng rng(2);
  EXPECT_THROW(
      embed_positions(parse_pauli("XX"), PauliWord::from_string("ZZZZ"), ones(4), rng),
      NoEmbedding);
}

TEST(Embedding, IdentityLettersUseMaskedSlots) {
  Rng rng(3);
  const PauliWord w = PauliWord::from_string("XZXZ");
  const std::vector<std::uint8_t> e{1, 0, 1, 1};
  const auto t = embed_positions(parse_pauli("IX"), w, e, rng);
  EXPECT_EQ(t[0], 1u);
  EXPECT_THROW(embed_positions(parse_pauli("IX"), w, ones(4), rng), NoEmbedding);
}

TEST(Embedding, AuditOverManyDraws) {
  Rng rng(4);
  const PauliString term = parse_pauli("XIZ");
  std::size_t successes = 0;
  for (int k = 0; k < 10000; ++k) {
    const PauliWord w = random_word(8, rng);
    const auto e = random_bits(8, rng);
    try {
      const auto t = embed_positions(term, w, e, rng);
      ASSERT_TRUE(embedding_valid(term, w, e, t));
      ++successes;
    } catch (const NoEmbedding&) {
    }
  }
  EXPECT_GT(successes, 5000u);
}

TEST(Embedding, UniformOverValidSlots) {
  // X letter into W(e) = XXXX: each slot chosen with probability 1/4.
  Rng rng(5);
  std::array<int, 4> counts{};
  const int draws = 40000;
  for (int k = 0; k < draws; ++k) {
    ++counts[embed_positions(parse_pauli("X"), PauliWord::from_string("XXXX"), ones(4), rng)[0]];
  }
  const double sigma = std::sqrt(draws * 0.25 * 0.75);
  for (int c : counts) EXPECT_LT(std::abs(c - draws / 4.0), 4 * sigma);
}

TEST(EnergyRules, CorrectedOutcomes) {
  const PauliWord w = PauliWord::from_string("XZXZ");
  const FrameAnswer frame{{1, 0}, {0, 1}};
  const std::vector<int> c{1, 1, 1, 1};
  EXPECT_EQ(corrected_outcomes(parse_pauli("XZ"), w, {0, 1}, frame, c), (std::vector<int>{-1, -1}));
  const FrameAnswer frame2{{0, 1}, {1, 0}};
  EXPECT_EQ(corrected_outcomes(parse_pauli("XZ"), w, {0, 1}, frame2, c), (std::vector<int>{1, 1}));
  EXPECT_EQ(corrected_outcomes(parse_pauli("IZ"), w, {0, 1}, frame, {-1, -1, 1, 1}),
            (std::vector<int>{1, 1}));
}

TEST(EnergyRules, Verdict) {
  EXPECT_TRUE(energy_verdict({-1}, 1.0, 0.0));
  EXPECT_TRUE(energy_verdict({1}, -0.5, 0.0));
  EXPECT_FALSE(energy_verdict({1}, 0.3, 0.2));
  EXPECT_TRUE(energy_verdict({1}, 0.3, 0.5));
  EXPECT_FALSE(energy_verdict({1, -1}, -1.0, 0.999));
  EXPECT_TRUE(energy_verdict({1}, 0.0, 0.0));
}

TEST(Rounds, DefaultPairCount) {
  EXPECT_EQ(default_pair_count(1, 1), 4u);
  EXPECT_EQ(default_pair_count(2, 2), 8u);
  EXPECT_EQ(default_pair_count(3, 2), 14u);
}

TEST(Rounds, PairCountValidation) {
  const XZHamiltonian h = ham(2, {{1.0, "ZZ"}});
  GameConfig cfg;
  cfg.t = 1;
  EXPECT_THROW(pair_count(cfg, h), std::invalid_argument);
  cfg.t = 4;
  cfg.p = 1.5;
  EXPECT_THROW(pair_count(cfg, h), std::invalid_argument);
  cfg.p = 0.5;
  EXPECT_EQ(pair_count(cfg, h), 4u);
}

TEST(Rounds, EnergyTranscriptsAudit) {
  const XZHamiltonian h = ham(2, {{1.0, "XZ"}, {-0.5, "ZI"}, {0.25, "XX"}});
  std::vector<PauliString> terms;
  for (const auto& t : h.terms()) terms.push_back(t.letters);
  GameConfig cfg;
  cfg.t = 6;
  const auto [s1, s2] = strategies::honest_pair(h, 6);
  for (std::uint64_t r = 0; r < 300; ++r) {
    const Transcript tr = energy_test_round(h, s1, s2, cfg, Rng(9).split(r));
    ASSERT_EQ(tr.test, TestKind::kEnergy);
    EXPECT_TRUE(audit(tr, terms));
    Transcript bad = tr;
    bad.d[0] = -bad.d[0];
    EXPECT_FALSE(audit(bad, terms));
  }
}

TEST(Rounds, PbtTranscriptsAudit) {
  const auto s = strategies::honest_prover();
  const auto bad = strategies::bit_flip_adversary(
      s, {strategies::FlipField::kMeasurement, {1, 0, 0}});
  for (std::uint64_t r = 0; r < 300; ++r) {
    const Transcript tr = pbt_round(s, bad, 3, Rng(10).split(r));
    EXPECT_TRUE(audit(tr));
    Transcript flipped = tr;
    flipped.accepted = !flipped.accepted;
    EXPECT_FALSE(audit(flipped));
  }
}

TEST(Rounds, EmbeddingExhaustionThrows) {
  const XZHamiltonian h = ham(3, {{1.0, "XXX"}});
  GameConfig cfg;
  cfg.t = 3;
  cfg.max_embed_resamples = 2;
  const auto [s1, s2] = strategies::honest_pair(h, 3);
  bool thrown = false;
  for (std::uint64_t r = 0; r < 50 && !thrown; ++r) {
    try {
      energy_test_round(h, s1, s2, cfg, Rng(11).split(r));
    } catch (const NoEmbedding&) {
      thrown = true;
    }
  }
  EXPECT_TRUE(thrown);
}

TEST(Rounds, RejectsAbnormalHamiltonian) {
  const XZHamiltonian h = ham(1, {{2.0, "Z"}});
  GameConfig cfg;
  cfg.t = 2;
  const auto s = strategies::honest_prover();
  EXPECT_THROW(energy_test_round(h, s, s, cfg, Rng(1)), std::invalid_argument);
}

class TestLabelFrequency : public ::testing::TestWithParam<double> {};

TEST_P(TestLabelFrequency, MatchesP) {
  const double p = GetParam();
  const XZHamiltonian h = ham(1, {{1.0, "Z"}});
  GameConfig cfg;
  cfg.p = p;
  cfg.t = 2;
  const auto [s1, s2] = strategies::honest_pair(h, 2);
  const int rounds = 10000;
  int energy = 0;
  for (int r = 0; r < rounds; ++r) {
    const Transcript tr = hamiltonian_test_round(h, s1, s2, cfg, Rng(12).split(r));
    if (tr.test == TestKind::kEnergy) ++energy;
  }
  if (p == 0.0) {
    EXPECT_EQ(energy, 0);
  } else if (p == 1.0) {
    EXPECT_EQ(energy, rounds);
  } else {
    const double sigma = std::sqrt(rounds * p * (1 - p));
    EXPECT_LT(std::abs(energy - rounds * p), 3 * sigma);
  }
}

INSTANTIATE_TEST_SUITE_P(Mixture, TestLabelFrequency, ::testing::Values(0.0, 0.5, 1.0));

TEST(Wrapped, BranchFrequencies) {
  const XZHamiltonian h = ham(1, {{1.0, "Z"}});
  GameConfig cfg;
  cfg.p = 0.5;
  const WrappedGame g = make_wrapped_game(h, -0.9, 0.9, cfg);
  EXPECT_NEAR(g.accept_weight + g.reject_weight, 0.5, 1e-12);
  const auto [s1, s2] = strategies::honest_pair(g.inner, pair_count(cfg, g.inner));
  const int rounds = 10000;
  int acc = 0;
  int rej = 0;
  int inner = 0;
  for (int r = 0; r < rounds; ++r) {
    const Transcript tr = wrapped_game_round(g, s1, s2, cfg, Rng(13).split(r));
    EXPECT_TRUE(tr.wrapped);
    if (tr.test == TestKind::kWrappedAccept) {
      ++acc;
    } else if (tr.test == TestKind::kWrappedReject) {
      ++rej;
    } else {
      ++inner;
    }
  }
  const auto check = [&](int count, double prob) {
    EXPECT_LT(std::abs(count - rounds * prob), 3 * std::sqrt(rounds * prob * (1 - prob)) + 1e-9)
        << "expected weight " << prob;
  };
  check(acc, g.accept_weight);
  check(rej, g.reject_weight);
  check(inner, 0.5);
}

TEST(Wrapped, InvalidMixtureThrows) {
  const XZHamiltonian h = ham(1, {{1.0, "Z"}});
  GameConfig cfg;
  cfg.eta_prime = 10;
  EXPECT_THROW(make_wrapped_game(h, -0.9, 0.9, cfg), std::invalid_argument);
}

TEST(TestKind, Labels) {
  EXPECT_EQ(to_string(TestKind::kConsistency), "consistency");
  EXPECT_EQ(to_string(TestKind::kWrappedReject), "wrapped-reject");
}
