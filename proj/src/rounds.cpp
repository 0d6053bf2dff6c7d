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

#include "reldeleg/rounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "reldeleg/errors.hpp"

namespace reldeleg::games {

namespace {

// Split streams of a round generator.
constexpr std::uint64_t kQuestions = 0;
constexpr std::uint64_t kFirst = 1;
constexpr std::uint64_t kSecond = 2;
constexpr std::uint64_t kCoin = 3;
constexpr std::uint64_t kPick = 4;
constexpr std::uint64_t kInner = 5;

template <class T>
const T& expect(const Answer& answer) {
  const T* p = std::get_if<T>(&answer);
  if (!p) throw ShapeError("prover answer has the wrong type for its question");
  return *p;
}

void expect_length(const std::vector<int>& values, std::size_t t) {
  if (values.size() != t) throw ShapeError("prover answer has the wrong length");
  for (int v : values) {
    if (v != 1 && v != -1) throw ShapeError("prover outcomes must be +1 or -1");
  }
}

// Plays one pair of questions against fresh shared entanglement.
void play(Transcript& tr, const ProverStrategy& s1, const ProverStrategy& s2, std::size_t pairs,
          const Rng& rng, std::size_t cap) {
  strategies::SharedEntanglement shared(pairs, cap);
  strategies::ProverView v1(shared, 0);
  strategies::ProverView v2(shared, 1);
  Rng r1 = rng.split(kFirst);
  Rng r2 = rng.split(kSecond);
  tr.answer1 = strategies::respond(s1, *tr.question1, v1, r1);
  tr.answer2 = strategies::respond(s2, *tr.question2, v2, r2);
}

}  // namespace

std::size_t default_pair_count(std::size_t n, std::size_t k) {
  const double nn = static_cast<double>(n);
  return static_cast<std::size_t>(std::ceil(2.0 * nn * std::log2(std::max(nn, 2.0)))) + 2 * k;
}

std::size_t pair_count(const GameConfig& cfg, const XZHamiltonian& h) {
  if (!(cfg.p >= 0 && cfg.p <= 1)) throw std::invalid_argument("p must lie in [0, 1]");
  const std::size_t t =
      cfg.t != 0 ? cfg.t : default_pair_count(h.num_qubits(), h.locality());
  if (t < h.num_qubits()) throw std::invalid_argument("t must be at least n");
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  return t;
}

Transcript magic_square_round(const ProverStrategy& rows, const ProverStrategy& columns,
                              const Rng& rng) {
  Rng q = rng.split(kQuestions);
  Transcript tr;
  tr.test = TestKind::kMagicSquare;
  const std::size_t r = q.below(3);
  const std::size_t c = q.below(3);
  tr.question1 = MagicSquareQuestion{true, r, 0, 1};
  tr.question2 = MagicSquareQuestion{false, c, 0, 1};
  play(tr, rows, columns, 2, rng, kDefaultDenseCap);
  tr.accepted = magic_square_wins(r, c, expect<MagicSquareAnswer>(*tr.answer1),
                                  expect<MagicSquareAnswer>(*tr.answer2));
  return tr;
}

Transcript pbt_round(const ProverStrategy& s1, const ProverStrategy& s2, std::size_t t,
                     const Rng& rng, std::size_t cap) {
  if (t < 2) throw std::invalid_argument("the braiding test needs t >= 2");
  Rng q = rng.split(kQuestions);
  Transcript tr;
  switch (q.below(3)) {
    case 0: {
      tr.test = TestKind::kConsistency;
      const PauliWord w = random_word(t, q);
      const PauliString word = restrict_word(w, random_bits(t, q));
      tr.question1 = MeasureQuestion{word};
      tr.question2 = MeasureQuestion{word};
      play(tr, s1, s2, t, rng, cap);
      const auto& b = expect<SignsAnswer>(*tr.answer1).values;
      const auto& c = expect<SignsAnswer>(*tr.answer2).values;
      expect_length(b, t);
      expect_length(c, t);
      tr.accepted = b == c;
      break;
    }
    case 1: {
      tr.test = TestKind::kLinearity;
      const PauliWord w = random_word(t, q);
      const PauliString first = restrict_word(w, random_bits(t, q));
      const PauliString second = restrict_word(w, random_bits(t, q));
      tr.linearity_choice = q.bit() ? 1 : 0;
      tr.question1 = PairQuestion{first, second};
      tr.question2 = MeasureQuestion{tr.linearity_choice == 0 ? first : second};
      play(tr, s1, s2, t, rng, cap);
      const auto& pair = expect<SignsPairAnswer>(*tr.answer1);
      const auto& c = expect<SignsAnswer>(*tr.answer2).values;
      expect_length(pair.first, t);
      expect_length(pair.second, t);
      expect_length(c, t);
      tr.accepted = (tr.linearity_choice == 0 ? pair.first : pair.second) == c;
      break;
    }
    default: {
      tr.test = TestKind::kAnticommutation;
      const std::size_t i = q.below(t);
      std::size_t j = q.below(t - 1);
      if (j >= i) ++j;
      const std::size_t r = q.below(3);
      const std::size_t c = q.below(3);
      tr.question1 = MagicSquareQuestion{true, r, i, j};
      tr.question2 = MagicSquareQuestion{false, c, i, j};
      play(tr, s1, s2, t, rng, cap);
      tr.accepted = magic_square_wins(r, c, expect<MagicSquareAnswer>(*tr.answer1),
                                      expect<MagicSquareAnswer>(*tr.answer2));
      break;
    }
  }
  return tr;
}

Transcript energy_test_round(const XZHamiltonian& h, const ProverStrategy& s1,
                             const ProverStrategy& s2, const GameConfig& cfg, const Rng& rng) {
  h.require_normal_form();
  const std::size_t t = pair_count(cfg, h);
  Rng q = rng.split(kQuestions);
  Transcript tr;
  tr.test = TestKind::kEnergy;
  tr.term = q.below(h.num_terms());
  const HamiltonianTerm& term = h.term(tr.term);
  tr.gamma = term.gamma;
  std::vector<std::size_t> positions;
  for (;;) {
    PauliWord w = random_word(t, q);
    std::vector<std::uint8_t> e = random_bits(t, q);
    try {
      positions = embed_positions(term.letters, w, e, q);
      tr.word = std::move(w);
      tr.mask = std::move(e);
      break;
    } catch (const NoEmbedding&) {
      if (tr.resamples == cfg.max_embed_resamples) {
        throw NoEmbedding("no embedding of " + term.letters.word() + " after " +
                          std::to_string(tr.resamples) + " resamples");
      }
      ++tr.resamples;
    }
  }
  tr.question1 = TeleportQuestion{positions};
  tr.question2 = MeasureQuestion{restrict_word(*tr.word, tr.mask)};
  play(tr, s1, s2, t, rng, cfg.cap);
  const auto& frame = expect<FrameAnswer>(*tr.answer1);
  const auto& c = expect<SignsAnswer>(*tr.answer2).values;
  expect_length(c, t);
  tr.d = corrected_outcomes(term.letters, *tr.word, positions, frame, c);
  tr.coin = rng.split(kCoin).uniform();
  tr.accepted = energy_verdict(tr.d, tr.gamma, tr.coin);
  return tr;
}

Transcript hamiltonian_test_round(const XZHamiltonian& h, const ProverStrategy& s1,
                                  const ProverStrategy& s2, const GameConfig& cfg,
                                  const Rng& rng) {
  const std::size_t t = pair_count(cfg, h);
  if (rng.split(kPick).uniform() < cfg.p) return energy_test_round(h, s1, s2, cfg, rng);
  return pbt_round(s1, s2, t, rng, cfg.cap);
}

WrappedGame make_wrapped_game(const XZHamiltonian& h, double alpha, double beta,
                              const GameConfig& cfg, const AmplifyOptions& options) {
  if (!(cfg.p >= 0 && cfg.p <= 1)) throw std::invalid_argument("p must lie in [0, 1]");
  if (!(alpha < beta)) throw std::invalid_argument("alpha must be below beta");
  const ShiftScaled pre = shift_scale_nonneg(h, options.cap);
  const Amplified amp =
      amplify(pre.hamiltonian, pre.map_energy(alpha), pre.map_energy(beta), options);
  const XZHamiltonian& inner = amp.normalized;
  const double m = static_cast<double>(inner.num_terms());
  WrappedGame g{inner};
  g.rescale = amp.rescale;
  g.power = amp.power;
  g.shift = pre.shift;
  g.scale = pre.scale;
  g.eta_prime = cfg.eta_prime;
  g.c = 1.0 - cfg.p * (inner.sum_abs_gamma() / (2.0 * m) + (0.5 / amp.rescale) / 2.0);
  g.reject_weight = (2.0 * g.c - cfg.eta_prime) / 4.0;
  g.accept_weight = 0.5 - g.reject_weight;
  const auto in_unit = [](double w) { return w >= 0 && w <= 1; };
  if (!in_unit(g.reject_weight) || !in_unit(g.accept_weight)) {
    throw std::invalid_argument("wrapped game mixture weights leave [0, 1]");
  }
  return g;
}

Transcript wrapped_game_round(const WrappedGame& game, const ProverStrategy& s1,
                              const ProverStrategy& s2, const GameConfig& cfg, const Rng& rng) {
  const double u = rng.split(kPick).uniform();
  if (u < game.accept_weight + game.reject_weight) {
    Transcript tr;
    const bool accept = u < game.accept_weight;
    tr.test = accept ? TestKind::kWrappedAccept : TestKind::kWrappedReject;
    tr.wrapped = true;
    tr.accepted = accept;
    return tr;
  }
  Transcript tr = hamiltonian_test_round(game.inner, s1, s2, cfg, rng.split(kInner));
  tr.wrapped = true;
  return tr;
}

}  // namespace reldeleg::games
