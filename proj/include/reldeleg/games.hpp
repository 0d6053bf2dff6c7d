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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reldeleg/pauli.hpp"
#include "reldeleg/rng.hpp"

namespace reldeleg::games {

/// Measure sigma_W on the EPR halves (one outcome per slot). Sent to both
/// provers in the consistency test, to P2 in the linearity and energy tests.
struct MeasureQuestion {
  PauliString word;
};

/// Linearity test question for P1: (W(a), W(a')).
struct PairQuestion {
  PauliString first;
  PauliString second;
};

/// One Magic Square question played on EPR pairs (pair_i, pair_j).
struct MagicSquareQuestion {
  bool is_row = true;
  std::size_t index = 0;  ///< row or column in {0, 1, 2}
  std::size_t pair_i = 0;
  std::size_t pair_j = 1;
};

/// Energy test question for P1: teleport your state through these pairs.
struct TeleportQuestion {
  std::vector<std::size_t> positions;
};

using Question = std::variant<MeasureQuestion, PairQuestion, MagicSquareQuestion, TeleportQuestion>;

/// One +-1 outcome per slot.
struct SignsAnswer {
  std::vector<int> values;
};

struct SignsPairAnswer {
  std::vector<int> first;
  std::vector<int> second;
};

/// The two explicit Magic Square entries (the third is implied).
struct MagicSquareAnswer {
  int first = 1;
  int second = 1;
};

/// Teleportation report. Bit a_i corrects X-basis outcomes and b_i corrects
/// Z-basis outcomes at position i, so a_i is the exponent of the Z frame
/// error and b_i the exponent of the X frame error on the receiving qubit.
struct FrameAnswer {
  std::vector<std::uint8_t> a;
  std::vector<std::uint8_t> b;
};

using Answer = std::variant<SignsAnswer, SignsPairAnswer, MagicSquareAnswer, FrameAnswer>;

enum class TestKind {
  kConsistency,
  kLinearity,
  kAnticommutation,
  kEnergy,
  kWrappedAccept,
  kWrappedReject,
  kMagicSquare,
};

std::string to_string(TestKind kind);

/// Everything the verifier saw and decided in one round.
struct Transcript {
  TestKind test = TestKind::kConsistency;
  bool wrapped = false;  ///< played as the inner game of the wrapped game
  std::optional<Question> question1;
  std::optional<Question> question2;
  std::optional<Answer> answer1;
  std::optional<Answer> answer2;
  int linearity_choice = 0;  ///< which of P1's two answers was checked
  // Energy test bookkeeping.
  std::size_t term = 0;
  double gamma = 0;
  std::optional<PauliWord> word;   ///< W before masking
  std::vector<std::uint8_t> mask;  ///< e
  std::vector<int> d;
  double coin = 0;  ///< draw in [0,1) for the |gamma| rejection step
  std::size_t resamples = 0;
  bool accepted = false;
};

// --- Magic Square -----------------------------------------------------------

/// Two-qubit observables of the honest strategy, table[row][column].
const std::array<std::array<PauliString, 3>, 3>& magic_square_table();

/// Product sign of column c: +1 for c in {0, 1}, -1 for c = 2 (ZZ*XX*YY = -I).
int magic_square_column_sign(std::size_t column);

/// Completes (a1, a2) of row r and (b1, b2) of column c and checks a_c = b_r.
bool magic_square_wins(std::size_t row, std::size_t column, const MagicSquareAnswer& row_answer,
                       const MagicSquareAnswer& column_answer);

// --- Energy test rules -------------------------------------------------------

/// Random W in {X, Z}^t.
PauliWord random_word(std::size_t t, Rng& rng);
std::vector<std::uint8_t> random_bits(std::size_t t, Rng& rng);

/// Injective positions T with W(e)_{T_i} equal to letter i of `term`;
/// identity letters take slots with e = 0. Chosen uniformly among valid
/// assignments. Throws NoEmbedding when none exists.
std::vector<std::size_t> embed_positions(const PauliString& term, const PauliWord& word,
                                         const std::vector<std::uint8_t>& mask, Rng& rng);

/// d_i = (-1)^{a_i} c_{T_i} where W_{T_i} = X, (-1)^{b_i} c_{T_i} where
/// W_{T_i} = Z, and +1 where the term letter is I.
std::vector<int> corrected_outcomes(const PauliString& term, const PauliWord& word,
                                    const std::vector<std::size_t>& positions,
                                    const FrameAnswer& frame, const std::vector<int>& c);

/// Accept when prod d != sign(gamma); otherwise reject iff coin < |gamma|.
bool energy_verdict(const std::vector<int>& d, double gamma, double coin);

/// Recomputes d and the verdict from the stored questions and answers.
/// Returns false when the transcript is internally inconsistent. When
/// `terms` is non-empty the energy-test term letters are checked too.
bool audit(const Transcript& transcript, const std::vector<PauliString>& terms = {});

}  // namespace reldeleg::games
