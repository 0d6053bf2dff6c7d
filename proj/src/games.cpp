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

#include "reldeleg/games.hpp"

#include <cmath>
#include <numeric>

#include "reldeleg/errors.hpp"

namespace reldeleg::games {

std::string to_string(TestKind kind) {
  switch (kind) {
    case TestKind::kConsistency: return "consistency";
    case TestKind::kLinearity: return "linearity";
    case TestKind::kAnticommutation: return "anticommutation";
    case TestKind::kEnergy: return "energy";
    case TestKind::kWrappedAccept: return "wrapped-accept";
    case TestKind::kWrappedReject: return "wrapped-reject";
    case TestKind::kMagicSquare: return "magic-square";
  }
  return "unknown";
}

const std::array<std::array<PauliString, 3>, 3>& magic_square_table() {
  static const std::array<std::array<PauliString, 3>, 3> table = {{
      {parse_pauli("IZ"), parse_pauli("ZI"), parse_pauli("ZZ")},
      {parse_pauli("XI"), parse_pauli("IX"), parse_pauli("XX")},
      {parse_pauli("XZ"), parse_pauli("ZX"), parse_pauli("YY")},
  }};
  return table;
}

int magic_square_column_sign(std::size_t column) {
  if (column > 2) throw ShapeError("Magic Square column out of range");
  return column == 2 ? -1 : 1;
}

namespace {

void check_sign(int v) {
  if (v != 1 && v != -1) throw ShapeError("Magic Square answers must be +1 or -1");
}

}  // namespace

bool magic_square_wins(std::size_t row, std::size_t column, const MagicSquareAnswer& row_answer,
                       const MagicSquareAnswer& column_answer) {
  if (row > 2) throw ShapeError("Magic Square row out of range");
  check_sign(row_answer.first);
  check_sign(row_answer.second);
  check_sign(column_answer.first);
  check_sign(column_answer.second);
  const std::array<int, 3> a = {row_answer.first, row_answer.second,
                                row_answer.first * row_answer.second};
  const std::array<int, 3> b = {column_answer.first, column_answer.second,
                                magic_square_column_sign(column) * column_answer.first *
                                    column_answer.second};
  return a[column] == b[row];
}

PauliWord random_word(std::size_t t, Rng& rng) {
  std::vector<Pauli> letters(t);
  for (auto& l : letters) l = rng.bit() ? Pauli::Z : Pauli::X;
  return PauliWord(std::move(letters));
}

std::vector<std::uint8_t> random_bits(std::size_t t, Rng& rng) {
  std::vector<std::uint8_t> bits(t);
  for (auto& b : bits) b = rng.bit() ? 1 : 0;
  return bits;
}

std::vector<std::size_t> embed_positions(const PauliString& term, const PauliWord& word,
                                         const std::vector<std::uint8_t>& mask, Rng& rng) {
  if (word.size() != mask.size()) throw ShapeError("word and mask lengths differ");
  if (!term.is_xz()) throw ShapeError("term contains Y");
  // Slots by the letter W(e) shows there: 0 = I, 1 = X, 2 = Z.
  std::array<std::vector<std::size_t>, 3> slots;
  for (std::size_t j = 0; j < word.size(); ++j) {
    const int cls = mask[j] == 0 ? 0 : (word[j] == Pauli::X ? 1 : 2);
    slots[cls].push_back(j);
  }
  auto class_of = [](Pauli p) { return p == Pauli::I ? 0 : (p == Pauli::X ? 1 : 2); };
  std::array<std::size_t, 3> need{};
  for (std::size_t i = 0; i < term.size(); ++i) ++need[class_of(term[i])];
  for (int c = 0; c < 3; ++c) {
    if (need[c] > slots[c].size()) throw NoEmbedding("no injective embedding for " + term.word());
  }
  // A partial Fisher-Yates shuffle per class gives a uniform injective map.
  std::array<std::size_t, 3> used{};
  std::vector<std::size_t> positions(term.size());
  for (std::size_t i = 0; i < term.size(); ++i) {
    const int c = class_of(term[i]);
    auto& pool = slots[c];
    const std::size_t k = used[c]++;
    std::swap(pool[k], pool[k + rng.below(pool.size() - k)]);
    positions[i] = pool[k];
  }
  return positions;
}

std::vector<int> corrected_outcomes(const PauliString& term, const PauliWord& word,
                                    const std::vector<std::size_t>& positions,
                                    const FrameAnswer& frame, const std::vector<int>& c) {
  const std::size_t n = term.size();
  if (positions.size() != n || frame.a.size() != n || frame.b.size() != n) {
    throw ShapeError("frame answer does not match the term length");
  }
  if (c.size() != word.size()) throw ShapeError("outcome count does not match the word length");
  std::vector<int> d(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (term[i] == Pauli::I) continue;
    const std::size_t slot = positions[i];
    if (slot >= word.size()) throw ShapeError("position out of range");
    const int flip = word[slot] == Pauli::X ? frame.a[i] : frame.b[i];
    d[i] = (flip & 1) ? -c[slot] : c[slot];
  }
  return d;
}

bool energy_verdict(const std::vector<int>& d, double gamma, double coin) {
  const int product = std::accumulate(d.begin(), d.end(), 1, std::multiplies<>());
  const int sign = gamma < 0 ? -1 : 1;
  if (product != sign) return true;
  return coin >= std::abs(gamma);
}

namespace {

template <class T, class V>
const T* get(const std::optional<V>& v) {
  return v ? std::get_if<T>(&*v) : nullptr;
}

bool audit_energy(const Transcript& tr, const std::vector<PauliString>& terms) {
  const auto* q1 = get<TeleportQuestion>(tr.question1);
  const auto* q2 = get<MeasureQuestion>(tr.question2);
  const auto* a1 = get<FrameAnswer>(tr.answer1);
  const auto* a2 = get<SignsAnswer>(tr.answer2);
  if (!q1 || !q2 || !a1 || !a2 || !tr.word) return false;
  if (!(restrict_word(*tr.word, tr.mask) == q2->word)) return false;
  // The term letters are what W(e) shows at the embedded slots.
  PauliString letters(q1->positions.size());
  for (std::size_t i = 0; i < q1->positions.size(); ++i) {
    if (q1->positions[i] >= q2->word.size()) return false;
    letters.set(i, q2->word[q1->positions[i]]);
  }
  if (!terms.empty()) {
    if (tr.term >= terms.size() || !terms[tr.term].same_letters(letters)) return false;
  }
  const auto d = corrected_outcomes(letters, *tr.word, q1->positions, *a1, a2->values);
  return d == tr.d && energy_verdict(d, tr.gamma, tr.coin) == tr.accepted;
}

}  // namespace

bool audit(const Transcript& tr, const std::vector<PauliString>& terms) {
  try {
    switch (tr.test) {
      case TestKind::kConsistency: {
        const auto* q1 = get<MeasureQuestion>(tr.question1);
        const auto* q2 = get<MeasureQuestion>(tr.question2);
        const auto* a1 = get<SignsAnswer>(tr.answer1);
        const auto* a2 = get<SignsAnswer>(tr.answer2);
        if (!q1 || !q2 || !a1 || !a2 || !(q1->word == q2->word)) return false;
        return tr.accepted == (a1->values == a2->values);
      }
      case TestKind::kLinearity: {
        const auto* q1 = get<PairQuestion>(tr.question1);
        const auto* q2 = get<MeasureQuestion>(tr.question2);
        const auto* a1 = get<SignsPairAnswer>(tr.answer1);
        const auto* a2 = get<SignsAnswer>(tr.answer2);
        if (!q1 || !q2 || !a1 || !a2) return false;
        const PauliString& sent = tr.linearity_choice == 0 ? q1->first : q1->second;
        if (!(sent == q2->word)) return false;
        const auto& b = tr.linearity_choice == 0 ? a1->first : a1->second;
        return tr.accepted == (b == a2->values);
      }
      case TestKind::kAnticommutation:
      case TestKind::kMagicSquare: {
        const auto* q1 = get<MagicSquareQuestion>(tr.question1);
        const auto* q2 = get<MagicSquareQuestion>(tr.question2);
        const auto* a1 = get<MagicSquareAnswer>(tr.answer1);
        const auto* a2 = get<MagicSquareAnswer>(tr.answer2);
        if (!q1 || !q2 || !a1 || !a2 || !q1->is_row || q2->is_row) return false;
        return tr.accepted == magic_square_wins(q1->index, q2->index, *a1, *a2);
      }
      case TestKind::kEnergy:
        return audit_energy(tr, terms);
      case TestKind::kWrappedAccept:
        return tr.accepted;
      case TestKind::kWrappedReject:
        return !tr.accepted;
    }
  } catch (const std::invalid_argument&) {
    return false;
  }
  return false;
}

}  // namespace reldeleg::games
