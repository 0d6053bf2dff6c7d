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

#include "reldeleg/strategies.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "reldeleg/errors.hpp"
#include "reldeleg/spectral.hpp"

namespace reldeleg::strategies {

using games::Answer;
using games::FrameAnswer;
using games::MagicSquareAnswer;
using games::MagicSquareQuestion;
using games::MeasureQuestion;
using games::PairQuestion;
using games::Question;
using games::SignsAnswer;
using games::SignsPairAnswer;
using games::TeleportQuestion;

std::pair<ProverStrategy, ProverStrategy> honest_pair(const XZHamiltonian& h, std::size_t t,
                                                      std::size_t cap) {
  if (t < h.num_qubits()) throw std::invalid_argument("t must be at least n");
  ProverStrategy p1 = honest_prover();
  p1.state = std::make_shared<const qsim::StateVector>(ground_state(h, cap).state);
  return {std::move(p1), honest_prover()};
}

ProverStrategy honest_prover() { return ProverStrategy{}; }

ProverStrategy constant_prover() {
  ProverStrategy s;
  s.behavior = Behavior::kConstant;
  s.label = "constant";
  return s;
}

ProverStrategy teleport_state_adversary(qsim::StateVector state) {
  ProverStrategy s;
  s.behavior = Behavior::kTeleportState;
  s.state = std::make_shared<const qsim::StateVector>(std::move(state));
  s.label = "teleport";
  return s;
}

ProverStrategy classical_table_strategy(const MagicSquareTable& table) {
  for (const auto& entry : table) {
    for (int v : entry) {
      if (v != 1 && v != -1) throw ShapeError("table entries must be +1 or -1");
    }
  }
  ProverStrategy s;
  s.behavior = Behavior::kClassicalTable;
  s.table = table;
  s.label = "table";
  return s;
}

ProverStrategy classical_table_strategy(const std::vector<std::vector<int>>& table) {
  if (table.size() != 6) throw ShapeError("table needs 6 questions (3 rows, 3 columns)");
  MagicSquareTable t{};
  for (std::size_t q = 0; q < 6; ++q) {
    if (table[q].size() != 2) throw ShapeError("table entry needs 2 answers");
    t[q] = {table[q][0], table[q][1]};
  }
  return classical_table_strategy(t);
}

ProverStrategy bit_flip_adversary(ProverStrategy base, FlipMask mask) {
  if (std::any_of(mask.bits.begin(), mask.bits.end(), [](std::uint8_t b) { return b > 1; })) {
    throw ShapeError("flip mask entries must be 0 or 1");
  }
  base.flips.push_back(std::move(mask));
  return base;
}

ProverStrategy late_answer(ProverStrategy base, double delay) {
  if (!(delay >= 0) || !std::isfinite(delay)) throw std::invalid_argument("delay must be >= 0");
  base.delay = delay;
  return base;
}

SharedEntanglement::SharedEntanglement(std::size_t pairs, std::size_t cap)
    : state_(cap), ids_(pairs) {
  if (pairs == 0) throw ShapeError("at least one EPR pair required");
}

SharedEntanglement::QubitId SharedEntanglement::half(int side, std::size_t index) {
  if (index >= ids_.size()) throw ShapeError("EPR pair index out of range");
  if (side != 0 && side != 1) throw ShapeError("side must be 0 or 1");
  if (!ids_[index]) {
    const double r = std::sqrt(0.5);
    auto ids = state_.add(qsim::StateVector::from_amplitudes({r, 0, 0, r}));
    ids_[index] = std::array<QubitId, 2>{ids[0], ids[1]};
  }
  return (*ids_[index])[side];
}

int ProverView::measure(std::span<const std::size_t> pair_indices, const PauliString& local,
                        Rng& rng) {
  std::vector<QubitId> ids;
  ids.reserve(pair_indices.size());
  for (std::size_t i : pair_indices) ids.push_back(shared_.half(side_, i));
  return shared_.state().measure(ids, local, rng);
}

std::vector<ProverView::QubitId> ProverView::load(const qsim::StateVector& state) {
  return shared_.state().add(state);
}

qsim::BellOutcome ProverView::bell(QubitId source, std::size_t pair_index, Rng& rng) {
  return shared_.state().bell_measure(source, shared_.half(side_, pair_index), rng);
}

namespace {

PauliString single(Pauli p) { return PauliString(std::vector<Pauli>{p}); }

std::vector<int> measure_word(const PauliString& word, ProverView& view, Rng& rng) {
  if (word.size() != view.pairs()) throw ShapeError("question length differs from pair count");
  std::vector<int> out(word.size(), 1);
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (word[j] == Pauli::I) continue;
    const std::size_t slot[1] = {j};
    out[j] = view.measure(slot, single(word[j]), rng);
  }
  return out;
}

Answer answer_measure(const ProverStrategy& s, const MeasureQuestion& q, ProverView& view,
                      Rng& rng) {
  if (s.behavior == Behavior::kClassicalTable) {
    throw ShapeError("classical table does not cover measurement questions");
  }
  if (s.behavior == Behavior::kConstant) return SignsAnswer{std::vector<int>(q.word.size(), 1)};
  return SignsAnswer{measure_word(q.word, view, rng)};
}

Answer answer_pair(const ProverStrategy& s, const PairQuestion& q, ProverView& view, Rng& rng) {
  if (q.first.size() != q.second.size()) throw ShapeError("pair question lengths differ");
  if (s.behavior == Behavior::kClassicalTable) {
    throw ShapeError("classical table does not cover linearity questions");
  }
  const std::size_t t = q.first.size();
  if (s.behavior == Behavior::kConstant) {
    return SignsPairAnswer{std::vector<int>(t, 1), std::vector<int>(t, 1)};
  }
  if (t != view.pairs()) throw ShapeError("question length differs from pair count");
  SignsPairAnswer out{std::vector<int>(t, 1), std::vector<int>(t, 1)};
  for (std::size_t j = 0; j < t; ++j) {
    const std::size_t slot[1] = {j};
    if (q.first[j] != Pauli::I) out.first[j] = view.measure(slot, single(q.first[j]), rng);
    if (q.second[j] != Pauli::I) out.second[j] = view.measure(slot, single(q.second[j]), rng);
  }
  return out;
}

Answer answer_magic(const ProverStrategy& s, const MagicSquareQuestion& q, ProverView& view,
                    Rng& rng) {
  if (q.index > 2) throw ShapeError("Magic Square question index out of range");
  if (s.behavior == Behavior::kConstant) return MagicSquareAnswer{1, 1};
  if (s.behavior == Behavior::kClassicalTable) {
    if (!s.table) throw ShapeError("classical strategy without a table");
    const auto& e = (*s.table)[q.is_row ? q.index : 3 + q.index];
    return MagicSquareAnswer{e[0], e[1]};
  }
  if (q.pair_i == q.pair_j) throw ShapeError("Magic Square needs two distinct pairs");
  const auto& table = games::magic_square_table();
  const PauliString& o1 = q.is_row ? table[q.index][0] : table[0][q.index];
  const PauliString& o2 = q.is_row ? table[q.index][1] : table[1][q.index];
  const std::size_t pairs[2] = {q.pair_i, q.pair_j};
  const int first = view.measure(pairs, o1, rng);
  const int second = view.measure(pairs, o2, rng);
  return MagicSquareAnswer{first, second};
}

Answer answer_teleport(const ProverStrategy& s, const TeleportQuestion& q, ProverView& view,
                       Rng& rng) {
  const std::size_t n = q.positions.size();
  std::vector<std::size_t> sorted = q.positions;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ShapeError("teleport positions must be distinct");
  }
  if (s.behavior == Behavior::kClassicalTable) {
    throw ShapeError("classical table does not cover teleport questions");
  }
  FrameAnswer out{std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0)};
  if (s.behavior == Behavior::kConstant) return out;
  if (!s.state) throw ShapeError("prover holds no state to teleport");
  if (s.state->num_qubits() != n) throw ShapeError("teleported state width differs from n");
  const auto ids = view.load(*s.state);
  for (std::size_t i = 0; i < n; ++i) {
    const qsim::BellOutcome o = view.bell(ids[i], q.positions[i], rng);
    // Remote qubit holds X^{o.a} Z^{o.b}: o.b flips X-basis outcomes and is
    // reported as a, o.a flips Z-basis outcomes and is reported as b.
    out.a[i] = o.b;
    out.b[i] = o.a;
  }
  return out;
}

void flip_signs(std::vector<int>& values, const PauliString& word,
                const std::vector<std::uint8_t>& bits) {
  if (bits.size() != values.size()) throw ShapeError("flip mask length differs from answer");
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (bits[j] && word[j] != Pauli::I) values[j] = -values[j];
  }
}

void flip_bits(std::vector<std::uint8_t>& values, const std::vector<std::uint8_t>& bits) {
  if (bits.size() != values.size()) throw ShapeError("flip mask length differs from answer");
  for (std::size_t j = 0; j < values.size(); ++j) values[j] ^= bits[j];
}

}  // namespace

Answer apply_flips(const ProverStrategy& strategy, const Question& question, Answer answer) {
  for (const FlipMask& mask : strategy.flips) {
    if (mask.bits.empty()) continue;
    if (mask.field == FlipField::kMeasurement) {
      if (auto* a = std::get_if<SignsAnswer>(&answer)) {
        flip_signs(a->values, std::get<MeasureQuestion>(question).word, mask.bits);
      } else if (auto* p = std::get_if<SignsPairAnswer>(&answer)) {
        const auto& q = std::get<PairQuestion>(question);
        flip_signs(p->first, q.first, mask.bits);
        flip_signs(p->second, q.second, mask.bits);
      }
    } else if (auto* f = std::get_if<FrameAnswer>(&answer)) {
      flip_bits(mask.field == FlipField::kFrameA ? f->a : f->b, mask.bits);
    }
  }
  return answer;
}

Answer respond(const ProverStrategy& strategy, const Question& question, ProverView& view,
               Rng& rng) {
  Answer base = std::visit(
      [&](const auto& q) -> Answer {
        using Q = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<Q, MeasureQuestion>) {
          return answer_measure(strategy, q, view, rng);
        } else if constexpr (std::is_same_v<Q, PairQuestion>) {
          return answer_pair(strategy, q, view, rng);
        } else if constexpr (std::is_same_v<Q, MagicSquareQuestion>) {
          return answer_magic(strategy, q, view, rng);
        } else {
          return answer_teleport(strategy, q, view, rng);
        }
      },
      question);
  return apply_flips(strategy, question, std::move(base));
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

// Splits on '+' followed by a letter, so table signs stay intact.
std::vector<std::string> split_modifiers(const std::string& text) {
  std::vector<std::string> out(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+' && i + 1 < text.size() &&
        std::isalpha(static_cast<unsigned char>(text[i + 1]))) {
      out.emplace_back();
    } else {
      out.back().push_back(text[i]);
    }
  }
  return out;
}

std::vector<std::uint8_t> parse_bits(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty bit string");
  std::vector<std::uint8_t> bits;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bad bit string: " + text);
    bits.push_back(ch == '1');
  }
  return bits;
}

std::size_t parse_index(const std::string& text) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad index: " + text);
  }
  return v;
}

ProverStrategy parse_base(const std::vector<std::string>& f, const XZHamiltonian& h,
                          bool first_prover, std::size_t cap) {
  if (f[0] == "honest" && f.size() == 1) {
    if (!first_prover) return honest_prover();
    return honest_pair(h, h.num_qubits(), cap).first;
  }
  if (f[0] == "constant" && f.size() == 1) return constant_prover();
  if (f[0] == "table" && f.size() == 2) {
    if (f[1].size() != 12) throw std::invalid_argument("table needs 12 signs");
    MagicSquareTable t{};
    for (std::size_t k = 0; k < 12; ++k) {
      const char ch = f[1][k];
      if (ch != '+' && ch != '-') throw std::invalid_argument("table signs must be + or -");
      t[k / 2][k % 2] = ch == '+' ? 1 : -1;
    }
    return classical_table_strategy(t);
  }
  if (f[0] == "teleport" && f.size() == 3) {
    if (f[1] == "eigen") {
      const Spectrum spectrum = diagonalize(h.dense(cap));
      const std::size_t k = parse_index(f[2]);
      if (k >= static_cast<std::size_t>(spectrum.values.size())) {
        throw std::invalid_argument("eigenstate index out of range");
      }
      return teleport_state_adversary(eigenstate(spectrum, k, cap));
    }
    if (f[1] == "basis") {
      const auto bits = parse_bits(f[2]);
      if (bits.size() != h.num_qubits()) throw std::invalid_argument("basis label needs n bits");
      std::vector<qsim::Amplitude> amps(std::size_t{1} << bits.size(), 0.0);
      std::size_t index = 0;
      for (auto b : bits) index = (index << 1) | b;
      amps[index] = 1.0;
      return teleport_state_adversary(qsim::StateVector::from_amplitudes(std::move(amps), cap));
    }
    if (f[1] == "file") return teleport_state_adversary(load_state(f[2], cap));
  }
  throw std::invalid_argument("unknown strategy selector");
}

}  // namespace

ProverStrategy parse_selector(const std::string& selector, const XZHamiltonian& h,
                              bool first_prover, std::size_t cap) {
  const auto parts = split_modifiers(selector);
  if (parts.empty() || parts[0].empty()) throw std::invalid_argument("empty strategy selector");
  ProverStrategy s = parse_base(split(parts[0], ':'), h, first_prover, cap);
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const auto f = split(parts[k], ':');
    if (f.size() == 3 && f[0] == "flip") {
      FlipMask mask;
      if (f[1] == "c") {
        mask.field = FlipField::kMeasurement;
      } else if (f[1] == "a") {
        mask.field = FlipField::kFrameA;
      } else if (f[1] == "b") {
        mask.field = FlipField::kFrameB;
      } else {
        throw std::invalid_argument("flip field must be c, a or b");
      }
      mask.bits = parse_bits(f[2]);
      s = bit_flip_adversary(std::move(s), std::move(mask));
    } else if (f.size() == 2 && f[0] == "late") {
      s = late_answer(std::move(s), std::stod(f[1]));
    } else {
      throw std::invalid_argument("unknown strategy modifier: " + parts[k]);
    }
  }
  s.label = selector;
  return s;
}

qsim::StateVector load_state(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<qsim::Amplitude> amps;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double re = 0;
    double im = 0;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!(fields >> re)) throw ParseError("expected an amplitude", number);
    if (!(fields >> im)) im = 0;
    std::string extra;
    if (fields >> extra) throw ParseError("trailing text in amplitude line", number);
    amps.emplace_back(re, im);
  }
  return qsim::StateVector::from_amplitudes(std::move(amps), cap);
}

}  // namespace reldeleg::strategies
