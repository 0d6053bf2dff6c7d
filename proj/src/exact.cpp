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

#include "reldeleg/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "reldeleg/errors.hpp"
#include "reldeleg/spectral.hpp"

namespace reldeleg::exact {

using qsim::StateVector;
using strategies::Behavior;
using strategies::FlipField;

namespace {

struct Leaf {
  double probability;
  std::vector<int> outcomes;
  StateVector state;
};

StateVector epr_pair() {
  const double r = std::sqrt(0.5);
  return StateVector::from_amplitudes({r, 0, 0, r});
}

PauliString single(Pauli p) { return PauliString(std::vector<Pauli>{p}); }

void require_quantum_or_constant(const ProverStrategy& s, const char* where) {
  if (s.behavior == Behavior::kClassicalTable) {
    throw OutsideAnalyzableClass(std::string("table strategies are not analyzable in ") + where);
  }
}

// Sequential single-qubit measurements of `letters` on one qubit; identity
// letters report +1 without touching the state.
std::vector<Leaf> measure_letters(const StateVector& s, std::size_t qubit,
                                  const std::vector<Pauli>& letters) {
  std::vector<Leaf> leaves{{1.0, {}, s}};
  const std::size_t target[1] = {qubit};
  for (Pauli letter : letters) {
    std::vector<Leaf> next;
    for (Leaf& leaf : leaves) {
      if (letter == Pauli::I) {
        leaf.outcomes.push_back(1);
        next.push_back(std::move(leaf));
        continue;
      }
      for (auto& br : leaf.state.branch_observable(target, single(letter))) {
        auto outcomes = leaf.outcomes;
        outcomes.push_back(br.outcome);
        next.push_back({leaf.probability * br.probability, std::move(outcomes),
                        std::move(br.state)});
      }
    }
    leaves = std::move(next);
  }
  return leaves;
}

// Combined measurement flip bit of slot j.
bool measurement_flip(const ProverStrategy& s, std::size_t j, std::size_t t) {
  bool flip = false;
  for (const auto& m : s.flips) {
    if (m.field != FlipField::kMeasurement || m.bits.empty()) continue;
    if (m.bits.size() != t) throw ShapeError("flip mask length differs from t");
    flip ^= m.bits[j] != 0;
  }
  return flip;
}

// One prover's answers at one slot of the braiding test.
std::vector<Leaf> slot_answers(const ProverStrategy& s, const StateVector& state,
                               std::size_t qubit, const std::vector<Pauli>& letters, bool flip) {
  require_quantum_or_constant(s, "the braiding test");
  std::vector<Leaf> leaves;
  if (s.behavior == Behavior::kConstant) {
    leaves.push_back({1.0, std::vector<int>(letters.size(), 1), state});
  } else {
    leaves = measure_letters(state, qubit, letters);
  }
  if (flip) {
    for (auto& leaf : leaves) {
      for (std::size_t k = 0; k < letters.size(); ++k) {
        if (letters[k] != Pauli::I) leaf.outcomes[k] = -leaf.outcomes[k];
      }
    }
  }
  return leaves;
}

struct MagicLeaf {
  double probability;
  games::MagicSquareAnswer answer;
  StateVector state;
};

std::vector<MagicLeaf> magic_answers(const ProverStrategy& s, bool is_row, std::size_t index,
                                     const StateVector& state,
                                     const std::array<std::size_t, 2>& qubits) {
  if (s.behavior == Behavior::kConstant) return {{1.0, {1, 1}, state}};
  if (s.behavior == Behavior::kClassicalTable) {
    if (!s.table) throw ShapeError("classical strategy without a table");
    const auto& e = (*s.table)[is_row ? index : 3 + index];
    return {{1.0, {e[0], e[1]}, state}};
  }
  const auto& table = games::magic_square_table();
  const PauliString& o1 = is_row ? table[index][0] : table[0][index];
  const PauliString& o2 = is_row ? table[index][1] : table[1][index];
  std::vector<MagicLeaf> out;
  for (auto& b1 : state.branch_observable(qubits, o1)) {
    for (auto& b2 : b1.state.branch_observable(qubits, o2)) {
      out.push_back({b1.probability * b2.probability, {b1.outcome, b2.outcome},
                     std::move(b2.state)});
    }
  }
  return out;
}

}  // namespace

ClassicalSearch classical_magic_square_value() {
  // Table index bits: question q uses bits 2q (first) and 2q+1 (second).
  auto entry = [](unsigned table, unsigned q, unsigned k) {
    return ((table >> (2 * q + k)) & 1U) ? -1 : 1;
  };
  ClassicalSearch best;
  for (auto& e : best.rows) e = {1, 1};
  for (auto& e : best.columns) e = {1, 1};
  int best_wins = -1;
  for (unsigned rt = 0; rt < 64; ++rt) {
    for (unsigned ct = 0; ct < 64; ++ct) {
      int wins = 0;
      for (unsigned r = 0; r < 3; ++r) {
        for (unsigned c = 0; c < 3; ++c) {
          wins += games::magic_square_wins(r, c, {entry(rt, r, 0), entry(rt, r, 1)},
                                           {entry(ct, c, 0), entry(ct, c, 1)});
        }
      }
      if (wins > best_wins) {
        best_wins = wins;
        for (unsigned q = 0; q < 3; ++q) {
          best.rows[q] = {entry(rt, q, 0), entry(rt, q, 1)};
          best.columns[3 + q] = {entry(ct, q, 0), entry(ct, q, 1)};
        }
      }
    }
  }
  const std::int64_t g = std::gcd<std::int64_t, std::int64_t>(best_wins, 9);
  best.value = {best_wins / g, 9 / g};
  return best;
}

double magic_square_value(const ProverStrategy& rows, const ProverStrategy& columns) {
  const StateVector start = qsim::epr_register(2);
  double total = 0;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      for (const auto& a : magic_answers(rows, true, r, start, {0, 1})) {
        for (const auto& b : magic_answers(columns, false, c, a.state, {2, 3})) {
          if (games::magic_square_wins(r, c, a.answer, b.answer)) {
            total += a.probability * b.probability;
          }
        }
      }
    }
  }
  return total / 9.0;
}

PbtValue pbt_value(const ProverStrategy& s1, const ProverStrategy& s2, std::size_t t) {
  if (t < 2) throw std::invalid_argument("the braiding test needs t >= 2");
  require_quantum_or_constant(s1, "the braiding test");
  require_quantum_or_constant(s2, "the braiding test");
  const StateVector pair = epr_pair();
  const Pauli xz[2] = {Pauli::X, Pauli::Z};
  PbtValue v;

  // Consistency: slot letter is I w.p. 1/2, X or Z w.p. 1/4 each.
  v.consistency = 1.0;
  for (std::size_t j = 0; j < t; ++j) {
    const bool f1 = measurement_flip(s1, j, t);
    const bool f2 = measurement_flip(s2, j, t);
    double agree = 0;
    for (auto [letter, weight] : {std::pair{Pauli::I, 0.5}, std::pair{Pauli::X, 0.25},
                                  std::pair{Pauli::Z, 0.25}}) {
      for (const auto& l1 : slot_answers(s1, pair, 0, {letter}, f1)) {
        for (const auto& l2 : slot_answers(s2, l1.state, 1, {letter}, f2)) {
          if (l1.outcomes[0] == l2.outcomes[0]) agree += weight * l1.probability * l2.probability;
        }
      }
    }
    v.consistency *= agree;
  }

  // Linearity: average over which of P1's two answers is checked.
  for (int choice = 0; choice < 2; ++choice) {
    double product = 1.0;
    for (std::size_t j = 0; j < t; ++j) {
      const bool f1 = measurement_flip(s1, j, t);
      const bool f2 = measurement_flip(s2, j, t);
      double agree = 0;
      for (Pauli w : xz) {
        for (int a = 0; a < 2; ++a) {
          for (int a2 = 0; a2 < 2; ++a2) {
            const std::vector<Pauli> letters = {a ? w : Pauli::I, a2 ? w : Pauli::I};
            for (const auto& l1 : slot_answers(s1, pair, 0, letters, f1)) {
              for (const auto& l2 : slot_answers(s2, l1.state, 1, {letters[choice]}, f2)) {
                if (l1.outcomes[choice] == l2.outcomes[0]) {
                  agree += 0.125 * l1.probability * l2.probability;
                }
              }
            }
          }
        }
      }
      product *= agree;
    }
    v.linearity += 0.5 * product;
  }

  // Anticommutation: one Magic Square on two fresh EPR pairs; the value does
  // not depend on which pair indices were drawn.
  v.anticommutation = magic_square_value(s1, s2);
  return v;
}

double energy_test_value(const XZHamiltonian& h, const ProverStrategy& s1,
                         const ProverStrategy& s2, std::size_t cap) {
  h.require_normal_form();
  require_quantum_or_constant(s1, "the energy test");
  require_quantum_or_constant(s2, "the energy test");
  for (const auto& m : s2.flips) {
    const bool any = std::any_of(m.bits.begin(), m.bits.end(), [](auto b) { return b != 0; });
    if (m.field == FlipField::kMeasurement && any) {
      throw OutsideAnalyzableClass("P2 outcome flips depend on the embedding; use Monte Carlo");
    }
  }
  const std::size_t n = h.num_qubits();
  std::vector<std::uint8_t> flip_a(n, 0);
  std::vector<std::uint8_t> flip_b(n, 0);
  for (const auto& m : s1.flips) {
    if (m.field == FlipField::kMeasurement || m.bits.empty()) continue;
    if (m.bits.size() != n) throw ShapeError("frame flip mask length differs from n");
    auto& target = m.field == FlipField::kFrameA ? flip_a : flip_b;
    for (std::size_t i = 0; i < n; ++i) target[i] ^= m.bits[i];
  }

  struct FrameLeaf {
    double probability;
    std::vector<std::uint8_t> a;
    std::vector<std::uint8_t> b;
    StateVector state;
  };
  std::vector<FrameLeaf> leaves;
  std::vector<std::size_t> remote(n);
  if (s1.behavior == Behavior::kConstant) {
    // Nothing is teleported: P2's halves stay halves of fresh EPR pairs.
    leaves.push_back({1.0, std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0),
                      qsim::epr_register(n, cap)});
    std::iota(remote.begin(), remote.end(), n);
  } else {
    if (!s1.state) throw ShapeError("prover holds no state to teleport");
    if (s1.state->num_qubits() != n) throw ShapeError("teleported state width differs from n");
    leaves.push_back({1.0, {}, {}, *s1.state});
    // Source qubit i always sits at index 0; received qubits accumulate at
    // the end in order.
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<FrameLeaf> next;
      for (const auto& leaf : leaves) {
        const std::size_t width = leaf.state.num_qubits();
        if (width + 2 > cap) throw CapacityError("teleportation exceeds the dense cap");
        const StateVector joined = leaf.state.kron(epr_pair());
        for (auto& br : qsim::branch_bell(joined, 0, width, qsim::BellMode::kRemove)) {
          FrameLeaf child{leaf.probability * br.probability, leaf.a, leaf.b, std::move(br.state)};
          child.a.push_back(br.outcome.b);
          child.b.push_back(br.outcome.a);
          next.push_back(std::move(child));
        }
      }
      leaves = std::move(next);
    }
    std::iota(remote.begin(), remote.end(), 0);
  }
  for (auto& leaf : leaves) {
    for (std::size_t i = 0; i < n; ++i) {
      leaf.a[i] ^= flip_a[i];
      leaf.b[i] ^= flip_b[i];
    }
  }

  double total = 0;
  for (const auto& term : h.terms()) {
    const int sign = term.gamma < 0 ? -1 : 1;
    double accept = 0;
    for (const auto& leaf : leaves) {
      // Product of P2's commuting single-qubit outcomes, before correction.
      double product = 1.0;
      if (s2.behavior != Behavior::kConstant) {
        product = leaf.state.expectation_on(remote, term.letters);
      }
      int parity = 1;
      for (std::size_t i = 0; i < n; ++i) {
        const Pauli letter = term.letters[i];
        if (letter == Pauli::X && leaf.a[i]) parity = -parity;
        if (letter == Pauli::Z && leaf.b[i]) parity = -parity;
      }
      const double agree = (1.0 + sign * parity * product) / 2.0;  // P(prod d = sign)
      accept += leaf.probability * (1.0 - std::abs(term.gamma) * agree);
    }
    total += accept;
  }
  return total / static_cast<double>(h.num_terms());
}

double hamiltonian_test_value(const XZHamiltonian& h, const ProverStrategy& s1,
                              const ProverStrategy& s2, double p, std::size_t t,
                              std::size_t cap) {
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("p must lie in [0, 1]");
  if (t < h.num_qubits()) throw std::invalid_argument("t must be at least n");
  double value = 0;
  if (p < 1) value += (1 - p) * pbt_value(s1, s2, t).total();
  if (p > 0) value += p * energy_test_value(h, s1, s2, cap);
  return value;
}

double wrapped_game_value(const games::WrappedGame& game, const ProverStrategy& s1,
                          const ProverStrategy& s2, const games::GameConfig& cfg) {
  const std::size_t t = games::pair_count(cfg, game.inner);
  return game.accept_weight + 0.5 * hamiltonian_test_value(game.inner, s1, s2, cfg.p, t, cfg.cap);
}

double omega_h(const XZHamiltonian& h, double p, std::size_t cap) {
  const double m = static_cast<double>(h.num_terms());
  return 1.0 - p * (h.sum_abs_gamma() / (2.0 * m) + ground_energy(h, cap) / 2.0);
}

double energy_test_formula(const XZHamiltonian& h, const qsim::StateVector& rho) {
  const double m = static_cast<double>(h.num_terms());
  double energy = 0;
  for (const auto& term : h.terms()) energy += term.gamma * rho.expectation(term.letters) / m;
  return 1.0 - (h.sum_abs_gamma() / (2.0 * m) + energy / 2.0);
}

}  // namespace reldeleg::exact
