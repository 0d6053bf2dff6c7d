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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reldeleg/block_state.hpp"
#include "reldeleg/games.hpp"
#include "reldeleg/hamiltonian.hpp"
#include "reldeleg/statevector.hpp"

namespace reldeleg::strategies {

enum class Behavior {
  kHonest,          ///< Pauli measurements on EPR halves; teleports `state` when asked
  kTeleportState,   ///< honest except for the state it teleports
  kClassicalTable,  ///< deterministic Magic Square answers
  kConstant,        ///< +1 everywhere, zero frame bits, no quantum operations
};

enum class FlipField {
  kMeasurement,  ///< +-1 outcomes at measured (non-identity) slots
  kFrameA,       ///< reported a bits
  kFrameB,       ///< reported b bits
};

struct FlipMask {
  FlipField field = FlipField::kMeasurement;
  std::vector<std::uint8_t> bits;
};

/// Answers (first, second) per Magic Square question: rows 0..2, then
/// columns 0..2.
using MagicSquareTable = std::array<std::array<int, 2>, 6>;

/// Closed catalogue of prover behaviours, so the exact engine can tell which
/// strategies it can evaluate.
struct ProverStrategy {
  Behavior behavior = Behavior::kHonest;
  std::shared_ptr<const qsim::StateVector> state;
  std::optional<MagicSquareTable> table;
  std::vector<FlipMask> flips;
  double delay = 0;  ///< extra answer latency in seconds
  std::string label = "honest";
};

/// (P1, P2): P1 holds the lowest-index ground state of H. Requires t >= n.
std::pair<ProverStrategy, ProverStrategy> honest_pair(const XZHamiltonian& h, std::size_t t,
                                                      std::size_t cap = kDefaultDenseCap);

ProverStrategy honest_prover();
ProverStrategy constant_prover();
ProverStrategy teleport_state_adversary(qsim::StateVector state);
/// Throws ShapeError unless every entry is +-1 and there are 6 rows of 2.
ProverStrategy classical_table_strategy(const std::vector<std::vector<int>>& table);
ProverStrategy classical_table_strategy(const MagicSquareTable& table);
/// Adds a flip mask; an empty or all-zero mask leaves behaviour unchanged.
ProverStrategy bit_flip_adversary(ProverStrategy base, FlipMask mask);
ProverStrategy late_answer(ProverStrategy base, double delay);

/// EPR pairs shared by the two provers, created on first touch.
class SharedEntanglement {
 public:
  using QubitId = qsim::BlockState::QubitId;

  explicit SharedEntanglement(std::size_t pairs, std::size_t cap = kDefaultDenseCap);
  std::size_t pairs() const noexcept { return ids_.size(); }
  /// Qubit id of half `side` (0 = P1, 1 = P2) of pair `index`.
  QubitId half(int side, std::size_t index);
  qsim::BlockState& state() noexcept { return state_; }

 private:
  qsim::BlockState state_;
  std::vector<std::optional<std::array<QubitId, 2>>> ids_;
};

/// One prover's access to the shared state: its own EPR halves and its own
/// private qubits, nothing else.
class ProverView {
 public:
  using QubitId = qsim::BlockState::QubitId;

  ProverView(SharedEntanglement& shared, int side) : shared_(shared), side_(side) {}
  std::size_t pairs() const noexcept { return shared_.pairs(); }
  /// Measures `local` on this prover's halves of the listed pairs.
  int measure(std::span<const std::size_t> pair_indices, const PauliString& local, Rng& rng);
  /// Brings a private state into the lab; returns its qubit ids.
  std::vector<QubitId> load(const qsim::StateVector& state);
  /// Bell measurement of a private qubit with this prover's half of a pair.
  qsim::BellOutcome bell(QubitId source, std::size_t pair_index, Rng& rng);

 private:
  SharedEntanglement& shared_;
  int side_;
};

/// The only entry point for prover behaviour: own question, own view.
games::Answer respond(const ProverStrategy& strategy, const games::Question& question,
                      ProverView& view, Rng& rng);

/// Applies the strategy's flip masks to a base answer.
games::Answer apply_flips(const ProverStrategy& strategy, const games::Question& question,
                          games::Answer answer);

/// Selector grammar: `honest`, `constant`, `teleport:eigen:<k>`,
/// `teleport:basis:<bits>`, `teleport:file:<path>`, and a `+flip:<field>:<bits>`
/// suffix with field one of c, a, b. `h` supplies the eigenbasis.
ProverStrategy parse_selector(const std::string& selector, const XZHamiltonian& h,
                              bool first_prover, std::size_t cap = kDefaultDenseCap);

/// Amplitude file: one `re im` pair per line, `#` comments.
qsim::StateVector load_state(const std::string& path, std::size_t cap = kDefaultDenseCap);

}  // namespace reldeleg::strategies
