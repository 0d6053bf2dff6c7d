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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "reldeleg/statevector.hpp"

namespace reldeleg::qsim {

/// A pure state kept as a tensor product of independent dense blocks.
///
/// Qubits carry stable global ids. Blocks are merged only when an operation
/// spans them, so untouched EPR pairs never enlarge the active block.
class BlockState {
 public:
  using QubitId = std::size_t;

  explicit BlockState(std::size_t cap = kDefaultDenseCap) : cap_(cap) {}

  /// Adds an independent block and returns the ids of its qubits in order.
  std::vector<QubitId> add(StateVector block);

  bool alive(QubitId id) const { return id < where_.size() && where_[id].has_value(); }
  std::size_t num_blocks() const;
  /// Qubit count of the block holding `id`.
  std::size_t block_width(QubitId id) const;

  /// Samples a binary observable on the listed qubits.
  int measure(std::span<const QubitId> ids, const PauliString& local, Rng& rng);
  double expectation(std::span<const QubitId> ids, const PauliString& local);
  /// Bell measurement; both measured qubits are discarded afterwards.
  BellOutcome bell_measure(QubitId source, QubitId epr, Rng& rng);

  /// Dense copy of the listed qubits, which must form whole blocks after
  /// merging (e.g. everything a teleportation produced).
  StateVector extract(std::span<const QubitId> ids);

 private:
  struct Location {
    std::size_t block;
    std::size_t local;
  };
  struct Block {
    StateVector state;
    std::vector<QubitId> ids;
  };

  std::size_t merge(std::span<const QubitId> ids);
  void reindex(std::size_t block);
  const Location& locate(QubitId id) const;

  std::size_t cap_;
  std::vector<std::optional<Block>> blocks_;
  std::vector<std::optional<Location>> where_;
};

}  // namespace reldeleg::qsim
