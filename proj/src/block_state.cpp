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

#include "reldeleg/block_state.hpp"

#include <algorithm>

#include "reldeleg/errors.hpp"

namespace reldeleg::qsim {

std::vector<BlockState::QubitId> BlockState::add(StateVector block) {
  const std::size_t index = blocks_.size();
  std::vector<QubitId> ids(block.num_qubits());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    ids[k] = where_.size();
    where_.push_back(Location{index, k});
  }
  // Register names are meaningless across merged blocks; ids take their place.
  if (!block.registers().empty()) block = StateVector::from_amplitudes(block.amplitudes(), cap_);
  blocks_.push_back(Block{std::move(block), ids});
  return ids;
}

std::size_t BlockState::num_blocks() const {
  return static_cast<std::size_t>(
      std::count_if(blocks_.begin(), blocks_.end(), [](const auto& b) { return b.has_value(); }));
}

const BlockState::Location& BlockState::locate(QubitId id) const {
  if (!alive(id)) throw ShapeError("qubit id " + std::to_string(id) + " is not live");
  return *where_[id];
}

std::size_t BlockState::block_width(QubitId id) const {
  return blocks_[locate(id).block]->ids.size();
}

void BlockState::reindex(std::size_t block) {
  const auto& ids = blocks_[block]->ids;
  for (std::size_t k = 0; k < ids.size(); ++k) where_[ids[k]] = Location{block, k};
}

std::size_t BlockState::merge(std::span<const QubitId> ids) {
  if (ids.empty()) throw ShapeError("no qubits given");
  std::vector<std::size_t> involved;
  for (QubitId id : ids) {
    const std::size_t b = locate(id).block;
    if (std::find(involved.begin(), involved.end(), b) == involved.end()) involved.push_back(b);
  }
  const std::size_t target = involved.front();
  for (std::size_t k = 1; k < involved.size(); ++k) {
    Block& dst = *blocks_[target];
    Block& src = *blocks_[involved[k]];
    if (dst.ids.size() + src.ids.size() > cap_) {
      throw CapacityError("merged block exceeds the dense cap");
    }
    dst.state = dst.state.kron(src.state);
    dst.ids.insert(dst.ids.end(), src.ids.begin(), src.ids.end());
    blocks_[involved[k]].reset();
  }
  reindex(target);
  return target;
}

int BlockState::measure(std::span<const QubitId> ids, const PauliString& local, Rng& rng) {
  const std::size_t b = merge(ids);
  std::vector<std::size_t> locals;
  for (QubitId id : ids) locals.push_back(where_[id]->local);
  return blocks_[b]->state.measure_observable_on(locals, local, rng);
}

double BlockState::expectation(std::span<const QubitId> ids, const PauliString& local) {
  const std::size_t b = merge(ids);
  std::vector<std::size_t> locals;
  for (QubitId id : ids) locals.push_back(where_[id]->local);
  return blocks_[b]->state.expectation_on(locals, local);
}

BellOutcome BlockState::bell_measure(QubitId source, QubitId epr, Rng& rng) {
  if (source == epr) throw ShapeError("bell_measure: source and EPR qubit coincide");
  const QubitId pair[2] = {source, epr};
  const std::size_t b = merge(pair);
  Block& block = *blocks_[b];
  const std::size_t ls = where_[source]->local;
  const std::size_t le = where_[epr]->local;
  if (block.ids.size() == 2) {
    // Nothing else lives in this block; the outcome is all that remains.
    BellOutcome o = qsim::bell_measure(block.state, ls, le, rng, BellMode::kKeep);
    blocks_[b].reset();
    where_[source].reset();
    where_[epr].reset();
    return o;
  }
  BellOutcome o = qsim::bell_measure(block.state, ls, le, rng, BellMode::kRemove);
  block.ids.erase(std::remove_if(block.ids.begin(), block.ids.end(),
                                 [&](QubitId id) { return id == source || id == epr; }),
                  block.ids.end());
  where_[source].reset();
  where_[epr].reset();
  reindex(b);
  return o;
}

StateVector BlockState::extract(std::span<const QubitId> ids) {
  const std::size_t b = merge(ids);
  const Block& block = *blocks_[b];
  if (block.ids.size() != ids.size()) {
    throw ShapeError("extract: qubits are entangled with others outside the list");
  }
  // Permute into the requested order.
  const std::size_t n = ids.size();
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = where_[ids[k]]->local;
  std::vector<Amplitude> amps(block.state.dimension());
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    std::uint64_t j = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const bool bit = (i >> (n - 1 - order[k])) & 1U;
      j = (j << 1) | (bit ? 1U : 0U);
    }
    amps[j] = block.state.amplitudes()[i];
  }
  return StateVector::from_amplitudes(std::move(amps), cap_);
}

}  // namespace reldeleg::qsim
