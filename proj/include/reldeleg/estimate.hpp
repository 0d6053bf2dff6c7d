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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "reldeleg/games.hpp"
#include "reldeleg/rng.hpp"

namespace reldeleg::games {

/// z such that a two-sided normal interval covers 99%.
inline constexpr double kZ99 = 2.5758293035489004;

struct TestTally {
  std::size_t rounds = 0;
  std::size_t accepted = 0;
};

struct Estimate {
  double frequency = 0;
  double half_width = 0;  ///< 99% normal-approximation half-width
  std::size_t rounds = 0;
  std::size_t accepted = 0;
  std::size_t resamples = 0;  ///< embedding redraws summed over rounds
  std::uint64_t seed = 0;
  std::map<std::string, TestTally> per_test;
  bool contains(double value) const { return std::abs(value - frequency) <= half_width; }
};

/// Plays one round from a per-round generator. Must be safe to call
/// concurrently.
using RoundFn = std::function<Transcript(const Rng&)>;

/// Round r is played with Rng(seed).split(r), so the result depends only on
/// (seed, rounds), never on the thread count or scheduling. `threads` = 0
/// uses the hardware concurrency.
Estimate estimate_acceptance(const RoundFn& round, std::size_t rounds, std::uint64_t seed,
                             std::size_t threads = 0);

}  // namespace reldeleg::games
