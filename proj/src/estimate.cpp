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

#include "reldeleg/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace reldeleg::games {

namespace {

struct Tally {
  std::size_t accepted = 0;
  std::size_t resamples = 0;
  std::map<std::string, TestTally> per_test;
};

}  // namespace

Estimate estimate_acceptance(const RoundFn& round, std::size_t rounds, std::uint64_t seed,
                             std::size_t threads) {
  if (rounds == 0) throw std::invalid_argument("at least one round required");
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, rounds);
  const Rng root(seed);

  std::vector<Tally> tallies(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](std::size_t w) {
    try {
      Tally& tally = tallies[w];
      for (std::size_t r = w; r < rounds; r += threads) {
        const Transcript tr = round(root.split(r));
        tally.accepted += tr.accepted;
        tally.resamples += tr.resamples;
        TestTally& per = tally.per_test[to_string(tr.test)];
        ++per.rounds;
        per.accepted += tr.accepted;
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Estimate est;
  est.rounds = rounds;
  est.seed = seed;
  for (const auto& t : tallies) {
    est.accepted += t.accepted;
    est.resamples += t.resamples;
    for (const auto& [name, per] : t.per_test) {
      est.per_test[name].rounds += per.rounds;
      est.per_test[name].accepted += per.accepted;
    }
  }
  const double n = static_cast<double>(rounds);
  est.frequency = static_cast<double>(est.accepted) / n;
  est.half_width = kZ99 * std::sqrt(est.frequency * (1.0 - est.frequency) / n);
  return est;
}

}  // namespace reldeleg::games
