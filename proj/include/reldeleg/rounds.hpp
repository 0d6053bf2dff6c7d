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
#include <cstdint>

#include "reldeleg/amplify.hpp"
#include "reldeleg/games.hpp"
#include "reldeleg/hamiltonian.hpp"
#include "reldeleg/strategies.hpp"

namespace reldeleg::games {

using strategies::ProverStrategy;

struct GameConfig {
  double p = 0.5;             ///< probability of the energy test
  std::size_t t = 0;          ///< EPR pairs; 0 selects default_pair_count
  std::uint64_t seed = 0;
  std::size_t max_embed_resamples = 64;
  double eta = 0;
  double eta_prime = 0;
  std::size_t cap = kDefaultDenseCap;
};

/// ceil(2 n log2(max(n, 2))) + 2k.
std::size_t default_pair_count(std::size_t n, std::size_t k);

/// Resolves cfg.t against the instance and checks 0 <= p <= 1, t >= n, t >= 2.
std::size_t pair_count(const GameConfig& cfg, const XZHamiltonian& h);

/// Each round function derives its randomness from `rng` through fixed
/// split streams: questions, P1, P2, and the gamma coin are independent.
Transcript magic_square_round(const ProverStrategy& rows, const ProverStrategy& columns,
                              const Rng& rng);
Transcript pbt_round(const ProverStrategy& s1, const ProverStrategy& s2, std::size_t t,
                     const Rng& rng, std::size_t cap = kDefaultDenseCap);
/// Throws NoEmbedding after cfg.max_embed_resamples failed draws of (W, e).
Transcript energy_test_round(const XZHamiltonian& h, const ProverStrategy& s1,
                             const ProverStrategy& s2, const GameConfig& cfg, const Rng& rng);
Transcript hamiltonian_test_round(const XZHamiltonian& h, const ProverStrategy& s1,
                                  const ProverStrategy& s2, const GameConfig& cfg,
                                  const Rng& rng);

/// The wrapped game built from H, alpha, beta: H is shifted and scaled to a
/// nonnegative spectrum of norm at most 1, amplified, and normalized.
struct WrappedGame {
  XZHamiltonian inner;       ///< H' / rescale in normal form
  double rescale = 1;
  std::size_t power = 1;
  double shift = 0;          ///< affine map applied before amplification
  double scale = 1;
  double c = 0;
  double eta_prime = 0;
  double accept_weight = 0;  ///< 1/2 - (2c - eta') / 4
  double reject_weight = 0;  ///< (2c - eta') / 4
};

/// c = 1 - p (sum|gamma'| / (2m') + (1 / (2 rescale)) / 2). Throws
/// std::invalid_argument when a mixture weight leaves [0, 1].
WrappedGame make_wrapped_game(const XZHamiltonian& h, double alpha, double beta,
                              const GameConfig& cfg, const AmplifyOptions& options = {});

Transcript wrapped_game_round(const WrappedGame& game, const ProverStrategy& s1,
                              const ProverStrategy& s2, const GameConfig& cfg, const Rng& rng);

}  // namespace reldeleg::games
