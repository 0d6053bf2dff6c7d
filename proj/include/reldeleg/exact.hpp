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

#include "reldeleg/rounds.hpp"
#include "reldeleg/strategies.hpp"

namespace reldeleg::exact {

using strategies::MagicSquareTable;
using strategies::ProverStrategy;

struct Fraction {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  bool operator==(const Fraction&) const = default;
};

struct ClassicalSearch {
  Fraction value;      ///< best win count over the 9 question pairs, reduced
  MagicSquareTable rows{};     ///< optimal row-prover table (entries 0..2 used, rest +1)
  MagicSquareTable columns{};  ///< optimal column-prover table (entries 3..5 used, rest +1)
};

/// Exhaustive search over all 64 x 64 pairs of deterministic tables.
ClassicalSearch classical_magic_square_value();

/// Win probability over uniform (row, column). Honest provers share two EPR
/// pairs; classical and constant provers answer from their tables.
double magic_square_value(const ProverStrategy& rows, const ProverStrategy& columns);

struct PbtValue {
  double consistency = 0;
  double linearity = 0;
  double anticommutation = 0;
  double total() const { return (consistency + linearity + anticommutation) / 3.0; }
};

/// Exact braiding-test acceptance. Questions are i.i.d. per slot, so each
/// sub-test factorizes into per-slot enumerations. Throws
/// OutsideAnalyzableClass for table strategies.
PbtValue pbt_value(const ProverStrategy& s1, const ProverStrategy& s2, std::size_t t);

/// Exact energy-test acceptance by branching over every Bell outcome and
/// every P2 measurement outcome. P1 may be honest, teleport a state, or be
/// constant, with frame flips; P2 must be honest or constant without flips.
double energy_test_value(const XZHamiltonian& h, const ProverStrategy& s1,
                         const ProverStrategy& s2, std::size_t cap = kDefaultDenseCap);

/// (1 - p) * PBT + p * ET.
double hamiltonian_test_value(const XZHamiltonian& h, const ProverStrategy& s1,
                              const ProverStrategy& s2, double p, std::size_t t,
                              std::size_t cap = kDefaultDenseCap);

/// accept_weight + G(H') / 2 with t resolved from cfg against H'.
double wrapped_game_value(const games::WrappedGame& game, const ProverStrategy& s1,
                          const ProverStrategy& s2, const games::GameConfig& cfg);

/// 1 - p (sum|gamma| / (2m) + lambda_0 / 2).
double omega_h(const XZHamiltonian& h, double p, std::size_t cap = kDefaultDenseCap);

/// 1 - (sum|gamma| / (2m) + <rho|H|rho> / 2): energy-test acceptance of a
/// teleported state, straight from its energy.
double energy_test_formula(const XZHamiltonian& h, const qsim::StateVector& rho);

}  // namespace reldeleg::exact
