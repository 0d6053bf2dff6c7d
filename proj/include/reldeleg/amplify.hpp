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

#include "reldeleg/hamiltonian.hpp"

namespace reldeleg {

/// H'' = (H + shift * I) / scale with lambda_0(H'') >= 0 and ||H''|| <= 1.
struct ShiftScaled {
  XZHamiltonian hamiltonian;
  double shift = 0;
  double scale = 1;

  /// Maps an energy of the input onto the transformed spectrum.
  double map_energy(double e) const { return (e + shift) / scale; }
};

/// Identity-term insertion plus scaling; leaves H untouched (shift 0,
/// scale 1) when it already satisfies both conditions. Thresholds, when
/// present, are carried through the same affine map.
ShiftScaled shift_scale_nonneg(const XZHamiltonian& h, std::size_t cap = kDefaultDenseCap);

/// Repetition count a = ceil(1 / (beta - alpha)), at least 1.
std::size_t amplification_power(double alpha, double beta);

struct AmplifyOptions {
  std::size_t max_terms = 200000;  ///< bound on (m + 2)^a
  std::size_t cap = kDefaultDenseCap;
  double precondition_tol = 1e-9;
};

struct Amplified {
  /// H' as an operator, sum of XZ strings on n*a qubits (merged, pruned).
  PauliSum raw;
  /// H' / rescale in game-normal form (every |gamma| <= 1).
  XZHamiltonian normalized;
  /// max |gamma'| of the raw instance when above 1, else 1.
  double rescale = 1;
  std::size_t power = 1;
};

/// H' = I^{na} - (I^n - (H - I^n / a))^{⊗a}. Requires lambda_0(H) >= 0 and
/// ||H|| <= 1 (checked against the dense oracle).
Amplified amplify(const XZHamiltonian& h, double alpha, double beta,
                  const AmplifyOptions& options = {});

/// Same transform at an explicit power a.
Amplified amplify_power(const XZHamiltonian& h, std::size_t power,
                        const AmplifyOptions& options = {});

}  // namespace reldeleg
