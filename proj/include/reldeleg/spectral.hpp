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

#include <Eigen/Dense>

#include "reldeleg/hamiltonian.hpp"
#include "reldeleg/statevector.hpp"

namespace reldeleg {

/// Eigenvalues in ascending order with matching eigenvector columns.
struct Spectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

/// Full dense diagonalization of a Hermitian matrix.
Spectrum diagonalize(const Eigen::MatrixXcd& hermitian);

/// Smallest eigenvalue of (1/m) sum gamma_l H_l.
double ground_energy(const XZHamiltonian& h, std::size_t cap = kDefaultDenseCap);

/// Largest singular value of the operator.
double operator_norm(const XZHamiltonian& h, std::size_t cap = kDefaultDenseCap);

struct GroundState {
  double energy;
  qsim::StateVector state;
  /// Number of eigenvalues within `degeneracy_tol` of the minimum.
  std::size_t degeneracy;
};

/// The lowest-index eigenvector of the lowest eigenvalue, with its global
/// phase fixed so that the first largest-magnitude amplitude is real positive.
GroundState ground_state(const XZHamiltonian& h, std::size_t cap = kDefaultDenseCap,
                         double degeneracy_tol = 1e-9);

/// Eigenvector `index` (ascending order) as a state, with the same phase rule.
qsim::StateVector eigenstate(const Spectrum& spectrum, std::size_t index,
                             std::size_t cap = kDefaultDenseCap);

}  // namespace reldeleg
