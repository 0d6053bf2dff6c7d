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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "reldeleg/circuit.hpp"
#include "reldeleg/hamiltonian.hpp"

namespace reldeleg::c2h {

enum class TermFamily { kInit, kPropagation, kClock, kOutput };

std::string to_string(TermFamily family);

/// A Hermitian term acting on `support` (global qubit indices, clock qubits
/// 0..T-1 first, then work qubits). support[0] is the most significant
/// factor of `local`.
struct ClockTerm {
  TermFamily family = TermFamily::kInit;
  std::size_t index = 0;  ///< time step, clock position, or work qubit
  std::vector<std::size_t> support;
  Eigen::MatrixXcd local;
};

struct ClockHamiltonian {
  std::size_t steps = 0;        ///< T, also the clock width
  std::size_t work_qubits = 0;  ///< n
  std::vector<ClockTerm> terms;

  std::size_t num_qubits() const noexcept { return steps + work_qubits; }
  /// Plain sum of all terms (no 1/m averaging).
  Eigen::MatrixXcd dense(std::size_t cap = kDefaultDenseCap) const;
  /// Full-width Pauli expansion of the sum.
  PauliSum pauli_sum() const;
  /// No Y letter anywhere in the expansion.
  bool is_xz() const;
};

/// Init, propagation, clock and (optionally) output families.
ClockHamiltonian build_hq(const Circuit& circuit, bool include_output,
                          std::size_t cap = kDefaultDenseCap);

struct Decomposition {
  std::vector<PauliString> strings;  ///< coefficient tr(P M) / 2^q, zeros dropped
  bool is_xz = true;
};

/// Expansion of a Hermitian 2^q x 2^q matrix over the 4^q Pauli strings.
/// Throws ShapeError for non-square, non-power-of-two or non-Hermitian input.
Decomposition pauli_decompose(const Eigen::MatrixXcd& m, double tol = 1e-12);

/// sum_P c_P P as a dense matrix.
Eigen::MatrixXcd recompose(const std::vector<PauliString>& strings, std::size_t num_qubits);

/// Places `local` on `support` inside a width-qubit identity.
Eigen::MatrixXcd embed(const Eigen::MatrixXcd& local, const std::vector<std::size_t>& support,
                       std::size_t width);

/// <psi|M|psi>.
double energy(const Eigen::MatrixXcd& m, const qsim::StateVector& psi);

struct KitaevReport {
  std::size_t steps = 0;
  double acceptance = 0;          ///< simulated output-1 probability
  double epsilon = 0;
  double ground_energy = 0;       ///< lambda_0 of the summed H_Q with output terms
  double completeness_bound = 0;  ///< epsilon / (T + 1)
  double history_energy = 0;      ///< <hist|H_Q|hist>
  bool within_completeness = false;
  bool strictly_positive = false;  ///< lambda_0 > 1e-9
  bool summed = true;              ///< H_Q is the plain sum of terms
};

KitaevReport kitaev_check(const Circuit& circuit, double epsilon,
                          std::size_t cap = kDefaultDenseCap);

}  // namespace reldeleg::c2h
