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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "reldeleg/pauli.hpp"
#include "reldeleg/rng.hpp"

namespace reldeleg::qsim {

using Amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-10;

/// A named contiguous group of qubits.
struct Register {
  std::string name;
  std::size_t offset = 0;
  std::size_t size = 0;
};

/// Dense pure state over q qubits. Qubit 0 is the most significant bit of the
/// basis index, matching the letter order of PauliString.
struct Branch;

class StateVector {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit StateVector(std::size_t num_qubits, std::size_t cap = kDefaultDenseCap);
  /// Throws ShapeError unless the length is a power of two and the norm is 1
  /// within kNormTolerance.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes,
                                     std::size_t cap = kDefaultDenseCap);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::size_t cap() const noexcept { return cap_; }
  const std::vector<Amplitude>& amplitudes() const noexcept { return amplitudes_; }
  Amplitude amplitude(std::uint64_t index) const { return amplitudes_.at(index); }

  void add_register(std::string name, std::size_t offset, std::size_t size);
  const Register& reg(const std::string& name) const;
  const std::vector<Register>& registers() const noexcept { return registers_; }
  /// Qubit indices of a register, in order.
  std::vector<std::size_t> qubits(const std::string& name) const;

  void apply_1q(const Eigen::Matrix2cd& u, std::size_t q);
  /// `u` acts on (q0, q1) with q0 as the more significant factor.
  void apply_2q(const Eigen::Matrix4cd& u, std::size_t q0, std::size_t q1);
  void apply_cnot(std::size_t control, std::size_t target);
  void apply_h(std::size_t q);
  /// Applies the full-width string (coefficient included).
  void apply_pauli(const PauliString& p);
  /// Applies `local` to the listed qubits (local letter i acts on qubits[i]).
  void apply_pauli_on(std::span<const std::size_t> qubits, const PauliString& local);

  double norm() const;
  void normalize();

  /// <psi|P|psi> for a full-width string.
  double expectation(const PauliString& p) const;
  double expectation_on(std::span<const std::size_t> qubits, const PauliString& local) const;

  /// Outcome branches of measuring a binary observable (coefficient +-1);
  /// branches with zero probability are omitted.
  std::vector<Branch> branch_observable(std::span<const std::size_t> qubits,
                                        const PauliString& local) const;

  /// Samples a binary observable and collapses the state. Returns +1 or -1.
  int measure_observable(const PauliString& p, Rng& rng);
  int measure_observable_on(std::span<const std::size_t> qubits, const PauliString& local,
                            Rng& rng);

  /// this ⊗ other; registers of `other` are shifted past ours.
  StateVector kron(const StateVector& other) const;

  /// Contracts the listed qubits against the computational basis state
  /// `bits` (bit i belongs to qubits[i]) and drops them. The caller is
  /// responsible for the qubits being in that state; the result is
  /// renormalized. Registers are shrunk and shifted accordingly.
  StateVector without_qubits(std::span<const std::size_t> qubits,
                             std::span<const std::uint8_t> bits) const;

 private:
  StateVector() = default;
  std::uint64_t bit_of(std::size_t q) const { return std::uint64_t{1} << (num_qubits_ - 1 - q); }
  PauliString widen(std::span<const std::size_t> qubits, const PauliString& local) const;
  void apply_pauli_masks(std::uint64_t x, std::uint64_t z, std::complex<double> phase);

  std::size_t num_qubits_ = 0;
  std::size_t cap_ = kDefaultDenseCap;
  std::vector<Amplitude> amplitudes_;
  std::vector<Register> registers_;
};

struct Branch {
  double probability;
  int outcome;
  StateVector state;
};

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

StateVector basis_state(std::size_t num_qubits, std::size_t cap = kDefaultDenseCap);

/// t EPR pairs; pair i joins epr_A[i] (qubit i) and epr_B[i] (qubit t + i).
StateVector epr_register(std::size_t pairs, std::size_t cap = kDefaultDenseCap);

/// Bell-basis label: the measured pair was found in
/// Phi_ab = (X^a Z^b ⊗ I)(|00> + |11>)/sqrt(2).
struct BellOutcome {
  std::uint8_t a = 0;
  std::uint8_t b = 0;
};

enum class BellMode {
  kKeep,    ///< leave the measured pair in Phi_ab
  kRemove,  ///< drop the measured qubits from the state
};

/// Bell measurement on (source, epr_a). Teleporting through a pair whose
/// other half is r leaves r in X^a Z^b |phi> up to global phase.
BellOutcome bell_measure(StateVector& s, std::size_t source, std::size_t epr_a, Rng& rng,
                         BellMode mode = BellMode::kKeep);

/// All four Bell outcomes with their probabilities and post-states.
struct BellBranch {
  double probability;
  BellOutcome outcome;
  StateVector state;
};
std::vector<BellBranch> branch_bell(const StateVector& s, std::size_t source, std::size_t epr_a,
                                    BellMode mode = BellMode::kKeep);

/// Outcome of a multi-qubit teleportation. The receiving qubits hold
/// (⊗_i X^{a_i} Z^{b_i}) applied to the source state, up to global phase.
struct TeleportRecord {
  std::vector<std::uint8_t> a;
  std::vector<std::uint8_t> b;
  std::vector<std::size_t> positions;
};

/// Teleports the `source` register through epr_A[positions[i]] onto
/// epr_B[positions[i]]. Measured pairs are left in their Bell states.
TeleportRecord teleport(StateVector& s, const std::string& source,
                        const std::vector<std::size_t>& positions, Rng& rng);

}  // namespace reldeleg::qsim
