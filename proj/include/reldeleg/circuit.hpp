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
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "reldeleg/statevector.hpp"

namespace reldeleg::c2h {

enum class GateKind { kCnot, kX, kR };

struct Gate {
  GateKind kind = GateKind::kX;
  std::vector<std::size_t> targets;  ///< (control, target) for CNOT
  bool operator==(const Gate&) const = default;
};

/// R = cos(pi/8) X + sin(pi/8) Z.
Eigen::Matrix2cd r_gate();
/// Unitary of a gate on its own qubits (CNOT: control is the first factor).
Eigen::MatrixXcd gate_matrix(const Gate& gate);

/// A circuit over {CNOT, X, R} on n work qubits.
class Circuit {
 public:
  Circuit(std::size_t num_qubits, std::size_t output, std::vector<Gate> gates,
          std::vector<std::uint8_t> input = {});

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t output() const noexcept { return output_; }
  std::size_t size() const noexcept { return gates_.size(); }  ///< T
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  /// Input bits (all zeros by default).
  const std::vector<std::uint8_t>& input() const noexcept { return input_; }

  qsim::StateVector input_state(std::size_t cap = kDefaultDenseCap) const;
  /// U_t ... U_1 |psi>.
  qsim::StateVector run(const qsim::StateVector& psi, std::size_t steps) const;
  /// Probability that measuring the output qubit of U_T...U_1|input> gives 1.
  double acceptance(std::size_t cap = kDefaultDenseCap) const;

  /// Text format: `n <count>`, `output <index>`, optional `input <bits>`,
  /// then one gate per line: `CNOT c t`, `X q` or `R q`. `#` comments.
  std::string serialize() const;
  static Circuit parse(std::string_view text);
  static Circuit load(const std::string& path);
  void save(const std::string& path) const;
  bool operator==(const Circuit&) const = default;

 private:
  std::size_t num_qubits_;
  std::size_t output_;
  std::vector<Gate> gates_;
  std::vector<std::uint8_t> input_;
};

/// (T + 1)^{-1/2} sum_t |t>_clock ⊗ U_t...U_1 |psi>, clock in unary on T
/// qubits (T - t zeros then t ones) ahead of the n work qubits.
qsim::StateVector history_state(const Circuit& circuit, const qsim::StateVector& psi,
                                std::size_t cap = kDefaultDenseCap);

/// Unary clock label of time t on T bits (bit 0 is clock qubit 1).
std::vector<std::uint8_t> unary_clock(std::size_t t, std::size_t steps);

}  // namespace reldeleg::c2h
