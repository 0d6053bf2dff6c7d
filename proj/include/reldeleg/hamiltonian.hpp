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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "reldeleg/pauli.hpp"

namespace reldeleg {

/// A real linear combination of Pauli strings, keyed by word so that
/// duplicate strings merge and iteration order is deterministic.
class PauliSum {
 public:
  explicit PauliSum(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::map<std::string, double>& terms() const noexcept { return terms_; }

  /// Adds `p.coefficient() * p`.
  void add(const PauliString& p);
  void add_identity(double c);
  /// Drops entries whose magnitude is at most `tol`.
  void prune(double tol = 1e-15);

  PauliSum operator*(double s) const;
  PauliSum operator+(const PauliSum& other) const;
  PauliSum operator-(const PauliSum& other) const;
  /// this ⊗ other on num_qubits() + other.num_qubits() qubits.
  PauliSum tensor(const PauliSum& other) const;

  std::vector<PauliString> strings() const;
  double max_abs_coefficient() const;

 private:
  std::size_t num_qubits_;
  std::map<std::string, double> terms_;
};

/// One weighted term gamma * H_l.
struct HamiltonianTerm {
  double gamma = 0;
  PauliString letters;  ///< coefficient 1
};

/// H = (1/m) * sum_l gamma_l H_l with each H_l a tensor product of I, X, Z.
class XZHamiltonian {
 public:
  /// Validates: every string has length n and no Y; weights are at most k
  /// (k defaults to the largest weight present); alpha < beta when both given.
  XZHamiltonian(std::size_t num_qubits, std::vector<HamiltonianTerm> terms,
                std::optional<std::size_t> locality = std::nullopt,
                std::optional<double> alpha = std::nullopt,
                std::optional<double> beta = std::nullopt);

  /// Terms gamma_l = m * c_l from an operator written as sum_l c_l P_l.
  static XZHamiltonian from_operator(const PauliSum& op,
                                     std::optional<std::size_t> locality = std::nullopt);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  std::size_t locality() const noexcept { return locality_; }
  const std::vector<HamiltonianTerm>& terms() const noexcept { return terms_; }
  const HamiltonianTerm& term(std::size_t l) const { return terms_.at(l); }
  std::optional<double> alpha() const noexcept { return alpha_; }
  std::optional<double> beta() const noexcept { return beta_; }
  void set_thresholds(double alpha, double beta);

  /// Every |gamma_l| <= 1.
  bool is_normal_form() const noexcept;
  /// Throws std::invalid_argument when not in normal form.
  void require_normal_form() const;

  double sum_abs_gamma() const;
  /// The operator (1/m) sum gamma_l H_l as a merged Pauli sum.
  PauliSum operator_sum() const;
  /// Dense matrix of the operator.
  Eigen::MatrixXcd dense(std::size_t cap = kDefaultDenseCap) const;

  /// Text format: header lines `n`, `k`, optional `alpha`/`beta`, then one
  /// term per line in parse_pauli syntax. `#` starts a comment.
  std::string serialize() const;
  static XZHamiltonian parse(std::string_view text);
  static XZHamiltonian load(const std::string& path);
  void save(const std::string& path) const;

  bool operator==(const XZHamiltonian& other) const;

 private:
  std::size_t num_qubits_;
  std::vector<HamiltonianTerm> terms_;
  std::size_t locality_;
  std::optional<double> alpha_;
  std::optional<double> beta_;
};

/// Dense matrix of a Pauli sum.
Eigen::MatrixXcd dense_operator(const PauliSum& op, std::size_t cap = kDefaultDenseCap);

}  // namespace reldeleg
