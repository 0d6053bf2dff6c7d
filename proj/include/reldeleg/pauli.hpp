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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace reldeleg {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// Default qubit cap for dense matrices and state vectors.
inline constexpr std::size_t kDefaultDenseCap = 14;

/// A tensor product of single-qubit Paulis with a real coefficient.
///
/// Letters are packed into X and Z bit planes (Y sets both). Letter 0 is the
/// leftmost tensor factor, i.e. the most significant bit of a basis index.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t num_qubits, double coefficient = 1.0);
  PauliString(const std::vector<Pauli>& letters, double coefficient = 1.0);

  std::size_t size() const noexcept { return num_qubits_; }
  double coefficient() const noexcept { return coefficient_; }
  void set_coefficient(double c) { coefficient_ = c; }

  Pauli operator[](std::size_t i) const;
  void set(std::size_t i, Pauli p);

  std::vector<Pauli> letters() const;
  std::string word() const;
  /// Canonical text: the bare word when the coefficient is exactly 1,
  /// otherwise "<coefficient> <word>" with a shortest round-trip coefficient.
  std::string str() const;

  bool is_xz() const noexcept;
  std::size_t weight() const noexcept;
  bool is_identity() const noexcept { return weight() == 0; }
  std::size_t count(Pauli p) const noexcept;

  /// Bit masks over a basis index for dense kernels (requires size() <= 63).
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;

  /// Same letters, ignoring the coefficient.
  bool same_letters(const PauliString& other) const noexcept;
  bool operator==(const PauliString& other) const noexcept;

  /// Concatenation: this ⊗ other.
  PauliString tensor(const PauliString& other) const;

 private:
  std::size_t num_qubits_ = 0;
  double coefficient_ = 1.0;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
};

/// A question word over {X, Z} before masking.
class PauliWord {
 public:
  explicit PauliWord(std::vector<Pauli> letters);
  static PauliWord from_string(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  Pauli operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Pauli>& letters() const noexcept { return letters_; }
  std::string str() const;
  bool operator==(const PauliWord&) const = default;

 private:
  std::vector<Pauli> letters_;
};

/// Parses `[coefficient ]word` where word matches [IXYZ]+ and the optional
/// coefficient is a signed decimal. Throws ParseError at the offending index.
PauliString parse_pauli(std::string_view text);

/// W(a): position i carries W_i when a_i = 1, I otherwise.
PauliString restrict_word(const PauliWord& word, const std::vector<std::uint8_t>& mask);

/// +1 when the strings commute, -1 when they anticommute.
int commutation_sign(const PauliString& p, const PauliString& q);

/// Letterwise product P*Q. Returns the power k of the global phase i^k
/// (coefficients multiplied into the resulting string).
std::pair<int, PauliString> multiply(const PauliString& p, const PauliString& q);

/// Kronecker product of the single-qubit matrices times the coefficient.
Eigen::MatrixXcd dense_matrix(const PauliString& p, std::size_t cap = kDefaultDenseCap);

/// Single-qubit matrix of a letter.
Eigen::Matrix2cd pauli_matrix(Pauli p);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace reldeleg
