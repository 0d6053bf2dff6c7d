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

#include "reldeleg/pauli.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <system_error>

#include "reldeleg/errors.hpp"

namespace reldeleg {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

}  // namespace

char pauli_char(Pauli p) {
  static constexpr std::array<char, 4> kChars{'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<std::size_t>(p)];
}

PauliString::PauliString(std::size_t num_qubits, double coefficient)
    : num_qubits_(num_qubits),
      coefficient_(coefficient),
      xs_(words_for(num_qubits), 0),
      zs_(words_for(num_qubits), 0) {}

PauliString::PauliString(const std::vector<Pauli>& letters, double coefficient)
    : PauliString(letters.size(), coefficient) {
  for (std::size_t i = 0; i < letters.size(); ++i) set(i, letters[i]);
}

Pauli PauliString::operator[](std::size_t i) const {
  if (i >= num_qubits_) throw std::out_of_range("PauliString index out of range");
  const bool x = (xs_[i / kWordBits] >> (i % kWordBits)) & 1U;
  const bool z = (zs_[i / kWordBits] >> (i % kWordBits)) & 1U;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

void PauliString::set(std::size_t i, Pauli p) {
  if (i >= num_qubits_) throw std::out_of_range("PauliString index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
  auto& xw = xs_[i / kWordBits];
  auto& zw = zs_[i / kWordBits];
  xw &= ~bit;
  zw &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) xw |= bit;
  if (p == Pauli::Z || p == Pauli::Y) zw |= bit;
}

std::vector<Pauli> PauliString::letters() const {
  std::vector<Pauli> out(num_qubits_);
  for (std::size_t i = 0; i < num_qubits_; ++i) out[i] = (*this)[i];
  return out;
}

std::string PauliString::word() const {
  std::string out(num_qubits_, 'I');
  for (std::size_t i = 0; i < num_qubits_; ++i) out[i] = pauli_char((*this)[i]);
  return out;
}

std::string PauliString::str() const {
  if (coefficient_ == 1.0) return word();
  return format_double(coefficient_) + " " + word();
}

bool PauliString::is_xz() const noexcept { return count(Pauli::Y) == 0; }

std::size_t PauliString::weight() const noexcept {
  std::size_t w = 0;
  for (std::size_t k = 0; k < xs_.size(); ++k) w += std::popcount(xs_[k] | zs_[k]);
  return w;
}

std::size_t PauliString::count(Pauli p) const noexcept {
  std::size_t c = 0;
  for (std::size_t k = 0; k < xs_.size(); ++k) {
    const std::uint64_t x = xs_[k];
    const std::uint64_t z = zs_[k];
    switch (p) {
      case Pauli::X: c += std::popcount(x & ~z); break;
      case Pauli::Y: c += std::popcount(x & z); break;
      case Pauli::Z: c += std::popcount(~x & z); break;
      case Pauli::I: break;
    }
  }
  if (p == Pauli::I) return num_qubits_ - weight();
  return c;
}

std::uint64_t PauliString::x_mask() const {
  if (num_qubits_ > 63) throw CapacityError("PauliString too wide for a dense mask");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < num_qubits_; ++i) {
    const Pauli p = (*this)[i];
    if (p == Pauli::X || p == Pauli::Y) m |= std::uint64_t{1} << (num_qubits_ - 1 - i);
  }
  return m;
}

std::uint64_t PauliString::z_mask() const {
  if (num_qubits_ > 63) throw CapacityError("PauliString too wide for a dense mask");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < num_qubits_; ++i) {
    const Pauli p = (*this)[i];
    if (p == Pauli::Z || p == Pauli::Y) m |= std::uint64_t{1} << (num_qubits_ - 1 - i);
  }
  return m;
}

bool PauliString::same_letters(const PauliString& other) const noexcept {
  return num_qubits_ == other.num_qubits_ && xs_ == other.xs_ && zs_ == other.zs_;
}

bool PauliString::operator==(const PauliString& other) const noexcept {
  return same_letters(other) && coefficient_ == other.coefficient_;
}

PauliString PauliString::tensor(const PauliString& other) const {
  PauliString out(num_qubits_ + other.num_qubits_, coefficient_ * other.coefficient_);
  for (std::size_t i = 0; i < num_qubits_; ++i) out.set(i, (*this)[i]);
  for (std::size_t i = 0; i < other.num_qubits_; ++i) out.set(num_qubits_ + i, other[i]);
  return out;
}

PauliWord::PauliWord(std::vector<Pauli> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw ShapeError("PauliWord must be non-empty");
  for (Pauli p : letters_) {
    if (p != Pauli::X && p != Pauli::Z) throw ShapeError("PauliWord letters must be X or Z");
  }
}

PauliWord PauliWord::from_string(std::string_view text) {
  std::vector<Pauli> letters;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'X') {
      letters.push_back(Pauli::X);
    } else if (text[i] == 'Z') {
      letters.push_back(Pauli::Z);
    } else {
      throw ParseError("invalid PauliWord letter at index " + std::to_string(i), i);
    }
  }
  return PauliWord(std::move(letters));
}

std::string PauliWord::str() const {
  std::string out;
  for (Pauli p : letters_) out.push_back(pauli_char(p));
  return out;
}

PauliString parse_pauli(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  double coefficient = 1.0;
  if (pos < text.size()) {
    const char c = text[pos];
    const bool numeric = c == '+' || c == '-' || c == '.' || (c >= '0' && c <= '9');
    if (numeric) {
      std::size_t start = pos;
      if (text[pos] == '+') ++start;  // from_chars rejects a leading '+'
      const auto* first = text.data() + start;
      const auto* last = text.data() + text.size();
      const auto [ptr, ec] = std::from_chars(first, last, coefficient);
      if (ec != std::errc() || !std::isfinite(coefficient)) {
        throw ParseError("malformed coefficient at index " + std::to_string(pos), pos);
      }
      pos = static_cast<std::size_t>(ptr - text.data());
      if (pos >= text.size() || !is_space(text[pos])) {
        throw ParseError("expected whitespace after coefficient at index " + std::to_string(pos),
                         pos);
      }
      while (pos < text.size() && is_space(text[pos])) ++pos;
    }
  }
  std::size_t end = text.size();
  while (end > pos && is_space(text[end - 1])) --end;
  if (end == pos) throw ParseError("empty Pauli word at index " + std::to_string(pos), pos);

  std::vector<Pauli> letters;
  letters.reserve(end - pos);
  for (std::size_t i = pos; i < end; ++i) {
    switch (text[i]) {
      case 'I': letters.push_back(Pauli::I); break;
      case 'X': letters.push_back(Pauli::X); break;
      case 'Y': letters.push_back(Pauli::Y); break;
      case 'Z': letters.push_back(Pauli::Z); break;
      default:
        throw ParseError("invalid Pauli letter at index " + std::to_string(i), i);
    }
  }
  return PauliString(letters, coefficient);
}

PauliString restrict_word(const PauliWord& word, const std::vector<std::uint8_t>& mask) {
  if (mask.size() != word.size()) throw ShapeError("restrict: mask length differs from word");
  PauliString out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (mask[i]) out.set(i, word[i]);
  }
  return out;
}

int commutation_sign(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size()) throw ShapeError("commutation_sign: length mismatch");
  std::size_t clashes = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Pauli a = p[i];
    const Pauli b = q[i];
    if (a != Pauli::I && b != Pauli::I && a != b) ++clashes;
  }
  return clashes % 2 == 0 ? 1 : -1;
}

std::pair<int, PauliString> multiply(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size()) throw ShapeError("multiply: length mismatch");
  // Single-qubit table: a*b = i^{phase} c.
  static constexpr int kPhase[4][4] = {
      {0, 0, 0, 0},  // I
      {0, 0, 1, 3},  // X: XY = iZ, XZ = -iY
      {0, 3, 0, 1},  // Y: YX = -iZ, YZ = iX
      {0, 1, 3, 0},  // Z: ZX = iY, ZY = -iX
  };
  PauliString out(p.size(), p.coefficient() * q.coefficient());
  int phase = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto a = static_cast<std::uint8_t>(p[i]);
    const auto b = static_cast<std::uint8_t>(q[i]);
    phase += kPhase[a][b];
    const bool x = ((a == 1 || a == 2) != (b == 1 || b == 2));
    const bool z = ((a == 3 || a == 2) != (b == 3 || b == 2));
    out.set(i, x && z ? Pauli::Y : x ? Pauli::X : z ? Pauli::Z : Pauli::I);
  }
  return {phase % 4, out};
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, C(0, -1), C(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Eigen::MatrixXcd dense_matrix(const PauliString& p, std::size_t cap) {
  if (p.size() > cap) {
    throw CapacityError("dense_matrix: " + std::to_string(p.size()) + " qubits exceeds cap " +
                        std::to_string(cap));
  }
  const std::size_t dim = std::size_t{1} << p.size();
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  static const std::array<std::complex<double>, 4> kI{
      std::complex<double>(1, 0), std::complex<double>(0, 1), std::complex<double>(-1, 0),
      std::complex<double>(0, -1)};
  const std::complex<double> y_phase = kI[p.count(Pauli::Y) % 4];
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (std::uint64_t col = 0; col < dim; ++col) {
    const double sign = (std::popcount(col & z) % 2) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(col ^ x), static_cast<Eigen::Index>(col)) =
        p.coefficient() * sign * y_phase;
  }
  return m;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf.data(), ptr);
}

}  // namespace reldeleg
