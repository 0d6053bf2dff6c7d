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

#include "reldeleg/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "reldeleg/errors.hpp"

namespace reldeleg::qsim {
namespace {

constexpr double kZeroProbability = 1e-14;

std::complex<double> i_power(std::size_t k) {
  switch (k % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapacityError("state of " + std::to_string(n) + " qubits exceeds cap " +
                        std::to_string(cap));
  }
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits, std::size_t cap)
    : num_qubits_(num_qubits), cap_(cap) {
  if (num_qubits == 0) throw ShapeError("StateVector needs at least one qubit");
  check_cap(num_qubits, cap);
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0, 0});
  amplitudes_[0] = 1;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes, std::size_t cap) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw ShapeError("amplitude count must be a power of two >= 2");
  }
  StateVector s;
  s.num_qubits_ = static_cast<std::size_t>(std::countr_zero(dim));
  s.cap_ = cap;
  check_cap(s.num_qubits_, cap);
  s.amplitudes_ = std::move(amplitudes);
  if (std::abs(s.norm() - 1.0) > kNormTolerance) throw ShapeError("state is not normalized");
  return s;
}

void StateVector::add_register(std::string name, std::size_t offset, std::size_t size) {
  if (offset + size > num_qubits_) throw ShapeError("register out of range");
  for (const auto& r : registers_) {
    if (r.name == name) throw ShapeError("duplicate register " + name);
    const bool overlap = offset < r.offset + r.size && r.offset < offset + size;
    if (overlap) throw ShapeError("register " + name + " overlaps " + r.name);
  }
  registers_.push_back({std::move(name), offset, size});
}

const Register& StateVector::reg(const std::string& name) const {
  for (const auto& r : registers_) {
    if (r.name == name) return r;
  }
  throw ShapeError("unknown register " + name);
}

std::vector<std::size_t> StateVector::qubits(const std::string& name) const {
  const Register& r = reg(name);
  std::vector<std::size_t> out(r.size);
  std::iota(out.begin(), out.end(), r.offset);
  return out;
}

void StateVector::apply_1q(const Eigen::Matrix2cd& u, std::size_t q) {
  if (q >= num_qubits_) throw ShapeError("qubit index out of range");
  const std::uint64_t bit = bit_of(q);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & bit) continue;
    const Amplitude a0 = amplitudes_[i];
    const Amplitude a1 = amplitudes_[i | bit];
    amplitudes_[i] = u(0, 0) * a0 + u(0, 1) * a1;
    amplitudes_[i | bit] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void StateVector::apply_2q(const Eigen::Matrix4cd& u, std::size_t q0, std::size_t q1) {
  if (q0 >= num_qubits_ || q1 >= num_qubits_ || q0 == q1) {
    throw ShapeError("invalid two-qubit gate operands");
  }
  const std::uint64_t b0 = bit_of(q0);
  const std::uint64_t b1 = bit_of(q1);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & (b0 | b1)) continue;
    const std::uint64_t idx[4] = {i, i | b1, i | b0, i | b0 | b1};
    Amplitude in[4];
    for (int k = 0; k < 4; ++k) in[k] = amplitudes_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      Amplitude acc = 0;
      for (int c = 0; c < 4; ++c) acc += u(r, c) * in[c];
      amplitudes_[idx[r]] = acc;
    }
  }
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
  if (control >= num_qubits_ || target >= num_qubits_ || control == target) {
    throw ShapeError("invalid CNOT operands");
  }
  const std::uint64_t cb = bit_of(control);
  const std::uint64_t tb = bit_of(target);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & cb) && !(i & tb)) std::swap(amplitudes_[i], amplitudes_[i | tb]);
  }
}

void StateVector::apply_h(std::size_t q) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << r, r, r, -r;
  apply_1q(h, q);
}

void StateVector::apply_pauli_masks(std::uint64_t x, std::uint64_t z,
                                    std::complex<double> phase) {
  std::vector<Amplitude> out(amplitudes_.size());
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    const double sign = (std::popcount(i & z) % 2) ? -1.0 : 1.0;
    out[i ^ x] = phase * sign * amplitudes_[i];
  }
  amplitudes_ = std::move(out);
}

void StateVector::apply_pauli(const PauliString& p) {
  if (p.size() != num_qubits_) throw ShapeError("Pauli string length differs from state");
  apply_pauli_masks(p.x_mask(), p.z_mask(), p.coefficient() * i_power(p.count(Pauli::Y)));
}

PauliString StateVector::widen(std::span<const std::size_t> qubits,
                               const PauliString& local) const {
  if (qubits.size() != local.size()) throw ShapeError("operand count differs from string length");
  PauliString full(num_qubits_, local.coefficient());
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] >= num_qubits_) throw ShapeError("qubit index out of range");
    if (full[qubits[i]] != Pauli::I) throw ShapeError("repeated qubit operand");
    full.set(qubits[i], local[i]);
  }
  return full;
}

void StateVector::apply_pauli_on(std::span<const std::size_t> qubits, const PauliString& local) {
  apply_pauli(widen(qubits, local));
}

double StateVector::norm() const {
  double acc = 0;
  for (const auto& a : amplitudes_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0) throw ShapeError("cannot normalize the zero vector");
  for (auto& a : amplitudes_) a /= n;
}

double StateVector::expectation(const PauliString& p) const {
  if (p.size() != num_qubits_) throw ShapeError("Pauli string length differs from state");
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const std::complex<double> phase = i_power(p.count(Pauli::Y));
  std::complex<double> acc = 0;
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    const double sign = (std::popcount(i & z) % 2) ? -1.0 : 1.0;
    acc += std::conj(amplitudes_[i ^ x]) * phase * sign * amplitudes_[i];
  }
  return p.coefficient() * acc.real();
}

double StateVector::expectation_on(std::span<const std::size_t> qubits,
                                   const PauliString& local) const {
  return expectation(widen(qubits, local));
}

std::vector<Branch> StateVector::branch_observable(
    std::span<const std::size_t> qubits, const PauliString& local) const {
  if (std::abs(local.coefficient()) != 1.0) {
    throw ShapeError("measured observable must have coefficient +1 or -1");
  }
  const PauliString full = widen(qubits, local);
  StateVector moved = *this;
  moved.apply_pauli(full);
  std::vector<Branch> out;
  for (int outcome : {1, -1}) {
    StateVector post = *this;
    double weight = 0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
      post.amplitudes_[i] = 0.5 * (amplitudes_[i] + static_cast<double>(outcome) * moved.amplitudes_[i]);
      weight += std::norm(post.amplitudes_[i]);
    }
    if (weight <= kZeroProbability) continue;
    post.normalize();
    out.push_back({weight, outcome, std::move(post)});
  }
  return out;
}

int StateVector::measure_observable(const PauliString& p, Rng& rng) {
  std::vector<std::size_t> all(num_qubits_);
  std::iota(all.begin(), all.end(), 0);
  return measure_observable_on(all, p, rng);
}

int StateVector::measure_observable_on(std::span<const std::size_t> qubits,
                                       const PauliString& local, Rng& rng) {
  auto branches = branch_observable(qubits, local);
  std::size_t pick = 0;
  if (branches.size() == 2) {
    const double total = branches[0].probability + branches[1].probability;
    pick = rng.uniform() * total < branches[0].probability ? 0 : 1;
  }
  *this = std::move(branches[pick].state);
  return branches[pick].outcome;
}

StateVector StateVector::kron(const StateVector& other) const {
  StateVector out;
  out.num_qubits_ = num_qubits_ + other.num_qubits_;
  out.cap_ = std::max(cap_, other.cap_);
  check_cap(out.num_qubits_, out.cap_);
  out.amplitudes_.resize(amplitudes_.size() * other.amplitudes_.size());
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    for (std::size_t j = 0; j < other.amplitudes_.size(); ++j) {
      out.amplitudes_[i * other.amplitudes_.size() + j] = amplitudes_[i] * other.amplitudes_[j];
    }
  }
  out.registers_ = registers_;
  for (const auto& r : other.registers_) {
    out.add_register(r.name, r.offset + num_qubits_, r.size);
  }
  return out;
}

StateVector StateVector::without_qubits(std::span<const std::size_t> qubits,
                                        std::span<const std::uint8_t> bits) const {
  if (qubits.size() != bits.size()) throw ShapeError("one bit per removed qubit required");
  if (qubits.size() >= num_qubits_) throw ShapeError("cannot remove every qubit");
  std::vector<bool> removed(num_qubits_, false);
  std::uint64_t mask = 0;
  std::uint64_t value = 0;
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    if (qubits[k] >= num_qubits_ || removed[qubits[k]]) throw ShapeError("bad removal list");
    removed[qubits[k]] = true;
    mask |= bit_of(qubits[k]);
    if (bits[k]) value |= bit_of(qubits[k]);
  }
  StateVector out;
  out.num_qubits_ = num_qubits_ - qubits.size();
  out.cap_ = cap_;
  out.amplitudes_.assign(std::size_t{1} << out.num_qubits_, Amplitude{0, 0});
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & mask) != value) continue;
    std::uint64_t j = 0;
    for (std::size_t q = 0; q < num_qubits_; ++q) {
      if (removed[q]) continue;
      j = (j << 1) | ((i & bit_of(q)) ? 1U : 0U);
    }
    out.amplitudes_[j] = amplitudes_[i];
  }
  out.normalize();
  for (const auto& r : registers_) {
    std::size_t before = 0;
    std::size_t inside = 0;
    for (std::size_t q = 0; q < num_qubits_; ++q) {
      if (!removed[q]) continue;
      if (q < r.offset) ++before;
      else if (q < r.offset + r.size) ++inside;
    }
    if (r.size > inside) out.registers_.push_back({r.name, r.offset - before, r.size - inside});
  }
  return out;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw ShapeError("fidelity: dimension mismatch");
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    acc += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  }
  return std::norm(acc);
}

StateVector basis_state(std::size_t num_qubits, std::size_t cap) {
  return StateVector(num_qubits, cap);
}

StateVector epr_register(std::size_t pairs, std::size_t cap) {
  if (pairs == 0) throw ShapeError("epr_register needs at least one pair");
  check_cap(2 * pairs, cap);
  StateVector s(2 * pairs, cap);
  for (std::size_t i = 0; i < pairs; ++i) {
    s.apply_h(i);
    s.apply_cnot(i, pairs + i);
  }
  s.add_register("epr_A", 0, pairs);
  s.add_register("epr_B", pairs, pairs);
  return s;
}

namespace {

// Rotates the Bell basis on (source, epr_a) to the computational basis:
// Phi_ab -> |b>|a> (up to sign).
void to_computational(StateVector& s, std::size_t source, std::size_t epr_a) {
  s.apply_cnot(source, epr_a);
  s.apply_h(source);
}

void to_bell(StateVector& s, std::size_t source, std::size_t epr_a) {
  s.apply_h(source);
  s.apply_cnot(source, epr_a);
}

double project_pair(StateVector& s, std::size_t q0, std::size_t q1, std::uint8_t v0,
                    std::uint8_t v1) {
  StateVector copy = s;
  const std::size_t n = s.num_qubits();
  const std::uint64_t b0 = std::uint64_t{1} << (n - 1 - q0);
  const std::uint64_t b1 = std::uint64_t{1} << (n - 1 - q1);
  std::vector<Amplitude> amps = s.amplitudes();
  double weight = 0;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const bool ok = (((i & b0) != 0) == (v0 != 0)) && (((i & b1) != 0) == (v1 != 0));
    if (!ok) amps[i] = 0;
    weight += std::norm(amps[i]);
  }
  if (weight <= kZeroProbability) return 0;
  for (auto& a : amps) a /= std::sqrt(weight);
  StateVector projected = StateVector::from_amplitudes(std::move(amps), s.cap());
  for (const auto& r : s.registers()) projected.add_register(r.name, r.offset, r.size);
  s = std::move(projected);
  return weight;
}

void check_bell_operands(const StateVector& s, std::size_t source, std::size_t epr_a) {
  if (source == epr_a) throw ShapeError("bell_measure: source and EPR qubit coincide");
  if (source >= s.num_qubits() || epr_a >= s.num_qubits()) {
    throw ShapeError("bell_measure: qubit index out of range");
  }
}

}  // namespace

std::vector<BellBranch> branch_bell(const StateVector& s, std::size_t source, std::size_t epr_a,
                                    BellMode mode) {
  check_bell_operands(s, source, epr_a);
  StateVector rotated = s;
  to_computational(rotated, source, epr_a);
  std::vector<BellBranch> out;
  for (std::uint8_t a = 0; a < 2; ++a) {
    for (std::uint8_t b = 0; b < 2; ++b) {
      StateVector post = rotated;
      const double weight = project_pair(post, source, epr_a, b, a);
      if (weight <= kZeroProbability) continue;
      if (mode == BellMode::kKeep) {
        to_bell(post, source, epr_a);
      } else {
        const std::size_t qs[2] = {source, epr_a};
        const std::uint8_t vs[2] = {b, a};
        post = post.without_qubits(qs, vs);
      }
      out.push_back({weight, BellOutcome{a, b}, std::move(post)});
    }
  }
  return out;
}

BellOutcome bell_measure(StateVector& s, std::size_t source, std::size_t epr_a, Rng& rng,
                         BellMode mode) {
  auto branches = branch_bell(s, source, epr_a, mode);
  double total = 0;
  for (const auto& br : branches) total += br.probability;
  double u = rng.uniform() * total;
  std::size_t pick = branches.size() - 1;
  for (std::size_t k = 0; k < branches.size(); ++k) {
    if (u < branches[k].probability) {
      pick = k;
      break;
    }
    u -= branches[k].probability;
  }
  s = std::move(branches[pick].state);
  return branches[pick].outcome;
}

TeleportRecord teleport(StateVector& s, const std::string& source,
                        const std::vector<std::size_t>& positions, Rng& rng) {
  const Register& src = s.reg(source);
  const Register& a_half = s.reg("epr_A");
  const Register& b_half = s.reg("epr_B");
  if (positions.size() != src.size) throw ShapeError("teleport: one position per source qubit");
  std::vector<bool> used(a_half.size, false);
  for (std::size_t p : positions) {
    if (p >= a_half.size) throw ShapeError("teleport: position out of range");
    if (used[p]) throw ShapeError("teleport: positions must be distinct");
    used[p] = true;
  }
  const bool overlap_a = src.offset < a_half.offset + a_half.size && a_half.offset < src.offset + src.size;
  const bool overlap_b = src.offset < b_half.offset + b_half.size && b_half.offset < src.offset + src.size;
  if (overlap_a || overlap_b) throw ShapeError("teleport: source overlaps EPR registers");

  TeleportRecord record;
  record.positions = positions;
  const std::size_t src_offset = src.offset;
  const std::size_t a_offset = a_half.offset;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const BellOutcome o = bell_measure(s, src_offset + i, a_offset + positions[i], rng);
    record.a.push_back(o.a);
    record.b.push_back(o.b);
  }
  return record;
}

}  // namespace reldeleg::qsim
