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

#include "reldeleg/clock_hamiltonian.hpp"

#include <bit>
#include <cmath>

#include "reldeleg/errors.hpp"
#include "reldeleg/spectral.hpp"

namespace reldeleg::c2h {

std::string to_string(TermFamily family) {
  switch (family) {
    case TermFamily::kInit: return "init";
    case TermFamily::kPropagation: return "prop";
    case TermFamily::kClock: return "clock";
    case TermFamily::kOutput: return "output";
  }
  return "unknown";
}

namespace {

Eigen::MatrixXcd projector(int bit) {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(2, 2);
  p(bit, bit) = 1;
  return p;
}

Eigen::MatrixXcd ket_bra(int row, int col) {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(2, 2);
  p(row, col) = 1;
  return p;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::MatrixXcd kron_all(const std::vector<Eigen::MatrixXcd>& factors) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

}  // namespace

Eigen::MatrixXcd embed(const Eigen::MatrixXcd& local, const std::vector<std::size_t>& support,
                       std::size_t width) {
  const std::size_t k = support.size();
  if (local.rows() != (Eigen::Index{1} << k) || local.cols() != local.rows()) {
    throw ShapeError("local matrix does not match its support");
  }
  std::uint64_t support_mask = 0;
  for (std::size_t q : support) {
    if (q >= width) throw ShapeError("support qubit out of range");
    support_mask |= std::uint64_t{1} << (width - 1 - q);
  }
  auto local_index = [&](std::uint64_t full) {
    std::uint64_t idx = 0;
    for (std::size_t q : support) idx = (idx << 1) | ((full >> (width - 1 - q)) & 1U);
    return idx;
  };
  const std::uint64_t dim = std::uint64_t{1} << width;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t r = 0; r < dim; ++r) {
    const std::uint64_t rest = r & ~support_mask;
    const std::uint64_t lr = local_index(r);
    for (std::uint64_t lc = 0; lc < (std::uint64_t{1} << k); ++lc) {
      const auto value = local(lr, lc);
      if (value == 0.0) continue;
      std::uint64_t c = rest;
      for (std::size_t i = 0; i < k; ++i) {
        if ((lc >> (k - 1 - i)) & 1U) c |= std::uint64_t{1} << (width - 1 - support[i]);
      }
      out(r, c) += value;
    }
  }
  return out;
}

ClockHamiltonian build_hq(const Circuit& circuit, bool include_output, std::size_t cap) {
  ClockHamiltonian h;
  h.steps = circuit.size();
  h.work_qubits = circuit.num_qubits();
  if (h.num_qubits() > cap) throw CapacityError("clock Hamiltonian exceeds the dense cap");
  const std::size_t steps = h.steps;
  const std::size_t work = steps;  // first work qubit
  const Eigen::MatrixXcd id2 = Eigen::MatrixXcd::Identity(2, 2);

  // Init: time 0 (last clock bit 0) with a work qubit off its input value.
  for (std::size_t i = 0; i < h.work_qubits; ++i) {
    const int wrong = circuit.input()[i] ? 0 : 1;
    h.terms.push_back({TermFamily::kInit, i, {steps - 1, work + i},
                       kron(projector(0), projector(wrong))});
  }

  // Propagation: step t flips clock bit j = T - t + 1 (1-based).
  for (std::size_t t = 1; t <= steps; ++t) {
    const std::size_t j = steps - t;  // 0-based index of that bit
    const Gate& gate = circuit.gates()[t - 1];
    const Eigen::MatrixXcd u = gate_matrix(gate);
    const Eigen::MatrixXcd uid = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    std::vector<std::size_t> support;
    std::vector<Eigen::MatrixXcd> left;
    std::vector<Eigen::MatrixXcd> right;
    if (j > 0) {
      support.push_back(j - 1);
      left.push_back(projector(0));
    }
    support.push_back(j);
    if (j + 1 < steps) {
      support.push_back(j + 1);
      right.push_back(projector(1));
    }
    for (std::size_t q : gate.targets) support.push_back(work + q);
    auto with = [&](const Eigen::MatrixXcd& middle, const Eigen::MatrixXcd& op) {
      std::vector<Eigen::MatrixXcd> f = left;
      f.push_back(middle);
      f.insert(f.end(), right.begin(), right.end());
      f.push_back(op);
      return kron_all(f);
    };
    const Eigen::MatrixXcd local =
        0.5 * (with(id2, uid) - with(ket_bra(1, 0), u) - with(ket_bra(0, 1), u.adjoint()));
    h.terms.push_back({TermFamily::kPropagation, t, std::move(support), local});
  }

  // Clock: penalize a 1 followed by a 0.
  for (std::size_t i = 0; i + 1 < steps; ++i) {
    h.terms.push_back({TermFamily::kClock, i + 1, {i, i + 1}, kron(projector(1), projector(0))});
  }

  // Output: time T (first clock bit 1) with the output qubit reading 0.
  if (include_output) {
    h.terms.push_back({TermFamily::kOutput, circuit.output(), {0, work + circuit.output()},
                       kron(projector(1), projector(0))});
  }
  return h;
}

Eigen::MatrixXcd ClockHamiltonian::dense(std::size_t cap) const {
  const std::size_t width = num_qubits();
  if (width > cap) throw CapacityError("clock Hamiltonian exceeds the dense cap");
  const Eigen::Index dim = Eigen::Index{1} << width;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : terms) out += embed(term.local, term.support, width);
  return out;
}

PauliSum ClockHamiltonian::pauli_sum() const {
  PauliSum sum(num_qubits());
  for (const auto& term : terms) {
    for (const auto& local : pauli_decompose(term.local).strings) {
      PauliString full(num_qubits(), local.coefficient());
      for (std::size_t i = 0; i < term.support.size(); ++i) full.set(term.support[i], local[i]);
      sum.add(full);
    }
  }
  sum.prune(1e-12);
  return sum;
}

bool ClockHamiltonian::is_xz() const {
  for (const auto& p : pauli_sum().strings()) {
    if (!p.is_xz()) return false;
  }
  return true;
}

Decomposition pauli_decompose(const Eigen::MatrixXcd& m, double tol) {
  const auto dim = static_cast<std::uint64_t>(m.rows());
  if (m.rows() != m.cols() || dim < 2 || !std::has_single_bit(dim)) {
    throw ShapeError("expected a square 2^q matrix");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10) throw ShapeError("matrix is not Hermitian");
  const auto q = static_cast<std::size_t>(std::countr_zero(dim));
  Decomposition out;
  std::vector<Pauli> letters(q, Pauli::I);
  const std::uint64_t total = std::uint64_t{1} << (2 * q);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t i = 0; i < q; ++i) {
      letters[i] = static_cast<Pauli>((code >> (2 * (q - 1 - i))) & 3U);
    }
    PauliString p(letters);
    // tr(P M) = sum_r <r|P M|r>; P is a signed permutation with phases.
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    const std::size_t ys = p.count(Pauli::Y);
    std::complex<double> trace = 0;
    for (std::uint64_t r = 0; r < dim; ++r) {
      // <r|P = phase * <r ^ x| with P|c> = i^ys (-1)^{popcount(c & z)} |c ^ x>.
      const std::uint64_t c = r ^ x;
      std::complex<double> phase = std::pow(std::complex<double>(0, 1), static_cast<int>(ys));
      if (std::popcount(c & z) & 1) phase = -phase;
      trace += phase * m(c, r);
    }
    const double coefficient = trace.real() / static_cast<double>(dim);
    if (std::abs(coefficient) <= tol) continue;
    p.set_coefficient(coefficient);
    if (!p.is_xz()) out.is_xz = false;
    out.strings.push_back(std::move(p));
  }
  return out;
}

Eigen::MatrixXcd recompose(const std::vector<PauliString>& strings, std::size_t num_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& p : strings) {
    if (p.size() != num_qubits) throw ShapeError("string width differs");
    out += dense_matrix(p, num_qubits);
  }
  return out;
}

double energy(const Eigen::MatrixXcd& m, const qsim::StateVector& psi) {
  if (static_cast<std::size_t>(m.rows()) != psi.dimension()) throw ShapeError("dimension mismatch");
  const Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(),
                                             static_cast<Eigen::Index>(psi.dimension()));
  return (v.adjoint() * m * v)(0, 0).real();
}

KitaevReport kitaev_check(const Circuit& circuit, double epsilon, std::size_t cap) {
  if (!(epsilon >= 0 && epsilon <= 1)) throw std::invalid_argument("epsilon must lie in [0, 1]");
  KitaevReport r;
  r.steps = circuit.size();
  r.epsilon = epsilon;
  r.acceptance = circuit.acceptance(cap);
  const ClockHamiltonian h = build_hq(circuit, true, cap);
  const Eigen::MatrixXcd m = h.dense(cap);
  r.ground_energy = diagonalize(m).values(0);
  r.completeness_bound = epsilon / static_cast<double>(r.steps + 1);
  r.history_energy = energy(m, history_state(circuit, circuit.input_state(cap), cap));
  r.within_completeness = r.ground_energy <= r.completeness_bound + 1e-9;
  r.strictly_positive = r.ground_energy > 1e-9;
  return r;
}

}  // namespace reldeleg::c2h
