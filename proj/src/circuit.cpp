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

#include "reldeleg/circuit.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "reldeleg/errors.hpp"

namespace reldeleg::c2h {

Eigen::Matrix2cd r_gate() {
  const double c = std::cos(std::numbers::pi / 8);
  const double s = std::sin(std::numbers::pi / 8);
  Eigen::Matrix2cd r;
  r << s, c, c, -s;
  return r;
}

Eigen::MatrixXcd gate_matrix(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::kX: return pauli_matrix(Pauli::X);
    case GateKind::kR: return r_gate();
    case GateKind::kCnot: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
      return m;
    }
  }
  throw ShapeError("unknown gate");
}

Circuit::Circuit(std::size_t num_qubits, std::size_t output, std::vector<Gate> gates,
                 std::vector<std::uint8_t> input)
    : num_qubits_(num_qubits), output_(output), gates_(std::move(gates)), input_(std::move(input)) {
  if (num_qubits_ == 0) throw ShapeError("circuit needs at least one qubit");
  if (output_ >= num_qubits_) throw ShapeError("output qubit out of range");
  if (gates_.empty()) throw ShapeError("circuit needs at least one gate");
  for (const Gate& g : gates_) {
    const std::size_t arity = g.kind == GateKind::kCnot ? 2 : 1;
    if (g.targets.size() != arity) throw ShapeError("wrong number of gate operands");
    for (std::size_t q : g.targets) {
      if (q >= num_qubits_) throw ShapeError("gate operand out of range");
    }
    if (arity == 2 && g.targets[0] == g.targets[1]) throw ShapeError("CNOT operands coincide");
  }
  if (input_.empty()) input_.assign(num_qubits_, 0);
  if (input_.size() != num_qubits_) throw ShapeError("input needs one bit per qubit");
  for (auto b : input_) {
    if (b > 1) throw ShapeError("input bits must be 0 or 1");
  }
}

qsim::StateVector Circuit::input_state(std::size_t cap) const {
  std::vector<qsim::Amplitude> amps(std::size_t{1} << num_qubits_, 0.0);
  std::size_t index = 0;
  for (auto b : input_) index = (index << 1) | b;
  amps[index] = 1.0;
  return qsim::StateVector::from_amplitudes(std::move(amps), cap);
}

qsim::StateVector Circuit::run(const qsim::StateVector& psi, std::size_t steps) const {
  if (psi.num_qubits() != num_qubits_) throw ShapeError("state width differs from the circuit");
  if (steps > gates_.size()) throw ShapeError("more steps than gates");
  qsim::StateVector s = psi;
  for (std::size_t k = 0; k < steps; ++k) {
    const Gate& g = gates_[k];
    switch (g.kind) {
      case GateKind::kCnot: s.apply_cnot(g.targets[0], g.targets[1]); break;
      case GateKind::kX: s.apply_1q(pauli_matrix(Pauli::X), g.targets[0]); break;
      case GateKind::kR: s.apply_1q(r_gate(), g.targets[0]); break;
    }
  }
  return s;
}

double Circuit::acceptance(std::size_t cap) const {
  const qsim::StateVector out = run(input_state(cap), gates_.size());
  PauliString z(num_qubits_);
  z.set(output_, Pauli::Z);
  return (1.0 - out.expectation(z)) / 2.0;
}

std::string Circuit::serialize() const {
  std::ostringstream out;
  out << "n " << num_qubits_ << "\n";
  out << "output " << output_ << "\n";
  out << "input ";
  for (auto b : input_) out << static_cast<int>(b);
  out << "\n";
  for (const Gate& g : gates_) {
    switch (g.kind) {
      case GateKind::kCnot: out << "CNOT " << g.targets[0] << " " << g.targets[1] << "\n"; break;
      case GateKind::kX: out << "X " << g.targets[0] << "\n"; break;
      case GateKind::kR: out << "R " << g.targets[0] << "\n"; break;
    }
  }
  return out.str();
}

namespace {

std::size_t read_index(std::istringstream& fields, std::size_t line) {
  long long v = -1;
  if (!(fields >> v) || v < 0) throw ParseError("expected a nonnegative integer", line);
  return static_cast<std::size_t>(v);
}

}  // namespace

Circuit Circuit::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  std::optional<std::size_t> n;
  std::optional<std::size_t> output;
  std::vector<std::uint8_t> input;
  std::vector<Gate> gates;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    if (key == "n") {
      n = read_index(fields, number);
    } else if (key == "output") {
      output = read_index(fields, number);
    } else if (key == "input") {
      std::string bits;
      if (!(fields >> bits)) throw ParseError("expected input bits", number);
      for (char ch : bits) {
        if (ch != '0' && ch != '1') throw ParseError("input bits must be 0 or 1", number);
        input.push_back(ch == '1');
      }
    } else if (key == "CNOT") {
      const std::size_t c = read_index(fields, number);
      const std::size_t t = read_index(fields, number);
      gates.push_back({GateKind::kCnot, {c, t}});
    } else if (key == "X" || key == "R") {
      gates.push_back({key == "X" ? GateKind::kX : GateKind::kR, {read_index(fields, number)}});
    } else {
      throw ParseError("unknown keyword " + key, number);
    }
    std::string extra;
    if (fields >> extra) throw ParseError("trailing text", number);
  }
  if (!n) throw ParseError("missing n", number);
  if (!output) throw ParseError("missing output", number);
  try {
    return Circuit(*n, *output, std::move(gates), std::move(input));
  } catch (const ShapeError& e) {
    throw ParseError(e.what(), number);
  }
}

Circuit Circuit::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void Circuit::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize();
}

std::vector<std::uint8_t> unary_clock(std::size_t t, std::size_t steps) {
  if (t > steps) throw ShapeError("time beyond the clock range");
  std::vector<std::uint8_t> bits(steps, 0);
  for (std::size_t i = steps - t; i < steps; ++i) bits[i] = 1;
  return bits;
}

qsim::StateVector history_state(const Circuit& circuit, const qsim::StateVector& psi,
                                std::size_t cap) {
  const std::size_t steps = circuit.size();
  const std::size_t n = circuit.num_qubits();
  if (steps + n > cap) throw CapacityError("history state exceeds the dense cap");
  std::vector<qsim::Amplitude> amps(std::size_t{1} << (steps + n), 0.0);
  const double norm = 1.0 / std::sqrt(static_cast<double>(steps + 1));
  for (std::size_t t = 0; t <= steps; ++t) {
    std::size_t clock = 0;
    for (auto b : unary_clock(t, steps)) clock = (clock << 1) | b;
    const qsim::StateVector snapshot = circuit.run(psi, t);
    for (std::size_t k = 0; k < snapshot.dimension(); ++k) {
      amps[(clock << n) | k] = norm * snapshot.amplitude(k);
    }
  }
  qsim::StateVector s = qsim::StateVector::from_amplitudes(std::move(amps), cap);
  s.add_register("clock", 0, steps);
  s.add_register("work", steps, n);
  return s;
}

}  // namespace reldeleg::c2h
