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

#include "reldeleg/hamiltonian.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "reldeleg/errors.hpp"

namespace reldeleg {

void PauliSum::add(const PauliString& p) {
  if (p.size() != num_qubits_) throw ShapeError("PauliSum: string length mismatch");
  terms_[p.word()] += p.coefficient();
}

void PauliSum::add_identity(double c) { terms_[std::string(num_qubits_, 'I')] += c; }

void PauliSum::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

PauliSum PauliSum::operator*(double s) const {
  PauliSum out = *this;
  for (auto& [word, c] : out.terms_) c *= s;
  return out;
}

PauliSum PauliSum::operator+(const PauliSum& other) const {
  if (other.num_qubits_ != num_qubits_) throw ShapeError("PauliSum: width mismatch");
  PauliSum out = *this;
  for (const auto& [word, c] : other.terms_) out.terms_[word] += c;
  return out;
}

PauliSum PauliSum::operator-(const PauliSum& other) const { return *this + other * -1.0; }

PauliSum PauliSum::tensor(const PauliSum& other) const {
  PauliSum out(num_qubits_ + other.num_qubits_);
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : other.terms_) out.terms_[w1 + w2] += c1 * c2;
  }
  return out;
}

std::vector<PauliString> PauliSum::strings() const {
  std::vector<PauliString> out;
  out.reserve(terms_.size());
  for (const auto& [word, c] : terms_) {
    PauliString p = parse_pauli(word);
    p.set_coefficient(c);
    out.push_back(std::move(p));
  }
  return out;
}

double PauliSum::max_abs_coefficient() const {
  double m = 0;
  for (const auto& [word, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Eigen::MatrixXcd dense_operator(const PauliSum& op, std::size_t cap) {
  const std::size_t n = op.num_qubits();
  if (n > cap) {
    throw CapacityError("operator on " + std::to_string(n) + " qubits exceeds cap " +
                        std::to_string(cap));
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const PauliString& p : op.strings()) {
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    std::complex<double> phase(1, 0);
    for (std::size_t k = 0; k < p.count(Pauli::Y); ++k) phase *= std::complex<double>(0, 1);
    for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
      const double sign = (std::popcount(col & z) % 2) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(col ^ x), static_cast<Eigen::Index>(col)) +=
          p.coefficient() * sign * phase;
    }
  }
  return m;
}

XZHamiltonian::XZHamiltonian(std::size_t num_qubits, std::vector<HamiltonianTerm> terms,
                             std::optional<std::size_t> locality, std::optional<double> alpha,
                             std::optional<double> beta)
    : num_qubits_(num_qubits), terms_(std::move(terms)), alpha_(alpha), beta_(beta) {
  if (num_qubits_ == 0) throw ShapeError("Hamiltonian needs at least one qubit");
  if (terms_.empty()) throw ShapeError("Hamiltonian has no terms");
  std::size_t max_weight = 0;
  for (auto& t : terms_) {
    if (t.letters.size() != num_qubits_) throw ShapeError("term length differs from n");
    if (!t.letters.is_xz()) throw ShapeError("term " + t.letters.word() + " contains Y");
    if (!std::isfinite(t.gamma)) throw ShapeError("non-finite term weight");
    t.letters.set_coefficient(1.0);
    max_weight = std::max(max_weight, t.letters.weight());
  }
  locality_ = locality.value_or(max_weight);
  if (max_weight > locality_) {
    throw ShapeError("term weight " + std::to_string(max_weight) + " exceeds locality " +
                     std::to_string(locality_));
  }
  if (alpha_.has_value() != beta_.has_value()) {
    throw ShapeError("alpha and beta must be given together");
  }
  if (alpha_ && !(*alpha_ < *beta_)) throw ShapeError("alpha must be below beta");
}

XZHamiltonian XZHamiltonian::from_operator(const PauliSum& op,
                                           std::optional<std::size_t> locality) {
  const double m = static_cast<double>(op.size());
  std::vector<HamiltonianTerm> terms;
  for (const PauliString& p : op.strings()) {
    PauliString letters = p;
    letters.set_coefficient(1.0);
    terms.push_back({p.coefficient() * m, std::move(letters)});
  }
  return XZHamiltonian(op.num_qubits(), std::move(terms), locality);
}

void XZHamiltonian::set_thresholds(double alpha, double beta) {
  if (!(alpha < beta)) throw ShapeError("alpha must be below beta");
  alpha_ = alpha;
  beta_ = beta;
}

bool XZHamiltonian::is_normal_form() const noexcept {
  for (const auto& t : terms_) {
    if (std::abs(t.gamma) > 1.0) return false;
  }
  return true;
}

void XZHamiltonian::require_normal_form() const {
  if (!is_normal_form()) {
    throw std::invalid_argument("Hamiltonian is not in normal form (some |gamma| > 1)");
  }
}

double XZHamiltonian::sum_abs_gamma() const {
  double s = 0;
  for (const auto& t : terms_) s += std::abs(t.gamma);
  return s;
}

PauliSum XZHamiltonian::operator_sum() const {
  PauliSum op(num_qubits_);
  const double m = static_cast<double>(terms_.size());
  for (const auto& t : terms_) {
    PauliString p = t.letters;
    p.set_coefficient(t.gamma / m);
    op.add(p);
  }
  return op;
}

Eigen::MatrixXcd XZHamiltonian::dense(std::size_t cap) const {
  return dense_operator(operator_sum(), cap);
}

std::string XZHamiltonian::serialize() const {
  std::ostringstream out;
  out << "n " << num_qubits_ << "\n";
  out << "k " << locality_ << "\n";
  if (alpha_) {
    out << "alpha " << format_double(*alpha_) << "\n";
    out << "beta " << format_double(*beta_) << "\n";
  }
  for (const auto& t : terms_) {
    PauliString p = t.letters;
    p.set_coefficient(t.gamma);
    out << p.str() << "\n";
  }
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
T parse_number(std::string_view text, std::size_t line) {
  T value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line) + ": malformed number '" +
                         std::string(text) + "'",
                     line);
  }
  return value;
}

}  // namespace

XZHamiltonian XZHamiltonian::parse(std::string_view text) {
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::vector<HamiltonianTerm> terms;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t sp = line.find_first_of(" \t");
    const std::string_view key = line.substr(0, sp);
    const std::string_view rest =
        sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
    if (key == "n") {
      n = parse_number<std::size_t>(rest, line_no);
    } else if (key == "k") {
      k = parse_number<std::size_t>(rest, line_no);
    } else if (key == "alpha") {
      alpha = parse_number<double>(rest, line_no);
    } else if (key == "beta") {
      beta = parse_number<double>(rest, line_no);
    } else {
      PauliString p;
      try {
        p = parse_pauli(line);
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
      }
      const double gamma = p.coefficient();
      p.set_coefficient(1.0);
      terms.push_back({gamma, std::move(p)});
    }
  }
  if (!n) throw ParseError("missing 'n' header", line_no);
  return XZHamiltonian(*n, std::move(terms), k, alpha, beta);
}

XZHamiltonian XZHamiltonian::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Hamiltonian file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void XZHamiltonian::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write Hamiltonian file " + path);
  out << serialize();
}

bool XZHamiltonian::operator==(const XZHamiltonian& other) const {
  if (num_qubits_ != other.num_qubits_ || locality_ != other.locality_ ||
      alpha_ != other.alpha_ || beta_ != other.beta_ || terms_.size() != other.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].gamma != other.terms_[i].gamma ||
        !terms_[i].letters.same_letters(other.terms_[i].letters)) {
      return false;
    }
  }
  return true;
}

}  // namespace reldeleg
