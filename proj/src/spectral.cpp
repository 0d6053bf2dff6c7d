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

#include "reldeleg/spectral.hpp"

#include <cmath>
#include <vector>

#include "reldeleg/errors.hpp"

namespace reldeleg {

Spectrum diagonalize(const Eigen::MatrixXcd& hermitian) {
  if (hermitian.rows() != hermitian.cols() || hermitian.rows() == 0) {
    throw ShapeError("diagonalize: matrix must be square and non-empty");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

double ground_energy(const XZHamiltonian& h, std::size_t cap) {
  return diagonalize(h.dense(cap)).values(0);
}

double operator_norm(const XZHamiltonian& h, std::size_t cap) {
  const Spectrum s = diagonalize(h.dense(cap));
  return std::max(std::abs(s.values(0)), std::abs(s.values(s.values.size() - 1)));
}

qsim::StateVector eigenstate(const Spectrum& spectrum, std::size_t index, std::size_t cap) {
  if (index >= static_cast<std::size_t>(spectrum.values.size())) {
    throw ShapeError("eigenstate index out of range");
  }
  const auto col = spectrum.vectors.col(static_cast<Eigen::Index>(index));
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < col.size(); ++i) {
    if (std::abs(col(i)) > std::abs(col(best)) + 1e-12) best = i;
  }
  const std::complex<double> phase = std::conj(col(best)) / std::abs(col(best));
  std::vector<qsim::Amplitude> amps(static_cast<std::size_t>(col.size()));
  double norm = 0;
  for (Eigen::Index i = 0; i < col.size(); ++i) {
    amps[static_cast<std::size_t>(i)] = col(i) * phase;
    norm += std::norm(amps[static_cast<std::size_t>(i)]);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return qsim::StateVector::from_amplitudes(std::move(amps), cap);
}

GroundState ground_state(const XZHamiltonian& h, std::size_t cap, double degeneracy_tol) {
  const Spectrum s = diagonalize(h.dense(cap));
  std::size_t degeneracy = 0;
  while (degeneracy < static_cast<std::size_t>(s.values.size()) &&
         s.values(static_cast<Eigen::Index>(degeneracy)) - s.values(0) <= degeneracy_tol) {
    ++degeneracy;
  }
  return GroundState{s.values(0), eigenstate(s, 0, cap), degeneracy};
}

}  // namespace reldeleg
