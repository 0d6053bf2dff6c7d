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

#include "reldeleg/amplify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "reldeleg/errors.hpp"
#include "reldeleg/spectral.hpp"

namespace reldeleg {
namespace {

constexpr double kSpectrumSlack = 1e-12;

}  // namespace

ShiftScaled shift_scale_nonneg(const XZHamiltonian& h, std::size_t cap) {
  const Spectrum spec = diagonalize(h.dense(cap));
  const double lo = spec.values(0);
  const double hi = spec.values(spec.values.size() - 1);
  const double shift = lo >= -kSpectrumSlack ? 0.0 : -lo;
  const double top = std::max(std::abs(lo + shift), std::abs(hi + shift));
  const double scale = top <= 1.0 + kSpectrumSlack ? 1.0 : top;
  if (shift == 0.0 && scale == 1.0) return ShiftScaled{h, 0.0, 1.0};

  PauliSum op = h.operator_sum();
  op.add_identity(shift);
  op = op * (1.0 / scale);
  op.prune();
  if (op.size() == 0) op.add_identity(0.0);
  XZHamiltonian out = XZHamiltonian::from_operator(op, h.locality());
  if (h.alpha()) out.set_thresholds((*h.alpha() + shift) / scale, (*h.beta() + shift) / scale);
  return ShiftScaled{std::move(out), shift, scale};
}

std::size_t amplification_power(double alpha, double beta) {
  if (!(alpha < beta)) throw std::invalid_argument("amplify: alpha must be below beta");
  // The slack keeps exact reciprocals such as 1/(1/3) from rounding up.
  const double a = std::ceil(1.0 / (beta - alpha) - 1e-9);
  return static_cast<std::size_t>(std::max(1.0, a));
}

Amplified amplify(const XZHamiltonian& h, double alpha, double beta,
                  const AmplifyOptions& options) {
  return amplify_power(h, amplification_power(alpha, beta), options);
}

Amplified amplify_power(const XZHamiltonian& h, std::size_t power,
                        const AmplifyOptions& options) {
  if (power == 0) throw std::invalid_argument("amplify: power must be at least 1");
  const Spectrum spec = diagonalize(h.dense(options.cap));
  const double lo = spec.values(0);
  const double norm = std::max(std::abs(lo), std::abs(spec.values(spec.values.size() - 1)));
  if (lo < -options.precondition_tol || norm > 1.0 + options.precondition_tol) {
    throw std::invalid_argument(
        "amplify: requires lambda_0(H) >= 0 and ||H|| <= 1; apply shift_scale_nonneg first");
  }
  const double base = static_cast<double>(h.num_terms() + 2);
  if (std::pow(base, static_cast<double>(power)) > static_cast<double>(options.max_terms)) {
    throw CapacityError("amplify: (m+2)^a exceeds the term cap");
  }
  const std::size_t n = h.num_qubits();
  if (n * power > 63) throw CapacityError("amplify: n*a exceeds 63 qubits");

  // Block factor I - (H - I/a) = (1 + 1/a) I - H.
  PauliSum block(n);
  block.add_identity(1.0 + 1.0 / static_cast<double>(power));
  block = block - h.operator_sum();
  block.prune();

  PauliSum product = block;
  for (std::size_t r = 1; r < power; ++r) {
    product = product.tensor(block);
    product.prune();
  }
  PauliSum raw(n * power);
  raw.add_identity(1.0);
  raw = raw - product;
  raw.prune(1e-14);
  if (raw.size() == 0) raw.add_identity(0.0);

  for (const PauliString& p : raw.strings()) {
    if (!p.is_xz()) throw std::logic_error("amplify produced a Y letter");
  }

  const double m = static_cast<double>(raw.size());
  const double max_gamma = raw.max_abs_coefficient() * m;
  const double rescale = max_gamma > 1.0 ? max_gamma : 1.0;
  std::vector<HamiltonianTerm> terms;
  for (PauliString p : raw.strings()) {
    // Rounding can leave the largest weight a hair above 1.
    const double gamma = std::clamp(p.coefficient() * m / rescale, -1.0, 1.0);
    p.set_coefficient(1.0);
    terms.push_back({gamma, std::move(p)});
  }
  XZHamiltonian normalized(n * power, std::move(terms));
  return Amplified{std::move(raw), std::move(normalized), rescale, power};
}

}  // namespace reldeleg
