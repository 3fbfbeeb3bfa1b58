// Copyright 2026 The disentangle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "disentangle/states.hpp"

#include <cmath>
#include <string>

#include "disentangle/errors.hpp"
#include "disentangle/linalg.hpp"

namespace disentangle {

PureBipartiteState PureBipartiteState::from_alpha2(double alpha2) {
  if (!(alpha2 >= 0.0 && alpha2 <= 1.0))
    throw RangeError("alpha2 must lie in [0, 1], got " + format_number(alpha2));
  return PureBipartiteState(alpha2);
}

double PureBipartiteState::alpha() const noexcept { return std::sqrt(alpha2_); }
double PureBipartiteState::beta() const noexcept { return std::sqrt(1.0 - alpha2_); }

ComplexMatrix density_matrix(const PureBipartiteState& psi) {
  ComplexMatrix rho(4);
  const double coherence = psi.alpha() * psi.beta();
  rho.set(0, 0, psi.alpha2());
  rho.set(3, 3, psi.beta2());
  rho.set(0, 3, coherence);
  rho.set(3, 0, coherence);
  return rho;
}

ReducedPair reduced_pair(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("reduced_pair: expected a 4x4 two-qubit state");
  const SubsystemDims qubits{2, 2};
  return {partial_trace(rho, qubits, 1), partial_trace(rho, qubits, 0)};
}

ComplexMatrix scale_isotropically(const ComplexMatrix& rho, double eta) {
  const auto d = static_cast<double>(rho.dim());
  return eta * rho + ((1.0 - eta) / d) * ComplexMatrix::identity(rho.dim());
}

IsotropyFit isotropy_fit(const ComplexMatrix& rho_ad, const ComplexMatrix& rho_bd) {
  if (rho_ad.dim() != 2 || rho_bd.dim() != 2)
    throw DimensionError("isotropy_fit: both states must be 2x2");
  if (!rho_ad.is_hermitian() || !rho_bd.is_hermitian())
    throw NonHermitianError("isotropy_fit: states must be Hermitian");
  if (!rho_ad.is_unit_trace() || !rho_bd.is_unit_trace())
    throw RangeError("isotropy_fit: states must have unit trace");

  const ComplexMatrix half_identity = 0.5 * ComplexMatrix::identity(2);
  const ComplexMatrix after = rho_ad - half_identity;
  const ComplexMatrix before = rho_bd - half_identity;
  const double before_norm = before.frobenius_norm();
  if (before_norm <= kDegenerateTol)
    throw DegenerateInputError("isotropy_fit: reference state is maximally mixed; eta is undefined");

  // tr(X Y) for Hermitian X, Y is the real Frobenius inner product.
  double overlap = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) overlap += (after(i, j) * std::conj(before(i, j))).real();

  IsotropyFit fit;
  fit.eta = overlap / (before_norm * before_norm);
  fit.residual = (after - fit.eta * before).frobenius_norm();
  fit.isotropic = fit.residual <= kIsotropyResidualTol;
  return fit;
}

}  // namespace disentangle
