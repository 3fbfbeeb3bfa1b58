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

#pragma once

#include "disentangle/matrix.hpp"

namespace disentangle {

/**
 * Two-qubit pure state alpha|00> + beta|11> with real, nonnegative Schmidt
 * coefficients. Parameterized by alpha^2; beta is always derived from it.
 */
class PureBipartiteState {
 public:
  /// Throws RangeError unless 0 <= alpha2 <= 1.
  static PureBipartiteState from_alpha2(double alpha2);

  double alpha2() const noexcept { return alpha2_; }
  double beta2() const noexcept { return 1.0 - alpha2_; }
  double alpha() const noexcept;
  double beta() const noexcept;
  bool is_entangled() const noexcept { return alpha2_ > 0.0 && alpha2_ < 1.0; }

 private:
  explicit PureBipartiteState(double alpha2) : alpha2_(alpha2) {}
  double alpha2_;
};

/// |psi><psi| on qubits (1, 2).
ComplexMatrix density_matrix(const PureBipartiteState& psi);

struct ReducedPair {
  ComplexMatrix rho_1;  // Tr_2
  ComplexMatrix rho_2;  // Tr_1
};

/// Both single-qubit marginals of a 4x4 two-qubit state.
ReducedPair reduced_pair(const ComplexMatrix& rho);

/// eta * rho + (1 - eta) * I / d.
ComplexMatrix scale_isotropically(const ComplexMatrix& rho, double eta);

struct IsotropyFit {
  double eta = 0.0;
  /// Frobenius norm of rho_ad - eta * rho_bd - (1 - eta) I/2.
  double residual = 0.0;
  bool isotropic = false;  // residual <= kIsotropyResidualTol
};

inline constexpr double kIsotropyResidualTol = 1e-8;
inline constexpr double kDegenerateTol = 1e-12;

/**
 * Least-squares eta in rho_ad = eta * rho_bd + (1 - eta) I/2 for qubit states:
 *
 *   eta = tr[(rho_ad - I/2)(rho_bd - I/2)] / tr[(rho_bd - I/2)^2]
 *
 * Throws DegenerateInputError when rho_bd is I/2 within kDegenerateTol, since
 * every eta fits in that case.
 */
IsotropyFit isotropy_fit(const ComplexMatrix& rho_ad, const ComplexMatrix& rho_bd);

}  // namespace disentangle
