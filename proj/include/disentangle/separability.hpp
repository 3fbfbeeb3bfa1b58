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

/// A PT eigenvalue >= -kSeparabilityTol counts as nonnegative, so PPT states on
/// the boundary (minimum eigenvalue exactly zero) are separable.
inline constexpr double kSeparabilityTol = 1e-10;

struct SeparabilityVerdict {
  double min_pt_eigenvalue = 0.0;
  double negativity = 0.0;  // sum of |lambda| over negative PT eigenvalues
  bool separable = true;
};

/**
 * Peres-Horodecki test on a two-qubit state. Only 2x2 dims are accepted: for
 * larger systems PPT is necessary but not sufficient, and the separable flag
 * would overclaim.
 */
SeparabilityVerdict ppt_test(const ComplexMatrix& rho, const SubsystemDims& dims);
SeparabilityVerdict ppt_test(const ComplexMatrix& rho);

/// Closed alpha^2 interval; `empty` when no alpha^2 satisfies the condition.
struct Alpha2Window {
  double lower = 0.0;
  double upper = 0.0;
  bool empty = true;

  /// Strict interior membership; always false for an empty window.
  bool contains_interior(double alpha2) const noexcept {
    return !empty && alpha2 > lower && alpha2 < upper;
  }
  bool contains(const Alpha2Window& inner) const noexcept {
    return inner.empty || (!empty && lower <= inner.lower && inner.upper <= upper);
  }
  static Alpha2Window none() { return {}; }
  static Alpha2Window centered(double radius) { return {0.5 - radius, 0.5 + radius, false}; }
};

/// Analytic PPT verdict for the one-sided cloning output: inseparable iff
/// eta > 1/3 and the input is entangled.
bool split_inseparability_predicate(double alpha2, double eta);

/// Splitting analogue of the broadcast windows: [0, 1] when eta > 1/3, else empty.
Alpha2Window split_inseparable_window(double eta);

/// alpha^2 range where the cross pair is inseparable:
/// 1/2 -+ sqrt(1/4 - (1 - eta^2)^2 / (16 eta^4)); empty below eta = 1/sqrt(3).
Alpha2Window broadcast_nonlocal_window(double eta);

/// alpha^2 range where a local pair is separable:
/// 1/2 -+ sqrt(1/4 - (1 - eta)^2 / (4 eta^2)); empty below eta = 1/2.
Alpha2Window broadcast_local_separable_window(double eta);

}  // namespace disentangle
