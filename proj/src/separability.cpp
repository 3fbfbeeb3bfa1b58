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

#include "disentangle/separability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "disentangle/cloning.hpp"
#include "disentangle/errors.hpp"
#include "disentangle/linalg.hpp"

namespace disentangle {

namespace {

// Radicands within this distance below zero are rounding noise at a window's
// closing point (eta = 1/sqrt(3) or 1/2) and are treated as zero.
constexpr double kRadicandTol = 1e-12;

Alpha2Window window_from_radicand(double radicand) {
  if (radicand < -kRadicandTol) return Alpha2Window::none();
  return Alpha2Window::centered(std::sqrt(std::max(0.0, radicand)));
}

}  // namespace

SeparabilityVerdict ppt_test(const ComplexMatrix& rho, const SubsystemDims& dims) {
  if (dims != SubsystemDims{2, 2})
    throw DimensionError("ppt_test: only 2x2 systems are supported (PPT is not sufficient beyond)");
  dims.require_consistent(rho, 1);

  const auto spectrum = hermitian_eigenvalues(partial_transpose(rho, dims, 1));
  SeparabilityVerdict verdict;
  verdict.min_pt_eigenvalue = spectrum.front();
  for (double lambda : spectrum)
    if (lambda < 0.0) verdict.negativity += -lambda;
  verdict.separable = verdict.min_pt_eigenvalue >= -kSeparabilityTol;
  return verdict;
}

SeparabilityVerdict ppt_test(const ComplexMatrix& rho) { return ppt_test(rho, SubsystemDims{2, 2}); }

bool split_inseparability_predicate(double alpha2, double eta) {
  if (!(alpha2 >= 0.0 && alpha2 <= 1.0))
    throw RangeError("alpha2 must lie in [0, 1], got " + format_number(alpha2));
  eta = checked_cloner_eta(eta);
  return eta > 1.0 / 3.0 && alpha2 > 0.0 && alpha2 < 1.0;
}

Alpha2Window split_inseparable_window(double eta) {
  eta = checked_cloner_eta(eta);
  if (eta > 1.0 / 3.0) return {0.0, 1.0, false};
  return Alpha2Window::none();
}

Alpha2Window broadcast_nonlocal_window(double eta) {
  eta = checked_cloner_eta(eta);
  const double one_minus_sq = 1.0 - eta * eta;
  const double eta2 = eta * eta;
  return window_from_radicand(0.25 - (one_minus_sq * one_minus_sq) / (16.0 * eta2 * eta2));
}

Alpha2Window broadcast_local_separable_window(double eta) {
  eta = checked_cloner_eta(eta);
  const double ratio = (1.0 - eta) / eta;
  return window_from_radicand(0.25 - 0.25 * ratio * ratio);
}

}  // namespace disentangle
