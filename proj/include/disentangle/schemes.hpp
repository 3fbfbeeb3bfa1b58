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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "disentangle/cloning.hpp"
#include "disentangle/matrix.hpp"
#include "disentangle/separability.hpp"

namespace disentangle {

enum class Scheme {
  single_clone,  // clone one party's qubit (entanglement splitting)
  double_clone,  // both parties clone (broadcasting)
};

std::string_view to_string(Scheme scheme);
/// Accepts "split"/"single_clone" and "broadcast"/"double_clone". Throws RangeError otherwise.
Scheme parse_scheme(std::string_view name);

template <class T>
struct Named {
  std::string name;
  T value;
};

/// Splitting run through the explicit dilation. Input order (x, y).
struct SplitDilationOutput {
  ComplexMatrix three_qubit;     // (x1, x2, y), ancilla traced
  ComplexMatrix clone1_partner;  // (x1, y)
  ComplexMatrix clone2_partner;  // (x2, y)
};
SplitDilationOutput split_via_dilation(double alpha2, const ClonerSpec& spec);

/// Broadcasting run: party 1 holds (a1, b1), party 2 holds (a2, b2).
struct BroadcastDilationOutput {
  ComplexMatrix four_qubit;  // (a1, b1, a2, b2), both ancillas traced
  ComplexMatrix local_a1b1;
  ComplexMatrix local_a2b2;
  ComplexMatrix nonlocal_a1b2;
  ComplexMatrix nonlocal_b1a2;  // (b1, a2): party-1 qubit first
};
BroadcastDilationOutput broadcast_via_dilation(double alpha2, const ClonerSpec& spec);

struct SchemeReport {
  Scheme scheme = Scheme::single_clone;
  double input_alpha2 = 0.0;
  double eta = 0.0;
  std::vector<Named<ComplexMatrix>> output_states;
  std::vector<Named<SeparabilityVerdict>> verdicts;
  /// Fitted reduction factor per subsystem; empty when the reference marginal
  /// is maximally mixed (alpha^2 = 1/2), where every eta fits.
  std::vector<Named<std::optional<double>>> recovered_eta;
  /// Output names whose verdicts decide `disentangled`.
  std::vector<std::string> nonlocal_outputs;
  /// Largest entry difference between outputs that copy symmetry makes equal.
  double copy_symmetry_deviation = 0.0;
  bool disentangled = false;

  const ComplexMatrix& state(std::string_view name) const;
  const SeparabilityVerdict& verdict(std::string_view name) const;
  std::optional<double> recovered(std::string_view name) const;
};

/**
 * Clone qubit x of alpha|00> + beta|11> and keep (x1, y). The partner y is
 * untouched, x is isotropically shrunk by eta. Separable for every alpha iff
 * eta <= 1/3.
 */
SchemeReport disentangle_by_single_cloning(double alpha2, double eta);

/**
 * Both parties clone their qubit with the same cloner. Success is judged on the
 * cross pairs (a1, b2) and (b1, a2); the local pairs are reported only.
 */
SchemeReport disentangle_by_double_cloning(double alpha2, double eta);

SchemeReport run_scheme(Scheme scheme, double alpha2, double eta);

struct SchemeThreshold {
  Scheme scheme = Scheme::single_clone;
  double eta_all_alpha = 0.0;       // largest eta that disentangles every input
  double fidelity_all_alpha = 0.0;
  double eta_for_alpha2 = 0.0;      // largest cloner eta that disentangles this input
  double fidelity_for_alpha2 = 0.0;
};

struct SchemeComparison {
  double alpha2 = 0.0;
  SchemeThreshold single_clone;
  SchemeThreshold double_clone;
  double one_to_three_fidelity = 0.0;
  /// "double_clone", "one_to_three", "single_clone" sorted by descending
  /// fidelity available for this alpha^2 (ties keep that order).
  std::vector<Named<double>> fidelity_ordering;
};

SchemeComparison compare_schemes(double alpha2);

}  // namespace disentangle
