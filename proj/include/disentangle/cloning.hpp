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

#include <array>
#include <cstddef>
#include <cstdint>

#include "disentangle/matrix.hpp"

namespace disentangle {

/// Reduction factor of the optimal universal 1->2 cloner.
inline constexpr double kOptimalEta = 2.0 / 3.0;

/// Parameters within this distance above 2/3 are snapped to 2/3 so that
/// ten-digit decimal inputs such as 0.6666666667 name the optimal cloner.
inline constexpr double kEtaSnapTol = 1e-9;

/// Validates and normalizes a cloner reduction factor: 0 < eta <= 2/3.
double checked_cloner_eta(double eta);

/**
 * Symmetric isotropic 1->2 qubit cloner with reduction factor eta.
 *
 *   V|0> = a|00>|A> + b(|01> + |10>)|B>
 *   V|1> = a|11>|A~> + b(|01> + |10>)|B~>
 *
 * with a = sqrt(eta), b = sqrt((1 - eta)/2) and the ancilla overlap
 * s = <B~|A> = <A~|B> = sqrt(eta / (2(1 - eta))), so that eta = 2abs.
 */
class ClonerSpec {
 public:
  /// Throws RangeError unless 0 < eta <= 2/3 (after snapping, see kEtaSnapTol).
  static ClonerSpec from_eta(double eta);
  static ClonerSpec optimal() { return from_eta(kOptimalEta); }

  double eta() const noexcept { return eta_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double s() const noexcept { return s_; }

 private:
  ClonerSpec(double eta, double a, double b, double s) : eta_(eta), a_(a), b_(b), s_(s) {}
  double eta_, a_, b_, s_;
};

/// F = (1 + eta) / 2; eta in [0, 1].
double fidelity_from_eta(double eta);

struct Fraction {
  std::int64_t numerator;
  std::int64_t denominator;
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Optimal universal 1->M fidelity (2M + 1) / (3M), reduced to lowest terms. M >= 2.
Fraction optimal_cloning_fidelity_exact(std::int64_t copies);
double optimal_cloning_fidelity(std::int64_t copies);

inline constexpr std::size_t kAncillaDim = 4;
/// copy 1 (2) x copy 2 (2) x ancilla (4).
inline constexpr std::size_t kDilationDim = 2 * 2 * kAncillaDim;

/**
 * Concrete isometry C^2 -> C^2 (x) C^2 (x) C^4 realizing ClonerSpec.
 *
 * Ancilla basis e0..e3: A = e0, B = e1, B~ = s e0 + sqrt(1-s^2) e2,
 * A~ = s e1 + sqrt(1-s^2) e3. Output index = 8*copy1 + 4*copy2 + ancilla.
 */
class DilationIsometry {
 public:
  using Column = std::array<Complex, kDilationDim>;

  explicit DilationIsometry(const ClonerSpec& spec);

  const ClonerSpec& spec() const noexcept { return spec_; }
  const Column& column(std::size_t input) const { return columns_.at(input); }
  Complex operator()(std::size_t output, std::size_t input) const { return columns_[input][output]; }

  /// V^H V, a 2x2 matrix that equals I for a valid isometry.
  ComplexMatrix gram() const;

 private:
  ClonerSpec spec_;
  std::array<Column, 2> columns_{};
};

DilationIsometry build_dilation(const ClonerSpec& spec);

/// Dims after cloning subsystem `target`: it is replaced by (copy1, copy2, ancilla) = (2, 2, 4).
SubsystemDims cloned_dims(const SubsystemDims& dims, std::size_t target);

/**
 * Applies the cloner to qubit `target` of rho (identity elsewhere) and returns
 * the full output W rho W^H on cloned_dims(dims, target).
 */
ComplexMatrix clone_qubit_via_dilation(const ComplexMatrix& rho, const SubsystemDims& dims,
                                       std::size_t target, const ClonerSpec& spec);

// Closed forms. alpha2 in [0, 1]; eta in [0, 1] (the closed forms stay valid
// quantum states beyond the cloner range, which the tests use as limits).

/// Clone qubit x of alpha|00> + beta|11>, keep one copy and y. Ordering (clone, partner).
ComplexMatrix split_output_closed_form(double alpha2, double eta);

/// alpha^2 eta |00><00| + beta^2 eta |11><11| + (1 - eta)|+><+|.
ComplexMatrix broadcast_local_closed_form(double alpha2, double eta);

/// Cross pair (a_i, b_j) after both parties clone; equals (L_eta (x) L_eta)(rho_in).
ComplexMatrix broadcast_nonlocal_closed_form(double alpha2, double eta);

}  // namespace disentangle
