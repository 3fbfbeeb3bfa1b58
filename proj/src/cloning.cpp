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

#include "disentangle/cloning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "disentangle/errors.hpp"

namespace disentangle {

namespace {

void check_unit_interval(const char* what, double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw RangeError(std::string(what) + " must lie in [0, 1], got " + format_number(x));
}

}  // namespace

double checked_cloner_eta(double eta) {
  if (eta > kOptimalEta && eta <= kOptimalEta + kEtaSnapTol) return kOptimalEta;
  if (!(eta > 0.0 && eta <= kOptimalEta))
    throw RangeError("cloner eta must lie in (0, 2/3], got " + format_number(eta));
  return eta;
}

ClonerSpec ClonerSpec::from_eta(double eta) {
  eta = checked_cloner_eta(eta);
  const double a = std::sqrt(eta);
  const double b = std::sqrt((1.0 - eta) / 2.0);
  // s <= 1 exactly at the optimal cloner; clamp the last ulp.
  const double s = std::min(1.0, std::sqrt(eta / (2.0 * (1.0 - eta))));
  return ClonerSpec(eta, a, b, s);
}

double fidelity_from_eta(double eta) {
  check_unit_interval("eta", eta);
  return 0.5 * (1.0 + eta);
}

Fraction optimal_cloning_fidelity_exact(std::int64_t copies) {
  if (copies < 2) throw RangeError("copy count must be at least 2, got " + std::to_string(copies));
  std::int64_t num = 2 * copies + 1;
  std::int64_t den = 3 * copies;
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

double optimal_cloning_fidelity(std::int64_t copies) {
  return optimal_cloning_fidelity_exact(copies).value();
}

DilationIsometry::DilationIsometry(const ClonerSpec& spec) : spec_(spec) {
  const double a = spec.a();
  const double b = spec.b();
  const double s = spec.s();
  const double eta = spec.eta();
  const double c = std::sqrt(std::max(0.0, (2.0 - 3.0 * eta) / (2.0 * (1.0 - eta))));

  auto index = [](std::size_t copy1, std::size_t copy2, std::size_t ancilla) {
    return (copy1 * 2 + copy2) * kAncillaDim + ancilla;
  };
  // Ancilla vectors as coefficient lists over e0..e3.
  const std::array<double, kAncillaDim> anc_a{1, 0, 0, 0};
  const std::array<double, kAncillaDim> anc_b{0, 1, 0, 0};
  const std::array<double, kAncillaDim> anc_b_tilde{s, 0, c, 0};
  const std::array<double, kAncillaDim> anc_a_tilde{0, s, 0, c};

  auto& v0 = columns_[0];
  auto& v1 = columns_[1];
  for (std::size_t e = 0; e < kAncillaDim; ++e) {
    v0[index(0, 0, e)] += a * anc_a[e];
    v0[index(0, 1, e)] += b * anc_b[e];
    v0[index(1, 0, e)] += b * anc_b[e];

    v1[index(1, 1, e)] += a * anc_a_tilde[e];
    v1[index(0, 1, e)] += b * anc_b_tilde[e];
    v1[index(1, 0, e)] += b * anc_b_tilde[e];
  }
}

ComplexMatrix DilationIsometry::gram() const {
  ComplexMatrix g(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < kDilationDim; ++k) sum += std::conj(columns_[i][k]) * columns_[j][k];
      g.set(i, j, sum);
    }
  return g;
}

DilationIsometry build_dilation(const ClonerSpec& spec) { return DilationIsometry(spec); }

SubsystemDims cloned_dims(const SubsystemDims& dims, std::size_t target) {
  if (target >= dims.size() || dims[target] != 2)
    throw DimensionError("cloned_dims: target subsystem must be a qubit");
  static constexpr std::array<std::size_t, 3> block{2, 2, kAncillaDim};
  return dims.replaced(target, block);
}

ComplexMatrix clone_qubit_via_dilation(const ComplexMatrix& rho, const SubsystemDims& dims,
                                       std::size_t target, const ClonerSpec& spec) {
  dims.require_consistent(rho, target);
  if (dims[target] != 2) throw DimensionError("clone_qubit_via_dilation: target is not a qubit");

  const DilationIsometry v(spec);
  const std::size_t left = dims.left_of(target);
  const std::size_t right = dims.right_of(target);
  const std::size_t n = rho.dim();
  const std::size_t big = left * kDilationDim * right;

  auto in_index = [&](std::size_t l, std::size_t i, std::size_t r) { return (l * 2 + i) * right + r; };
  auto out_index = [&](std::size_t l, std::size_t o, std::size_t r) {
    return (l * kDilationDim + o) * right + r;
  };

  // half = W rho, big x n.
  std::vector<Complex> half(big * n);
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t o = 0; o < kDilationDim; ++o)
      for (std::size_t r = 0; r < right; ++r) {
        const std::size_t row = out_index(l, o, r);
        for (std::size_t i = 0; i < 2; ++i) {
          const Complex w = v(o, i);
          if (w == Complex{}) continue;
          const std::size_t src = in_index(l, i, r);
          for (std::size_t col = 0; col < n; ++col) half[row * n + col] += w * rho(src, col);
        }
      }

  // out = half W^H, big x big.
  std::vector<Complex> out(big * big);
  for (std::size_t row = 0; row < big; ++row)
    for (std::size_t l = 0; l < left; ++l)
      for (std::size_t o = 0; o < kDilationDim; ++o)
        for (std::size_t r = 0; r < right; ++r) {
          Complex sum = 0.0;
          for (std::size_t i = 0; i < 2; ++i) sum += half[row * n + in_index(l, i, r)] * std::conj(v(o, i));
          out[row * big + out_index(l, o, r)] = sum;
        }
  return ComplexMatrix(big, std::move(out));
}

ComplexMatrix split_output_closed_form(double alpha2, double eta) {
  check_unit_interval("alpha2", alpha2);
  check_unit_interval("eta", eta);
  const double beta2 = 1.0 - alpha2;
  const double coherence = std::sqrt(alpha2) * std::sqrt(beta2) * eta;
  // |01> carries beta^2 and |10> carries alpha^2 in (clone, partner) order.
  ComplexMatrix rho = ComplexMatrix::diagonal({0.5 * (1.0 + eta) * alpha2, 0.5 * (1.0 - eta) * beta2,
                                               0.5 * (1.0 - eta) * alpha2, 0.5 * (1.0 + eta) * beta2});
  rho.set(0, 3, coherence);
  rho.set(3, 0, coherence);
  return rho;
}

ComplexMatrix broadcast_local_closed_form(double alpha2, double eta) {
  check_unit_interval("alpha2", alpha2);
  check_unit_interval("eta", eta);
  const double beta2 = 1.0 - alpha2;
  const double plus_weight = 0.5 * (1.0 - eta);  // (1-eta) |+><+| spread over |01>, |10>
  ComplexMatrix rho =
      ComplexMatrix::diagonal({alpha2 * eta, plus_weight, plus_weight, beta2 * eta});
  rho.set(1, 2, plus_weight);
  rho.set(2, 1, plus_weight);
  return rho;
}

ComplexMatrix broadcast_nonlocal_closed_form(double alpha2, double eta) {
  check_unit_interval("alpha2", alpha2);
  check_unit_interval("eta", eta);
  const double beta2 = 1.0 - alpha2;
  const double noise = 0.25 * (1.0 - eta) * (1.0 - eta);
  const double cross = 0.25 * (1.0 - eta * eta);
  const double coherence = std::sqrt(alpha2) * std::sqrt(beta2) * eta * eta;
  ComplexMatrix rho =
      ComplexMatrix::diagonal({alpha2 * eta + noise, cross, cross, beta2 * eta + noise});
  rho.set(0, 3, coherence);
  rho.set(3, 0, coherence);
  return rho;
}

}  // namespace disentangle
