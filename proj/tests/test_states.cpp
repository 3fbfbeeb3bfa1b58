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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "disentangle/cloning.hpp"
#include "disentangle/errors.hpp"
#include "disentangle/linalg.hpp"
#include "disentangle/states.hpp"
#include "test_support.hpp"

namespace disentangle {
namespace {

TEST(PureBipartiteState, RangeAndDerivedBeta) {
  EXPECT_THROW(PureBipartiteState::from_alpha2(-0.1), RangeError);
  EXPECT_THROW(PureBipartiteState::from_alpha2(1.5), RangeError);
  EXPECT_THROW(PureBipartiteState::from_alpha2(std::nan("")), RangeError);
  for (double a2 : testing::linspace(0.0, 1.0, 41)) {
    const auto psi = PureBipartiteState::from_alpha2(a2);
    EXPECT_EQ(psi.alpha2() + psi.beta2(), 1.0);
    EXPECT_EQ(psi.is_entangled(), a2 > 0.0 && a2 < 1.0);
  }
}

TEST(DensityMatrix, ProductState) {
  EXPECT_EQ(density_matrix(PureBipartiteState::from_alpha2(1.0)), ComplexMatrix::diagonal({1.0, 0.0, 0.0, 0.0}));
}

TEST(DensityMatrix, BellCorners) {
  const auto rho = density_matrix(PureBipartiteState::from_alpha2(0.5));
  for (auto [i, j] : {std::pair{0, 0}, {0, 3}, {3, 0}, {3, 3}}) EXPECT_NEAR(rho(i, j).real(), 0.5, 1e-15);
}

TEST(DensityMatrix, CoherenceEntry) {
  const auto rho = density_matrix(PureBipartiteState::from_alpha2(0.3));
  EXPECT_NEAR(rho(0, 3).real(), std::sqrt(0.3 * 0.7), 1e-15);
  EXPECT_NEAR(rho(0, 3).real(), 0.458258, 1e-6);
  EXPECT_EQ(rho(1, 1), Complex{});
  EXPECT_EQ(rho(1, 2), Complex{});
}

TEST(DensityMatrix, PureAndSchmidtSymmetric) {
  for (double a2 : testing::linspace(0.0, 1.0, 51)) {
    const auto rho = density_matrix(PureBipartiteState::from_alpha2(a2));
    EXPECT_NEAR((rho * rho).trace().real(), 1.0, 1e-12);
    EXPECT_LE((rho * rho).max_abs_diff(rho), 1e-12);
    const auto pair = reduced_pair(rho);
    const auto s1 = hermitian_eigenvalues(pair.rho_1);
    const auto s2 = hermitian_eigenvalues(pair.rho_2);
    EXPECT_NEAR(s1[0], s2[0], 1e-14);
    EXPECT_NEAR(s1[1], s2[1], 1e-14);
  }
}

TEST(ReducedPair, BellAndSchmidt) {
  const auto bell = reduced_pair(density_matrix(PureBipartiteState::from_alpha2(0.5)));
  EXPECT_LE(bell.rho_1.max_abs_diff(0.5 * ComplexMatrix::identity(2)), 1e-15);
  EXPECT_LE(bell.rho_2.max_abs_diff(0.5 * ComplexMatrix::identity(2)), 1e-15);

  const auto pair = reduced_pair(density_matrix(PureBipartiteState::from_alpha2(0.2)));
  const auto expected = ComplexMatrix::diagonal({0.2, 0.8});
  EXPECT_LE(pair.rho_1.max_abs_diff(expected), 1e-15);
  EXPECT_LE(pair.rho_2.max_abs_diff(expected), 1e-15);
}

TEST(ReducedPair, CloneMarginalOfSplitOutput) {
  const auto pair = reduced_pair(split_output_closed_form(0.5, 2.0 / 3.0));
  EXPECT_LE(pair.rho_1.max_abs_diff(ComplexMatrix::diagonal({0.5, 0.5})), 1e-15);
  EXPECT_TRUE(pair.rho_1.is_unit_trace());
  EXPECT_TRUE(pair.rho_2.is_unit_trace());
}

TEST(ReducedPair, RejectsWrongDimension) {
  EXPECT_THROW(reduced_pair(ComplexMatrix::identity(8)), DimensionError);
}

TEST(IsotropyFit, Unchanged) {
  const auto rho = ComplexMatrix::diagonal({0.3, 0.7});
  const auto fit = isotropy_fit(rho, rho);
  EXPECT_NEAR(fit.eta, 1.0, 1e-14);
  EXPECT_TRUE(fit.isotropic);
}

TEST(IsotropyFit, FullyRandomized) {
  const auto fit = isotropy_fit(0.5 * ComplexMatrix::identity(2), ComplexMatrix::diagonal({0.3, 0.7}));
  EXPECT_NEAR(fit.eta, 0.0, 1e-14);
  EXPECT_TRUE(fit.isotropic);
}

TEST(IsotropyFit, ConstructThenRecover) {
  const auto bd = ComplexMatrix::diagonal({0.3, 0.7});
  const auto ad = (2.0 / 3.0) * bd + (1.0 / 6.0) * ComplexMatrix::identity(2);
  EXPECT_NEAR(isotropy_fit(ad, bd).eta, 2.0 / 3.0, 1e-14);
}

TEST(IsotropyFit, RoundTripOnRandomStates) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rho = testing::random_density(2, rng);
    const double eta = (trial % 21) / 20.0;
    const auto fit = isotropy_fit(scale_isotropically(rho, eta), rho);
    EXPECT_NEAR(fit.eta, eta, 1e-10);
    EXPECT_LE(fit.residual, 1e-12);
  }
}

TEST(IsotropyFit, FlagsNonIsotropicRelation) {
  // A rotated Bloch vector is not a scaled copy of the original.
  const auto bd = ComplexMatrix::diagonal({0.9, 0.1});
  const ComplexMatrix ad{{0.5, 0.4}, {0.4, 0.5}};
  const auto fit = isotropy_fit(ad, bd);
  EXPECT_NEAR(fit.eta, 0.0, 1e-14);
  EXPECT_FALSE(fit.isotropic);
}

TEST(IsotropyFit, DegenerateReference) {
  const auto half = 0.5 * ComplexMatrix::identity(2);
  EXPECT_THROW(isotropy_fit(ComplexMatrix::diagonal({0.3, 0.7}), half), DegenerateInputError);
  EXPECT_THROW(isotropy_fit(half, ComplexMatrix::identity(4) * 0.25), DimensionError);
}

}  // namespace
}  // namespace disentangle
