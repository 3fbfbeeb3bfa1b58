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
#include <limits>
#include <random>

#include "disentangle/errors.hpp"
#include "disentangle/linalg.hpp"
#include "test_support.hpp"

namespace disentangle {
namespace {

using testing::random_density;
using testing::random_hermitian;

TEST(Matrix, RejectsNonFiniteEntries) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(ComplexMatrix(1, {Complex(nan, 0.0)}), RangeError);
  ComplexMatrix m(2);
  EXPECT_THROW(m.set(0, 0, Complex(0.0, std::numeric_limits<double>::infinity())), RangeError);
  EXPECT_THROW(ComplexMatrix(2, std::vector<Complex>(3)), DimensionError);
}

TEST(Matrix, Predicates) {
  const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
  EXPECT_TRUE(half.is_hermitian());
  EXPECT_TRUE(half.is_unit_trace());
  EXPECT_TRUE(half.is_psd());
  const ComplexMatrix skew{{0.0, 1.0}, {-1.0, 0.0}};
  EXPECT_FALSE(skew.is_hermitian());
  EXPECT_FALSE(ComplexMatrix::diagonal({1.5, -0.5}).is_psd());
}

TEST(SubsystemDims, ZeroDimRejected) { EXPECT_THROW(SubsystemDims({2, 0}), DimensionError); }

TEST(TensorProduct, IdentityAndProjectors) {
  EXPECT_EQ(tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
  const auto p0 = ComplexMatrix::diagonal({1.0, 0.0});
  const auto p1 = ComplexMatrix::diagonal({0.0, 1.0});
  EXPECT_EQ(tensor_product(p0, p1), ComplexMatrix::diagonal({0.0, 1.0, 0.0, 0.0}));
}

TEST(TensorProduct, TraceIsMultiplicative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_hermitian(2 + trial % 3, rng);
    const auto b = random_hermitian(2 + trial % 2, rng);
    const auto ab = tensor_product(a, b);
    // direct summation over the diagonal
    Complex direct = 0.0;
    for (std::size_t i = 0; i < ab.dim(); ++i) direct += ab(i, i);
    EXPECT_NEAR(std::abs(direct - a.trace() * b.trace()), 0.0, 1e-12);
  }
}

TEST(TensorProduct, AssociativeOnIntegerEntries) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  auto random_int = [&](std::size_t n) {
    std::vector<Complex> e(n * n);
    for (auto& z : e) z = Complex(d(rng), d(rng));
    return ComplexMatrix(n, std::move(e));
  };
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_int(2), b = random_int(3), c = random_int(2);
    EXPECT_EQ(tensor_product(tensor_product(a, b), c), tensor_product(a, tensor_product(b, c)));
  }
}

TEST(PartialTrace, ProductStateFactorizes) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = random_density(2, rng);
    const auto sigma = random_hermitian(3, rng);
    const auto traced = partial_trace(tensor_product(rho, sigma), SubsystemDims{2, 3}, 1);
    EXPECT_LE(traced.max_abs_diff(rho * sigma.trace()), 1e-12);
  }
}

TEST(PartialTrace, BellStateMarginalIsMaximallyMixed) {
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> phi{h, 0.0, 0.0, h};
  const auto bell = ComplexMatrix::projector(phi);
  const auto half = 0.5 * ComplexMatrix::identity(2);
  EXPECT_LE(partial_trace(bell, SubsystemDims{2, 2}, 1).max_abs_diff(half), 1e-15);
  EXPECT_LE(partial_trace(bell, SubsystemDims{2, 2}, 0).max_abs_diff(half), 1e-15);
}

TEST(PartialTrace, MiddleSubsystemMatchesIndexSum) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = random_density(16, rng);
    const auto got = partial_trace(rho, SubsystemDims{2, 2, 4}, 1);
    EXPECT_LE(got.max_abs_diff(testing::trace_middle_of_224(rho)), 1e-15);
    EXPECT_NEAR(got.trace().real(), 1.0, 1e-12);
    EXPECT_TRUE(got.is_hermitian(1e-12));
  }
}

TEST(PartialTrace, MultiIndexOrderDoesNotMatter) {
  std::mt19937_64 rng(8);
  const auto rho = random_density(16, rng);
  const SubsystemDims dims{2, 2, 2, 2};
  const auto a = partial_trace(rho, dims, std::vector<std::size_t>{1, 3});
  const auto b = partial_trace(partial_trace(rho, dims, 3), SubsystemDims{2, 2, 2}, 1);
  EXPECT_LE(a.max_abs_diff(b), 1e-15);
  EXPECT_LE(partial_trace(rho, dims, std::vector<std::size_t>{3, 1}).max_abs_diff(a), 0.0);
}

TEST(PartialTrace, DimensionErrors) {
  const auto rho = ComplexMatrix::identity(4);
  EXPECT_THROW(partial_trace(rho, SubsystemDims{2, 3}, 0), DimensionError);
  EXPECT_THROW(partial_trace(rho, SubsystemDims{2, 2}, 2), DimensionError);
  EXPECT_THROW(partial_trace(rho, SubsystemDims{2, 2}, std::vector<std::size_t>{0, 0}), DimensionError);
}

TEST(PartialTranspose, ProductStateTransposesFactor) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = random_density(2, rng);
    const auto sigma = random_density(2, rng);
    const auto pt = partial_transpose(tensor_product(rho, sigma), SubsystemDims{2, 2}, 1);
    EXPECT_EQ(pt, tensor_product(rho, sigma.transpose()));
  }
}

TEST(PartialTranspose, InvolutionAndTracePreserved) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 25; ++trial) {
    const auto rho = random_density(4, rng);
    const SubsystemDims dims{2, 2};
    const auto pt = partial_transpose(rho, dims, trial % 2);
    EXPECT_EQ(partial_transpose(pt, dims, trial % 2), rho);
    EXPECT_EQ(pt.trace(), rho.trace());
    EXPECT_TRUE(pt.is_hermitian(1e-12));
  }
}

TEST(PartialTranspose, BellMinimumEigenvalue) {
  const double h = 1.0 / std::sqrt(2.0);
  const auto bell = ComplexMatrix::projector(std::vector<Complex>{h, 0.0, 0.0, h});
  const auto pt = partial_transpose(bell, SubsystemDims{2, 2}, 1);
  const auto oracle = testing::eigenvalues_by_charpoly(pt);
  EXPECT_NEAR(oracle.front(), -0.5, 1e-12);
  EXPECT_NEAR(hermitian_eigenvalues(pt).front(), -0.5, 1e-14);
}

TEST(PartialTranspose, DimensionError) {
  EXPECT_THROW(partial_transpose(ComplexMatrix::identity(4), SubsystemDims{2, 3}, 1), DimensionError);
}

TEST(HermitianEigenvalues, KnownSpectra) {
  const auto d = hermitian_eigenvalues(ComplexMatrix::diagonal({3.0, 1.0, 2.0}));
  ASSERT_EQ(d.size(), 3u);
  EXPECT_DOUBLE_EQ(d[0], 1.0);
  EXPECT_DOUBLE_EQ(d[1], 2.0);
  EXPECT_DOUBLE_EQ(d[2], 3.0);

  const auto x = hermitian_eigenvalues(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
  EXPECT_NEAR(x[0], -1.0, 1e-15);
  EXPECT_NEAR(x[1], 1.0, 1e-15);

  const auto y = hermitian_eigenvalues(ComplexMatrix{{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}});
  EXPECT_NEAR(y[0], -1.0, 1e-15);
  EXPECT_NEAR(y[1], 1.0, 1e-15);
}

TEST(HermitianEigenvalues, MatchesCharacteristicPolynomialRoots) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_hermitian(4, rng);
    const auto got = hermitian_eigenvalues(m);
    const auto oracle = testing::eigenvalues_by_charpoly(m);
    ASSERT_EQ(got.size(), 4u);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(got[k], oracle[k], 1e-9) << "trial " << trial;
  }
}

TEST(HermitianEigenvalues, TraceAndResiduals) {
  std::mt19937_64 rng(99);
  for (std::size_t n : {1u, 2u, 5u, 8u, 16u}) {
    const auto m = random_hermitian(n, rng);
    const auto sys = hermitian_eigensystem(m);
    ASSERT_EQ(sys.values.size(), n);
    EXPECT_TRUE(std::is_sorted(sys.values.begin(), sys.values.end()));
    double sum = 0.0;
    for (double v : sys.values) sum += v;
    EXPECT_NEAR(sum, m.trace().real(), 1e-10);
    for (std::size_t k = 0; k < n; ++k) {
      double residual = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        Complex mv = 0.0;
        for (std::size_t j = 0; j < n; ++j) mv += m(i, j) * sys.vectors(j, k);
        residual += std::norm(mv - sys.values[k] * sys.vectors(i, k));
      }
      EXPECT_LE(std::sqrt(residual), 1e-9);
    }
  }
}

TEST(HermitianEigenvalues, RejectsNonHermitian) {
  EXPECT_THROW(hermitian_eigenvalues(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), NonHermitianError);
}

TEST(HermitianEigenvalues, DegenerateSpectrum) {
  const auto v = hermitian_eigenvalues(ComplexMatrix::identity(6) * 0.25);
  for (double x : v) EXPECT_DOUBLE_EQ(x, 0.25);
}

}  // namespace
}  // namespace disentangle
