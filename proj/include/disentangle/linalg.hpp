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

#include <cstddef>
#include <vector>

#include "disentangle/matrix.hpp"

namespace disentangle {

/// Kronecker product: entry (i*dB+k, j*dB+l) = A(i,j) * B(k,l).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out subsystem `traced_index`. The result lives on dims.without(traced_index).
ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemDims& dims,
                            std::size_t traced_index);

/// Traces out several subsystems at once; indices refer to `dims` and may be in any order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemDims& dims,
                            std::vector<std::size_t> traced_indices);

/// Transposes the indices of one subsystem. Applying it twice is the identity.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const SubsystemDims& dims,
                                std::size_t transposed_index);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

struct JacobiOptions {
  double off_diagonal_tol = 1e-13;
  int max_sweeps = 100;
};

// Cyclic complex Jacobi. Throws NonHermitianError when M is not Hermitian
// within `tol`, ConvergenceError if max_sweeps is exhausted.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double tol = kDefaultTol,
                                  JacobiOptions options = {});

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol = kDefaultTol);

}  // namespace disentangle
