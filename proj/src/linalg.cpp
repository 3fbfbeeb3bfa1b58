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

#include "disentangle/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "disentangle/errors.hpp"

namespace disentangle {

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  const std::size_t n = da * db;
  std::vector<Complex> out(n * n);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out[(i * db + k) * n + (j * db + l)] = aij * b(k, l);
    }
  return ComplexMatrix(n, std::move(out));
}

// Row index of a composite basis state is (left, mid, right) flattened with
// `left` most significant.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemDims& dims,
                            std::size_t traced_index) {
  dims.require_consistent(rho, traced_index);
  const std::size_t left = dims.left_of(traced_index);
  const std::size_t mid = dims[traced_index];
  const std::size_t right = dims.right_of(traced_index);
  const std::size_t n = left * right;

  std::vector<Complex> out(n * n);
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t r = 0; r < right; ++r)
      for (std::size_t lp = 0; lp < left; ++lp)
        for (std::size_t rp = 0; rp < right; ++rp) {
          Complex sum = 0.0;
          for (std::size_t m = 0; m < mid; ++m)
            sum += rho((l * mid + m) * right + r, (lp * mid + m) * right + rp);
          out[(l * right + r) * n + (lp * right + rp)] = sum;
        }
  return ComplexMatrix(n, std::move(out));
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemDims& dims,
                            std::vector<std::size_t> traced_indices) {
  std::sort(traced_indices.begin(), traced_indices.end());
  if (std::adjacent_find(traced_indices.begin(), traced_indices.end()) != traced_indices.end())
    throw DimensionError("partial_trace: repeated subsystem index");

  if (dims.total() != rho.dim()) throw DimensionError("partial_trace: dims inconsistent with matrix");

  // Trace from the highest index down so the remaining indices stay valid.
  ComplexMatrix current = rho;
  SubsystemDims current_dims = dims;
  for (auto it = traced_indices.rbegin(); it != traced_indices.rend(); ++it) {
    current = partial_trace(current, current_dims, *it);
    current_dims = current_dims.without(*it);
  }
  return current;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const SubsystemDims& dims,
                                std::size_t transposed_index) {
  dims.require_consistent(rho, transposed_index);
  const std::size_t left = dims.left_of(transposed_index);
  const std::size_t mid = dims[transposed_index];
  const std::size_t right = dims.right_of(transposed_index);
  const std::size_t n = rho.dim();

  std::vector<Complex> out(n * n);
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t m = 0; m < mid; ++m)
      for (std::size_t r = 0; r < right; ++r)
        for (std::size_t lp = 0; lp < left; ++lp)
          for (std::size_t mp = 0; mp < mid; ++mp)
            for (std::size_t rp = 0; rp < right; ++rp)
              out[((l * mid + m) * right + r) * n + ((lp * mid + mp) * right + rp)] =
                  rho((l * mid + mp) * right + r, (lp * mid + m) * right + rp);
  return ComplexMatrix(n, std::move(out));
}

namespace {

class Workspace {
 public:
  explicit Workspace(std::size_t n) : n_(n), data_(n * n) {}
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  Complex operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::size_t dim() const { return n_; }

  double off_diagonal_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j) s += std::norm(data_[i * n_ + j]);
    return std::sqrt(s);
  }

 private:
  std::size_t n_;
  std::vector<Complex> data_;
};

// 2x2 unitary G acting on coordinates (p, q).
struct Rotation {
  Complex pp, pq, qp, qq;
};

// G = diag(1, conj(phase)) * [[c, s], [-s, c]] with phase = a_pq / |a_pq|, so that
// G^H A G is diagonal on the (p, q) block.
Rotation jacobi_rotation(const Workspace& a, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  const Complex phase_conj = std::conj(apq / mag);
  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  return {c, s, -s * phase_conj, c * phase_conj};
}

void apply_right(Workspace& m, std::size_t p, std::size_t q, const Rotation& g) {
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const Complex mkp = m(k, p);
    const Complex mkq = m(k, q);
    m(k, p) = mkp * g.pp + mkq * g.qp;
    m(k, q) = mkp * g.pq + mkq * g.qq;
  }
}

void apply_left_adjoint(Workspace& m, std::size_t p, std::size_t q, const Rotation& g) {
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const Complex mpk = m(p, k);
    const Complex mqk = m(q, k);
    m(p, k) = std::conj(g.pp) * mpk + std::conj(g.qp) * mqk;
    m(q, k) = std::conj(g.pq) * mpk + std::conj(g.qq) * mqk;
  }
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double tol, JacobiOptions options) {
  if (!m.is_hermitian(tol))
    throw NonHermitianError("hermitian_eigensystem: matrix is not Hermitian within tolerance");

  const std::size_t n = m.dim();
  Workspace a(n);
  Workspace v(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    // symmetrize away the rounding-level anti-Hermitian part
    a(i, i) = a(i, i).real();
    v(i, i) = 1.0;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }

  const double threshold = options.off_diagonal_tol * std::max(1.0, m.frobenius_norm());
  bool converged = a.off_diagonal_norm() <= threshold;
  for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) == 0.0) continue;
        const Rotation g = jacobi_rotation(a, p, q);
        apply_right(a, p, q, g);
        apply_left_adjoint(a, p, q, g);
        apply_right(v, p, q, g);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    converged = a.off_diagonal_norm() <= threshold;
  }
  if (!converged)
    throw ConvergenceError("hermitian_eigensystem: no convergence after " +
                           std::to_string(options.max_sweeps) + " sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigenSystem result;
  result.values.reserve(n);
  std::vector<Complex> vectors(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    result.values.push_back(a(order[k], order[k]).real());
    for (std::size_t i = 0; i < n; ++i) vectors[i * n + k] = v(i, order[k]);
  }
  result.vectors = ComplexMatrix(n, std::move(vectors));
  return result;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  return hermitian_eigensystem(m, tol).values;
}

}  // namespace disentangle
