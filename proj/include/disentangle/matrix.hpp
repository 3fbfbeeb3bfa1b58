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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace disentangle {

using Complex = std::complex<double>;

/// Default slack for the Hermitian / unit-trace / PSD predicates.
inline constexpr double kDefaultTol = 1e-10;

/**
 * Dense square complex matrix stored row-major.
 *
 * Every stored entry is finite; constructors and set() reject NaN/Inf.
 * There is no mutable element access, so a constructed matrix keeps that
 * invariant for its whole lifetime.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// dim x dim zero matrix.
  explicit ComplexMatrix(std::size_t dim);

  /// Takes ownership of dim*dim row-major entries.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  /// |v><v| for a (not necessarily normalized) vector v.
  static ComplexMatrix projector(std::span<const Complex> v);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }
  void set(std::size_t row, std::size_t col, Complex value);

  std::span<const Complex> entries() const noexcept { return data_; }

  Complex trace() const noexcept;
  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  /// Frobenius norm of A.
  double frobenius_norm() const noexcept;
  /// max |A_ij - B_ij|; dims must agree.
  double max_abs_diff(const ComplexMatrix& other) const;

  bool is_hermitian(double tol = kDefaultTol) const noexcept;
  bool is_unit_trace(double tol = kDefaultTol) const noexcept;
  /// Hermitian and every eigenvalue >= -tol.
  bool is_psd(double tol = kDefaultTol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar) { return lhs *= scalar; }
  friend ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs) { return rhs *= scalar; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  void check_finite() const;
  void check_same_dim(const ComplexMatrix& other) const;

  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m);

/// Shortest decimal string that parses back to the same double.
std::string format_number(double value);

/**
 * Ordered local dimensions of a composite system. The leftmost subsystem is
 * the most significant index of the row-major layout.
 */
class SubsystemDims {
 public:
  SubsystemDims() = default;
  SubsystemDims(std::initializer_list<std::size_t> dims);
  explicit SubsystemDims(std::vector<std::size_t> dims);

  std::size_t size() const noexcept { return dims_.size(); }
  std::size_t operator[](std::size_t i) const { return dims_.at(i); }
  const std::vector<std::size_t>& values() const noexcept { return dims_; }

  std::size_t total() const noexcept;
  /// Product of dims strictly before / after `index`.
  std::size_t left_of(std::size_t index) const;
  std::size_t right_of(std::size_t index) const;

  SubsystemDims without(std::size_t index) const;
  /// Replaces subsystem `index` by the given block of subsystems.
  SubsystemDims replaced(std::size_t index, std::span<const std::size_t> block) const;

  /// Throws DimensionError unless total() == m.dim() and index < size().
  void require_consistent(const ComplexMatrix& m, std::size_t index) const;

  friend bool operator==(const SubsystemDims&, const SubsystemDims&) = default;

 private:
  std::vector<std::size_t> dims_;
};

}  // namespace disentangle
