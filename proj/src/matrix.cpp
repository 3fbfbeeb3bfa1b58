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

#include "disentangle/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>

#include "disentangle/errors.hpp"
#include "disentangle/linalg.hpp"

namespace disentangle {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw DimensionError("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                         " entries, got " + std::to_string(data_.size()));
  }
  check_finite();
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionError("ComplexMatrix: rows must form a square matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  check_finite();
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.data_[i * dim + i] = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m.data_[i * m.dim_ + i] = values[i];
  m.check_finite();
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> v) {
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m.data_[i * m.dim_ + j] = v[i] * std::conj(v[j]);
  m.check_finite();
  return m;
}

void ComplexMatrix::set(std::size_t row, std::size_t col, Complex value) {
  if (row >= dim_ || col >= dim_) throw DimensionError("ComplexMatrix::set: index out of range");
  if (!is_finite(value)) throw RangeError("ComplexMatrix::set: non-finite entry");
  data_[row * dim_ + col] = value;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += data_[i * dim_ + i];
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r.data_[j * dim_ + i] = std::conj(data_[i * dim_ + j]);
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r.data_[j * dim_ + i] = data_[i * dim_ + j];
  return r;
}

double ComplexMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  check_same_dim(other);
  double d = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k) d = std::max(d, std::abs(data_[k] - other.data_[k]));
  return d;
}

bool ComplexMatrix::is_hermitian(double tol) const noexcept {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (std::abs(data_[i * dim_ + j] - std::conj(data_[j * dim_ + i])) > tol) return false;
  return true;
}

bool ComplexMatrix::is_unit_trace(double tol) const noexcept {
  return std::abs(trace() - Complex(1.0, 0.0)) <= tol;
}

bool ComplexMatrix::is_psd(double tol) const {
  if (!is_hermitian(tol)) return false;
  const auto values = hermitian_eigenvalues(*this, tol);
  return values.empty() || values.front() >= -tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  check_same_dim(rhs);
  std::transform(data_.begin(), data_.end(), rhs.data_.begin(), data_.begin(), std::plus<>{});
  check_finite();
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  check_same_dim(rhs);
  std::transform(data_.begin(), data_.end(), rhs.data_.begin(), data_.begin(), std::minus<>{});
  check_finite();
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : data_) z *= scalar;
  check_finite();
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  lhs.check_same_dim(rhs);
  const std::size_t n = lhs.dim_;
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs.data_[i * n + k];
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) r.data_[i * n + j] += a * rhs.data_[k * n + j];
    }
  r.check_finite();
  return r;
}

void ComplexMatrix::check_finite() const {
  if (!std::all_of(data_.begin(), data_.end(), is_finite))
    throw RangeError("ComplexMatrix: non-finite entry");
}

void ComplexMatrix::check_same_dim(const ComplexMatrix& other) const {
  if (dim_ != other.dim_)
    throw DimensionError("ComplexMatrix: dimension mismatch " + std::to_string(dim_) + " vs " +
                         std::to_string(other.dim_));
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::logic_error("format_number: buffer too small");
  return std::string(buf, ptr);
}

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os;
}

SubsystemDims::SubsystemDims(std::initializer_list<std::size_t> dims)
    : SubsystemDims(std::vector<std::size_t>(dims)) {}

SubsystemDims::SubsystemDims(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (std::any_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; }))
    throw DimensionError("SubsystemDims: local dimensions must be positive");
}

std::size_t SubsystemDims::total() const noexcept {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>{});
}

std::size_t SubsystemDims::left_of(std::size_t index) const {
  if (index >= dims_.size()) throw DimensionError("SubsystemDims: index out of range");
  return std::accumulate(dims_.begin(), dims_.begin() + static_cast<std::ptrdiff_t>(index),
                         std::size_t{1}, std::multiplies<>{});
}

std::size_t SubsystemDims::right_of(std::size_t index) const {
  if (index >= dims_.size()) throw DimensionError("SubsystemDims: index out of range");
  return std::accumulate(dims_.begin() + static_cast<std::ptrdiff_t>(index) + 1, dims_.end(),
                         std::size_t{1}, std::multiplies<>{});
}

SubsystemDims SubsystemDims::without(std::size_t index) const {
  if (index >= dims_.size()) throw DimensionError("SubsystemDims: index out of range");
  auto d = dims_;
  d.erase(d.begin() + static_cast<std::ptrdiff_t>(index));
  return SubsystemDims(std::move(d));
}

SubsystemDims SubsystemDims::replaced(std::size_t index,
                                      std::span<const std::size_t> block) const {
  if (index >= dims_.size()) throw DimensionError("SubsystemDims: index out of range");
  auto d = dims_;
  const auto at = d.erase(d.begin() + static_cast<std::ptrdiff_t>(index));
  d.insert(at, block.begin(), block.end());
  return SubsystemDims(std::move(d));
}

void SubsystemDims::require_consistent(const ComplexMatrix& m, std::size_t index) const {
  if (total() != m.dim())
    throw DimensionError("subsystem dims multiply to " + std::to_string(total()) +
                         " but matrix has dim " + std::to_string(m.dim()));
  if (index >= dims_.size())
    throw DimensionError("subsystem index " + std::to_string(index) + " out of range for " +
                         std::to_string(dims_.size()) + " subsystems");
}

}  // namespace disentangle
