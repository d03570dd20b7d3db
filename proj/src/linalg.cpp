// Copyright 2026 The cohwit Authors
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

#include "cohwit/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

#include "cohwit/error.hpp"
#include "cohwit/kernels.hpp"

namespace cohwit {

namespace {

void require_dim(std::size_t dim) {
  if (dim < 2) {
    throw Error(ErrorKind::InvalidDimension,
                "matrix dimension must be >= 2, got " + std::to_string(dim));
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "dimension mismatch: " + std::to_string(a.dim()) +
                                                  " vs " + std::to_string(b.dim()));
  }
}

bool finite(const Complex& z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) {
  require_dim(dim);
  data_.assign(dim * dim, Complex{});
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  require_dim(dim);
  if (data_.size() != dim * dim) {
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(dim * dim) +
                                               " entries, got " + std::to_string(data_.size()));
  }
  if (!all_finite()) throw Error(ErrorKind::NonFinite, "matrix has a non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

std::span<const double> ComplexMatrix::as_reals() const noexcept {
  // std::complex<double> is layout-compatible with double[2].
  return {reinterpret_cast<const double*>(data_.data()), 2 * data_.size()};
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), finite);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) noexcept {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const std::size_t d = a.dim();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

void Tolerance::validate() const {
  for (double v : {hermiticity, psd_floor, trace_dev, detect_eps}) {
    if (!(v >= 0.0)) throw Error(ErrorKind::Parse, "tolerances must be nonnegative");
  }
}

bool is_hermitian(const ComplexMatrix& a, double tol) noexcept {
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      if (!(std::abs(a(i, j) - std::conj(a(j, i))) <= tol)) return false;
  return true;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  // Tr(AB) = sum_i sum_j A_ij B_ji = <vec(A), vec(B^T)> without conjugation.
  const ComplexMatrix bt = b.transpose();
  return kernels::complex_dot(a.entries(), bt.entries());
}

double hermitian_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  return kernels::real_dot(a.as_reals(), b.as_reals());
}

namespace {

Eigen::MatrixXcd hermitian_part(const ComplexMatrix& a, const Tolerance& tol) {
  if (!is_hermitian(a, tol.hermiticity)) {
    throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian within " +
                                             std::to_string(tol.hermiticity));
  }
  const auto d = static_cast<Eigen::Index>(a.dim());
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      m(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return m;
}

}  // namespace

std::vector<double> eigenvalues(const ComplexMatrix& a, const Tolerance& tol) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_part(a, tol),
                                                                Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double min_eigenvalue(const ComplexMatrix& a, const Tolerance& tol) {
  return eigenvalues(a, tol).front();
}

}  // namespace cohwit
