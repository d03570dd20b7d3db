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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cohwit {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Holds witnesses, states and
/// generators before any semantic validation.
///
/// Invariants: dim >= 2; entries finite at construction from raw data.
/// Element access through operator() is unchecked.
class ComplexMatrix {
 public:
  /// Zero matrix. Throws InvalidDimension if dim < 2.
  explicit ComplexMatrix(std::size_t dim);

  /// Throws InvalidDimension, LengthMismatch (entries.size() != dim*dim) or
  /// NonFinite.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> diag);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept {
    return data_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<const Complex> row(std::size_t r) const noexcept {
    return std::span<const Complex>(data_).subspan(r * dim_, dim_);
  }

  /// Entries viewed as 2*dim*dim interleaved doubles (re, im, re, im, ...).
  std::span<const double> as_reals() const noexcept;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const noexcept;
  bool all_finite() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

  /// Ordinary matrix product.
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

struct Tolerance {
  double hermiticity = 1e-10;
  /// Eigenvalues >= -psd_floor are accepted as nonnegative.
  double psd_floor = 1e-9;
  double trace_dev = 1e-9;
  double detect_eps = 1e-9;

  /// Throws Parse if any field is negative or NaN.
  void validate() const;
};

inline constexpr Tolerance kDefaultTolerance{};

/// max_{i,j} |A_ij - conj(A_ji)| <= tol
bool is_hermitian(const ComplexMatrix& a, double tol) noexcept;

/// Tr(AB) without forming the product. Throws DimensionMismatch.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Re Tr(AB) for Hermitian A, B. Uses Tr(AB) = sum_ij A_ij conj(B_ij), which
/// for Hermitian arguments is a real dot product over the interleaved
/// storage. Callers guarantee Hermiticity. Throws DimensionMismatch.
double hermitian_trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Smallest eigenvalue of the Hermitian part (A + A^dagger)/2.
/// Throws NotHermitian if A fails is_hermitian at tol.hermiticity.
double min_eigenvalue(const ComplexMatrix& a, const Tolerance& tol = kDefaultTolerance);

/// Ascending eigenvalues of the Hermitian part. Same precondition as above.
std::vector<double> eigenvalues(const ComplexMatrix& a, const Tolerance& tol = kDefaultTolerance);

}  // namespace cohwit
