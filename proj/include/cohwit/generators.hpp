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

// SU(d) generator basis and Bloch-vector maps.
//
// Index conventions (the only place they are defined):
//   * basis kets are 0-indexed |0> .. |d-1>;
//   * generator indices are 1-indexed, i = 1 .. d^2-1, in three blocks:
//       1 .. d-1                  omega_l, l = i-1 (diagonal)
//       d .. (d-1)(d+2)/2         u_jk = |j><k| + |k><j|
//       d(d+1)/2 .. d^2-1         v_jk = -i(|j><k| - |k><j|)
//     with (j, k), 0 <= j < k <= d-1, enumerated lexicographically inside
//     each off-diagonal block;
//   * omega_l = sqrt(2/((l+1)(l+2))) (sum_{i<=l} |i><i| - (l+1)|l+1><l+1|).
// With this normalization Tr(lambda_i lambda_j) = 2 delta_ij.

#include <cstddef>
#include <vector>

#include "cohwit/linalg.hpp"
#include "cohwit/states.hpp"

namespace cohwit {

enum class GeneratorKind { Diagonal, Symmetric, Antisymmetric };

struct GeneratorLabel {
  GeneratorKind kind;
  std::size_t l = 0;  // Diagonal only
  std::size_t j = 0;  // off-diagonal pair, j < k
  std::size_t k = 0;
};

constexpr std::size_t generator_count(std::size_t d) noexcept { return d * d - 1; }
constexpr std::size_t pair_count(std::size_t d) noexcept { return d * (d - 1) / 2; }

/// 1-based index of the first off-diagonal (u-block) generator.
constexpr std::size_t first_offdiag_index(std::size_t d) noexcept { return d; }

/// Throws InvalidDimension or IndexOutOfRange.
GeneratorLabel generator_label(std::size_t d, std::size_t index);
std::size_t symmetric_index(std::size_t d, std::size_t j, std::size_t k);
std::size_t antisymmetric_index(std::size_t d, std::size_t j, std::size_t k);

/// Throws InvalidDimension or IndexOutOfRange.
ComplexMatrix generator(std::size_t d, std::size_t index);

/// All d^2-1 generators. Immutable; get() memoizes per dimension.
class GeneratorBasis {
 public:
  explicit GeneratorBasis(std::size_t d);

  /// Shared instance for d; safe to call concurrently.
  static const GeneratorBasis& get(std::size_t d);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return matrices_.size(); }
  /// 1-based, unchecked.
  const ComplexMatrix& operator[](std::size_t index) const noexcept {
    return matrices_[index - 1];
  }

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> matrices_;
};

/// r_i = (d/2) Tr(rho lambda_i), stored 0-based: components[i-1] = r_i.
struct BlochVector {
  std::size_t dim = 0;
  std::vector<double> components;

  double at(std::size_t index) const { return components.at(index - 1); }
  double norm() const noexcept;
};

/// Upper bound on ||r||_2 for a valid state of dimension d: sqrt(d(d-1)/2).
double bloch_norm_bound(std::size_t d) noexcept;

BlochVector bloch_vector(const DensityMatrix& rho);

/// (1/d)(I + sum_i r_i lambda_i). Hermitian and unit trace but not
/// necessarily PSD for d >= 3; wrap in DensityMatrix to validate.
/// Throws LengthMismatch.
ComplexMatrix state_from_bloch(std::size_t d, const BlochVector& r);

inline constexpr double kSupportThreshold = 1e-9;

/// Ascending 1-based indices i >= d with |r_i| > threshold. Empty exactly
/// when rho is diagonal up to the threshold: off-diagonal entries only load
/// the u/v block.
std::vector<std::size_t> offdiag_support(const DensityMatrix& rho,
                                         double threshold = kSupportThreshold);

}  // namespace cohwit
