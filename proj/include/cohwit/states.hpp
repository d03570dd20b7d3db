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

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "cohwit/linalg.hpp"

namespace cohwit {

class Witness;

/// Validated quantum state: Hermitian, unit trace, positive semidefinite
/// within the given tolerances. The stored matrix is kept exactly as given.
class DensityMatrix {
 public:
  /// Throws NotHermitian, NotUnitTrace or NotPositive.
  explicit DensityMatrix(ComplexMatrix m, const Tolerance& tol = kDefaultTolerance);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  ComplexMatrix matrix_;
};

/// Diagonal state sum_i p_i |i><i|.
class IncoherentState {
 public:
  /// Throws InvalidDimension (fewer than 2 entries) or InvalidProbabilities
  /// (negative/non-finite entry, or sum off by more than 1e-12).
  explicit IncoherentState(std::vector<double> probs);

  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t dim() const noexcept { return probs_.size(); }
  DensityMatrix to_density() const;

  friend bool operator==(const IncoherentState&, const IncoherentState&) = default;

 private:
  std::vector<double> probs_;
};

struct Seed {
  std::uint64_t value = 0;

  /// Independent stream for the index-th member of an ensemble, via the
  /// SplitMix64 finalizer applied to value + (index + 1) * golden gamma.
  Seed derive(std::uint64_t index) const noexcept;

  friend bool operator==(Seed, Seed) = default;
};

/// Reproducible random source. Uniforms come from std::mt19937_64 (whose
/// output sequence is fixed by the C++ standard) as the top 53 bits of each
/// draw; normals come from the Box-Muller transform, one uniform pair per
/// complex normal (cosine branch -> real part, sine branch -> imaginary part).
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed.value) {}

  /// [0, 1)
  double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// (0, 1]
  double uniform_open() noexcept {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }
  /// Real and imaginary parts independent N(0, 1).
  Complex complex_normal() noexcept;

 private:
  std::mt19937_64 engine_;
};

/// sum_{i != j} |rho_ij|
double l1_coherence(const DensityMatrix& rho);
double l1_coherence(const ComplexMatrix& m);

/// GG^dagger / Tr(GG^dagger), G with i.i.d. standard complex normal entries
/// drawn row-major from Rng(seed).
DensityMatrix sample_ginibre(std::size_t d, Seed seed);

/// Uniform on the probability simplex: normalized -log(u) draws.
IncoherentState sample_incoherent(std::size_t d, Seed seed);

/// (G + G^dagger)/2 with G as in sample_ginibre, scaled by `scale`.
ComplexMatrix sample_hermitian(std::size_t d, Seed seed, double scale = 1.0);

/// Diagonal 1/d with 1/d in entries (0,1) and (1,0).
DensityMatrix canonical_coherent(std::size_t d);

/// (I + x sigma1 + y sigma2 + z sigma3) / 2. Throws NotPositive outside the
/// Bloch ball (beyond the PSD floor).
DensityMatrix qubit_state(double x, double y, double z);

/// Incoherent state with Tr(W delta_h) = h for h in W's interval [m, M].
/// m == M gives the uniform distribution; otherwise weight (M-h)/(M-m) on the
/// lowest index attaining m and (h-m)/(M-m) on the lowest index attaining M.
/// Throws OutOfInterval.
IncoherentState delta_h(const Witness& w, double h);

}  // namespace cohwit
