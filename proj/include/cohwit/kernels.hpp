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

// Data-parallel inner loops. Every kernel has a scalar reference version;
// vectorized variants live in their own translation units and are selected
// once at startup from what the running CPU supports.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace cohwit::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  /// sum_k x[k] * y[k]
  double (*real_dot)(const double* x, const double* y, std::size_t n);
  /// sum_k a[k] * b[k], no conjugation
  std::complex<double> (*complex_dot)(const std::complex<double>* a,
                                      const std::complex<double>* b,
                                      std::size_t n);
  /// sum_k |a[k]|
  double (*abs_sum)(const std::complex<double>* a, std::size_t n);
};

const KernelTable& scalar_table() noexcept;

/// Variants compiled into this build and runnable on this CPU; always
/// contains Isa::Scalar first.
std::vector<Isa> available();

/// nullptr when the variant is not compiled in or the CPU lacks support.
const KernelTable* table_for(Isa isa) noexcept;

/// The table used by the library. Defaults to the widest available ISA.
const KernelTable& active() noexcept;

/// Pin the active table (tests, benchmarking). Returns false and leaves the
/// selection unchanged if the ISA is unavailable. Not thread-safe with
/// respect to concurrent kernel calls.
bool select(Isa isa) noexcept;

inline double real_dot(std::span<const double> x, std::span<const double> y) {
  return active().real_dot(x.data(), y.data(), x.size());
}

inline std::complex<double> complex_dot(std::span<const std::complex<double>> a,
                                        std::span<const std::complex<double>> b) {
  return active().complex_dot(a.data(), b.data(), a.size());
}

inline double abs_sum(std::span<const std::complex<double>> a) {
  return active().abs_sum(a.data(), a.size());
}

}  // namespace cohwit::kernels
