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

namespace cohwit::kernels {

namespace detail {
double real_dot_scalar(const double* x, const double* y, std::size_t n);
std::complex<double> complex_dot_scalar(const std::complex<double>* a,
                                        const std::complex<double>* b,
                                        std::size_t n);
double abs_sum_scalar(const std::complex<double>* a, std::size_t n);

#if defined(COHWIT_HAVE_AVX2_TU)
double real_dot_avx2(const double* x, const double* y, std::size_t n);
std::complex<double> complex_dot_avx2(const std::complex<double>* a,
                                      const std::complex<double>* b,
                                      std::size_t n);
double abs_sum_avx2(const std::complex<double>* a, std::size_t n);
#endif

#if defined(COHWIT_HAVE_NEON_TU)
double real_dot_neon(const double* x, const double* y, std::size_t n);
std::complex<double> complex_dot_neon(const std::complex<double>* a,
                                      const std::complex<double>* b,
                                      std::size_t n);
double abs_sum_neon(const std::complex<double>* a, std::size_t n);
#endif
}  // namespace detail

}  // namespace cohwit::kernels
