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

#include <arm_neon.h>

#include <cmath>

#include "variants.hpp"

namespace cohwit::kernels::detail {

double real_dot_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + k), vld1q_f64(y + k));
    acc1 = vfmaq_f64(acc1, vld1q_f64(x + k + 2), vld1q_f64(y + k + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; k < n; ++k) acc += x[k] * y[k];
  return acc;
}

std::complex<double> complex_dot_neon(const std::complex<double>* a,
                                      const std::complex<double>* b,
                                      std::size_t n) {
  const auto* pa = reinterpret_cast<const double*>(a);
  const auto* pb = reinterpret_cast<const double*>(b);
  float64x2_t direct = vdupq_n_f64(0.0);
  float64x2_t crossed = vdupq_n_f64(0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const float64x2_t va = vld1q_f64(pa + 2 * k);
    const float64x2_t vb = vld1q_f64(pb + 2 * k);
    direct = vfmaq_f64(direct, va, vb);
    crossed = vfmaq_f64(crossed, va, vextq_f64(vb, vb, 1));
  }
  return {vgetq_lane_f64(direct, 0) - vgetq_lane_f64(direct, 1), vaddvq_f64(crossed)};
}

double abs_sum_neon(const std::complex<double>* a, std::size_t n) {
  const auto* pa = reinterpret_cast<const double*>(a);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t v0 = vld1q_f64(pa + 2 * k);
    const float64x2_t v1 = vld1q_f64(pa + 2 * k + 2);
    const float64x2_t sq = vpaddq_f64(vmulq_f64(v0, v0), vmulq_f64(v1, v1));
    acc = vaddq_f64(acc, vsqrtq_f64(sq));
  }
  double total = vaddvq_f64(acc);
  for (; k < n; ++k) total += std::abs(a[k]);
  return total;
}

}  // namespace cohwit::kernels::detail
