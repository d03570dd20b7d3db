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

#include <atomic>

#include "cohwit/kernels.hpp"
#include "variants.hpp"

namespace cohwit::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &detail::real_dot_scalar,
                              &detail::complex_dot_scalar, &detail::abs_sum_scalar};

#if defined(COHWIT_HAVE_AVX2_TU)
constexpr KernelTable kAvx2{Isa::Avx2, &detail::real_dot_avx2,
                            &detail::complex_dot_avx2, &detail::abs_sum_avx2};

bool cpu_has_avx2() noexcept {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

#if defined(COHWIT_HAVE_NEON_TU)
// Advanced SIMD is mandatory on AArch64.
constexpr KernelTable kNeon{Isa::Neon, &detail::real_dot_neon,
                            &detail::complex_dot_neon, &detail::abs_sum_neon};
#endif

const KernelTable* widest() noexcept {
#if defined(COHWIT_HAVE_AVX2_TU)
  if (cpu_has_avx2()) return &kAvx2;
#endif
#if defined(COHWIT_HAVE_NEON_TU)
  return &kNeon;
#endif
  return &kScalar;
}

std::atomic<const KernelTable*>& slot() noexcept {
  static std::atomic<const KernelTable*> current{widest()};
  return current;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* table_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return &kScalar;
    case Isa::Avx2:
#if defined(COHWIT_HAVE_AVX2_TU)
      if (cpu_has_avx2()) return &kAvx2;
#endif
      return nullptr;
    case Isa::Neon:
#if defined(COHWIT_HAVE_NEON_TU)
      return &kNeon;
#endif
      return nullptr;
  }
  return nullptr;
}

std::vector<Isa> available() {
  std::vector<Isa> out{Isa::Scalar};
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (table_for(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

const KernelTable& active() noexcept {
  return *slot().load(std::memory_order_acquire);
}

bool select(Isa isa) noexcept {
  const KernelTable* t = table_for(isa);
  if (t == nullptr) return false;
  slot().store(t, std::memory_order_release);
  return true;
}

}  // namespace cohwit::kernels
