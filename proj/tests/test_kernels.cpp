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

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "cohwit/kernels.hpp"

using namespace cohwit;
namespace k = cohwit::kernels;

namespace {

struct Inputs {
  std::vector<double> x, y;
  std::vector<std::complex<double>> a, b;
};

Inputs make_inputs(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> g;
  Inputs in;
  for (std::size_t i = 0; i < n; ++i) {
    in.x.push_back(g(eng));
    in.y.push_back(g(eng));
    in.a.emplace_back(g(eng), g(eng));
    in.b.emplace_back(g(eng), g(eng));
  }
  return in;
}

// Error bound for a length-n sum of products with magnitudes ~|terms|.
double bound(std::size_t n, double magnitude) {
  return 4.0 * static_cast<double>(n + 1) * 1.2e-16 * magnitude;
}

}  // namespace

TEST_CASE("scalar kernels match textbook sums") {
  const std::vector<double> x{1, 2, 3};
  const std::vector<double> y{4, -5, 6};
  CHECK(k::scalar_table().real_dot(x.data(), y.data(), 3) == 12.0);

  const std::vector<std::complex<double>> a{{1, 2}, {0, -1}};
  const std::vector<std::complex<double>> b{{3, -1}, {2, 2}};
  // (1+2i)(3-i) + (-i)(2+2i) = (5+5i) + (2-2i)
  CHECK(k::scalar_table().complex_dot(a.data(), b.data(), 2) == std::complex<double>(7, 3));

  const std::vector<std::complex<double>> c{{3, 4}, {0, -2}, {-1, 0}};
  CHECK(k::scalar_table().abs_sum(c.data(), 3) == 8.0);
  CHECK(k::scalar_table().abs_sum(c.data(), 0) == 0.0);
}

TEST_CASE("every available SIMD variant agrees with the scalar reference") {
  const auto& ref = k::scalar_table();
  for (k::Isa isa : k::available()) {
    const k::KernelTable* t = k::table_for(isa);
    REQUIRE(t != nullptr);
    CAPTURE(k::to_string(isa));
    // Lengths cover empty input, every tail remainder, and d^2 sizes up to d = 64.
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 25u, 49u, 81u,
                          100u, 1023u, 4096u}) {
      const Inputs in = make_inputs(n, 1000 + n);
      double mag_r = 0.0, mag_c = 0.0, mag_a = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        mag_r += std::abs(in.x[i] * in.y[i]);
        mag_c += std::abs(in.a[i]) * std::abs(in.b[i]);
        mag_a += std::abs(in.a[i]);
      }
      CHECK(std::abs(t->real_dot(in.x.data(), in.y.data(), n) -
                     ref.real_dot(in.x.data(), in.y.data(), n)) <= bound(n, mag_r));
      CHECK(std::abs(t->complex_dot(in.a.data(), in.b.data(), n) -
                     ref.complex_dot(in.a.data(), in.b.data(), n)) <= 2 * bound(n, mag_c));
      CHECK(std::abs(t->abs_sum(in.a.data(), n) - ref.abs_sum(in.a.data(), n)) <=
            bound(n, mag_a));
    }
  }
}

TEST_CASE("select pins the active table and rejects unavailable ISAs") {
  const k::Isa original = k::active().isa;
  CHECK(k::available().front() == k::Isa::Scalar);
  CHECK(k::select(k::Isa::Scalar));
  CHECK(k::active().isa == k::Isa::Scalar);
  for (k::Isa isa : {k::Isa::Avx2, k::Isa::Neon}) {
    if (k::table_for(isa) == nullptr) {
      CHECK_FALSE(k::select(isa));
      CHECK(k::active().isa == k::Isa::Scalar);
    }
  }
  CHECK(k::select(original));
}
