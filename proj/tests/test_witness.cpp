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

#include "cohwit/error.hpp"
#include "cohwit/generators.hpp"
#include "cohwit/witness.hpp"
#include "oracles.hpp"

using namespace cohwit;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Parse;
}

const DensityMatrix kPlus(ComplexMatrix(2, {0.5, 0.5, 0.5, 0.5}));

}  // namespace

TEST_CASE("from_matrix derives the interval from the diagonal") {
  const Witness s1 = Witness::from_matrix(ComplexMatrix(2, {0, 1, 1, 0}));
  CHECK(s1.lo() == 0.0);
  CHECK(s1.hi() == 0.0);
  const Witness l2 = Witness::from_matrix(ComplexMatrix(2, {1, 1.5, 1.5, 0}));
  CHECK(l2.lo() == 0.0);
  CHECK(l2.hi() == 1.0);
  const Witness neg = Witness::from_matrix(ComplexMatrix::diagonal(std::vector<double>{3, -2, 5}));
  CHECK(neg.lo() == -2.0);
  CHECK(neg.hi() == 5.0);
  CHECK(kind_of([] {
          Witness::from_matrix(ComplexMatrix(2, {0, Complex(0, 1), Complex(0, 1), 0}));
        }) == ErrorKind::NotHermitian);
}

TEST_CASE("evaluate examples") {
  for (std::size_t d = 2; d <= 6; ++d) {
    const DetectionReport r = evaluate(lemma2_witness(d, -0.5, 2.0), canonical_coherent(d));
    CHECK(std::abs(r.value - 3.0) < 1e-12);
    CHECK(r.verdict == Verdict::Detected);
  }
  const Witness half_s1 = Witness::from_matrix(ComplexMatrix(2, {0, 0.5, 0.5, 0}));
  const DetectionReport r = evaluate(half_s1, kPlus);
  CHECK(r.value == 0.5);
  CHECK(r.lo == 0.0);
  CHECK(r.hi == 0.0);
  CHECK(r.margin == 0.5);
  CHECK(r.verdict == Verdict::Detected);
  CHECK(kind_of([&] { evaluate(half_s1, canonical_coherent(3)); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("verdict boundary is strict with tolerance") {
  const Witness w = Witness::from_matrix(ComplexMatrix(2, {0, 0.5, 0.5, 0}), 0.1);
  // value = Re(rho_01): 0.1 is on the boundary, 0.1 + 1e-6 is outside.
  const DensityMatrix edge(ComplexMatrix(2, {0.5, 0.1, 0.1, 0.5}));
  const DensityMatrix out(ComplexMatrix(2, {0.5, 0.1 + 1e-6, 0.1 + 1e-6, 0.5}));
  CHECK(evaluate(w, edge).verdict == Verdict::NotDetected);
  CHECK(evaluate(w, out).verdict == Verdict::Detected);
}

TEST_CASE("lemma2_witness") {
  CHECK(lemma2_witness(2, 0, 1).matrix() == ComplexMatrix(2, {1, 1.5, 1.5, 0}));
  const Witness w3 = lemma2_witness(3, 0, 2);
  CHECK(w3.matrix() == ComplexMatrix(3, {2, 2.5, 0, 2.5, 0, 0, 0, 0, 2}));
  const Complex t = oracle::trace_via_product(w3.matrix(), canonical_coherent(3).matrix());
  CHECK(std::abs(t - 3.0) < 1e-15);
  CHECK(evaluate(w3, canonical_coherent(3)).value == doctest::Approx(3.0).epsilon(1e-15));
  for (double m : {-2.0, 0.0, 1.75}) {
    CHECK(std::abs(evaluate(lemma2_witness(4, m, m), canonical_coherent(4)).value - (m + 1)) <
          1e-12);
  }
  CHECK(kind_of([] { lemma2_witness(3, 2, 1); }) == ErrorKind::InvalidInterval);
}

TEST_CASE("tailored_witness examples") {
  const Witness w = tailored_witness(kPlus, 0, 1);
  CHECK(w.lo() == 0.0);
  CHECK(w.hi() == 1.0);
  const DetectionReport r = evaluate(w, kPlus);
  CHECK(std::abs(r.value - 2.0) < 1e-12);
  CHECK(r.verdict == Verdict::Detected);

  const Witness flat = tailored_witness(kPlus, 0, 0);
  CHECK(flat.matrix() == real_part_probe(2, 0, 1));
  CHECK(evaluate(flat, kPlus).value == 0.5);

  const DensityMatrix imag(ComplexMatrix(2, {0.5, Complex(0, 0.3), Complex(0, -0.3), 0.5}));
  const Witness wi = tailored_witness(imag, 0, 0);
  CHECK(wi.matrix() == imag_part_probe(2, 0, 1));
  CHECK(std::abs(evaluate(wi, imag).value - 0.3) < 1e-15);

  const Witness shifted = tailored_witness(imag, 2.5, 2.5);
  CHECK(std::abs(evaluate(shifted, imag).value - 2.8) < 1e-15);
  CHECK(shifted.lo() == 2.5);

  CHECK(kind_of([] { tailored_witness(canonical_coherent(2), 1, 0); }) ==
        ErrorKind::InvalidInterval);
  const DensityMatrix diag(ComplexMatrix(3, {0.2, 0, 0, 0, 0.3, 0, 0, 0, 0.5}));
  CHECK(kind_of([&] { tailored_witness(diag, 0, 1); }) == ErrorKind::NotCoherent);
}

TEST_CASE("tailored_witness keeps the base witness when it already reaches M + 1") {
  // lemma2 on canonical_coherent gives M + 1 exactly, so eps = 0.
  const Witness w = tailored_witness(canonical_coherent(3), -1, 4);
  CHECK(w == lemma2_witness(3, -1, 4));
}

TEST_CASE("select_offdiagonal picks the largest entry, lowest index on ties") {
  ComplexMatrix m(3, {0.4, 0.1, Complex(0, 0.1), 0.1, 0.3, 0, Complex(0, -0.1), 0, 0.3});
  const OffDiagonalChoice c = select_offdiagonal(DensityMatrix(m));
  CHECK(c.k == 0);
  CHECK(c.l == 1);
  CHECK(c.use_real);
  ComplexMatrix n(3, {0.4, 0.05, Complex(0.01, 0.1), 0.05, 0.3, 0, Complex(0.01, -0.1), 0, 0.3});
  const OffDiagonalChoice c2 = select_offdiagonal(DensityMatrix(n));
  CHECK(c2.l == 2);
  CHECK_FALSE(c2.use_real);
  CHECK(c2.component() == 0.1);
}

TEST_CASE("tailored witness is exact over random coherent states") {
  std::mt19937_64 eng(2024);
  std::uniform_real_distribution<double> u(-10, 10);
  for (std::size_t d = 2; d <= 5; ++d) {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const DensityMatrix rho = sample_ginibre(d, Seed{s + 17});
      double m = u(eng), big_m = u(eng);
      if (m > big_m) std::swap(m, big_m);
      const Witness w = tailored_witness(rho, m, big_m);
      CHECK(w.lo() == m);
      CHECK(w.hi() == big_m);
      const DetectionReport r = evaluate(w, rho);
      CHECK(std::abs(r.value - (big_m + 1)) <= 1e-9);
      CHECK(r.verdict == Verdict::Detected);
    }
  }
}

TEST_CASE("qubit_witness") {
  const Witness w = qubit_witness(0, 1, 1, 1);
  CHECK(w.lo() == -0.5);
  CHECK(w.hi() == 0.5);
  const DetectionReport in = evaluate(w, qubit_state(0.6, 0.6, 0.3));
  CHECK(std::abs(in.value - 0.75) < 1e-15);
  CHECK(in.verdict == Verdict::Detected);
  const DetectionReport edge = evaluate(w, qubit_state(1, 0, 0));
  CHECK(edge.value == 0.5);
  CHECK(edge.verdict == Verdict::NotDetected);
  for (double x : {-0.7, 0.0, 0.4}) {
    CHECK(evaluate(qubit_witness(3, 0, 0, 1), qubit_state(x, 0.5, 0.2)).verdict ==
          Verdict::NotDetected);
  }
  CHECK(kind_of([] { qubit_witness(1, 0, 0, 0); }) == ErrorKind::ZeroOperator);
}

TEST_CASE("qubit witness value is (K + ax + by + cz)/2") {
  std::mt19937_64 eng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int n = 0; n < 200; ++n) {
    const double k = 4 * u(eng), a = u(eng), b = u(eng), c = u(eng);
    double x = u(eng), y = u(eng), z = u(eng);
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r > 1) x /= r, y /= r, z /= r;
    const double v = evaluate(qubit_witness(k, a, b, c), qubit_state(x, y, z)).value;
    CHECK(std::abs(v - 0.5 * (k + a * x + b * y + c * z)) < 1e-14);
  }
}

TEST_CASE("is_effective_qubit") {
  CHECK(is_effective_qubit(1, 0, 0));
  CHECK_FALSE(is_effective_qubit(0, 0, 5));
  const QubitEffectiveness e = classify_qubit(1e-12, 0, 1);
  CHECK(e.effective);
  CHECK(e.numerically_marginal);
  CHECK_FALSE(classify_qubit(1e-3, 0, 1).numerically_marginal);
  CHECK(kind_of([] { classify_qubit(0, 0, 0); }) == ErrorKind::ZeroOperator);
}

TEST_CASE("qubit_pair_family") {
  const WitnessFamily fam = qubit_pair_family(0.7, 1, 1, 1, -1);
  REQUIRE(fam.size() == 2);
  CHECK(fam.members()[0] == qubit_witness(0.7, 1, 1, 0));
  CHECK(fam.members()[1] == qubit_witness(0.7, 1, -1, 0));
  // Planes x + y = 0 and x - y = 0: each member is blind on its own plane.
  const DensityMatrix on_first = qubit_state(0.3, -0.3, 0.1);
  CHECK(fam.verdicts(on_first) == std::vector<Verdict>{Verdict::NotDetected, Verdict::Detected});
  CHECK_FALSE(fam.detects(qubit_state(0, 0, 0.9)));

  CHECK(kind_of([] { qubit_pair_family(0, 1, 1, 2, 2); }) == ErrorKind::DegenerateFamily);
  CHECK(kind_of([] { qubit_pair_family(0, 0, 0, 1, 1); }) == ErrorKind::DegenerateFamily);
}

TEST_CASE("w_eta") {
  const Witness w = w_eta(2, 0, std::vector<double>{0, 1, 0});
  CHECK(w.matrix() == ComplexMatrix(2, {0, 0.5, 0.5, 0}));
  CHECK(w.lo() == 0.0);
  CHECK(w.hi() == 0.0);

  const Witness tilted = w_eta(2, 1, std::vector<double>{0.6, 0, 0});
  CHECK(std::abs(tilted.hi() - 0.8) < 1e-15);
  CHECK(std::abs(tilted.lo() - 0.2) < 1e-15);

  CHECK(kind_of([] { w_eta(3, 0, std::vector<double>{1, 2}); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("w_eta value is K/d + (2/d^2) r.eta") {
  std::mt19937_64 eng(99);
  std::normal_distribution<double> g;
  for (std::size_t d = 2; d <= 6; ++d) {
    for (std::uint64_t s = 0; s < 30; ++s) {
      std::vector<double> eta(d * d - 1);
      for (auto& e : eta) e = g(eng);
      const double k = 3 * g(eng);
      const DensityMatrix rho = sample_ginibre(d, Seed{s});
      const BlochVector r = bloch_vector(rho);
      double dot = 0.0;
      for (std::size_t i = 0; i < eta.size(); ++i) dot += r.components[i] * eta[i];
      const double dd = static_cast<double>(d);
      CHECK(std::abs(evaluate(w_eta(d, k, eta), rho).value - (k / dd + 2.0 * dot / (dd * dd))) <
            1e-12);
    }
  }
}

TEST_CASE("w_eta with no diagonal coefficients has a collapsed interval and shifts with K") {
  for (std::size_t d = 2; d <= 5; ++d) {
    std::vector<double> eta(d * d - 1, 0.0);
    for (std::size_t i = d - 1; i < eta.size(); ++i) eta[i] = 0.3 * static_cast<double>(i) - 1;
    const DensityMatrix rho = sample_ginibre(d, Seed{d});
    const DetectionReport base = evaluate(w_eta(d, 0, eta), rho);
    for (double k : {1.0, -4.0, 37.0}) {
      const Witness w = w_eta(d, k, eta);
      CHECK(w.lo() == k / d);
      CHECK(w.hi() == k / d);
      CHECK(std::abs(evaluate(w, rho).margin - base.margin) <= 1e-12);
    }
  }
}

TEST_CASE("theorem2_witness") {
  const Witness w = theorem2_witness(kPlus, 0);
  CHECK(w.matrix() == ComplexMatrix(2, {0, 0.5, 0.5, 0}));
  const DetectionReport r = evaluate(w, kPlus);
  CHECK(r.value == 0.5);
  CHECK(r.verdict == Verdict::Detected);

  const DensityMatrix c3 = canonical_coherent(3);
  std::vector<double> eta(8, 0.0);
  eta[symmetric_index(3, 0, 1) - 1] = 1.0;
  CHECK(theorem2_witness(c3, 3) == w_eta(3, 3, eta));
  CHECK(std::abs(evaluate(theorem2_witness(c3, 3), c3).value - (1.0 + 2.0 / 9.0)) < 1e-15);

  CHECK(kind_of([] {
          theorem2_witness(DensityMatrix(Complex(0.25) * ComplexMatrix::identity(4)), 0);
        }) == ErrorKind::NotCoherent);
}

TEST_CASE("theorem2 witness detects random coherent states") {
  for (std::size_t d = 2; d <= 6; ++d) {
    for (std::uint64_t s = 0; s < 100; ++s) {
      const DensityMatrix rho = sample_ginibre(d, Seed{s + 500});
      CHECK(evaluate(theorem2_witness(rho, 1.0), rho).verdict == Verdict::Detected);
    }
  }
}

TEST_CASE("finite_family") {
  const WitnessFamily q = finite_family(2, 0, std::vector<double>{1, 1});
  REQUIRE(q.size() == 2);
  CHECK(q.members()[0].matrix() == ComplexMatrix(2, {0, 0.5, 0.5, 0}));
  CHECK(q.members()[1].matrix() == ComplexMatrix(2, {0, Complex(0, -0.5), Complex(0, 0.5), 0}));
  CHECK(finite_family(3, 1).size() == 6);
  const WitnessFamily f4 = finite_family(4, 2);
  CHECK(f4.size() == 12);
  for (const Witness& w : f4.members()) {
    for (std::size_t i = 0; i < 4; ++i) CHECK(w.matrix()(i, i) == Complex(0.5));
  }
  CHECK(kind_of([] { finite_family(2, 0, std::vector<double>{1, 0}); }) ==
        ErrorKind::ZeroCoefficient);
  CHECK(kind_of([] { finite_family(3, 0, std::vector<double>{1, 1}); }) ==
        ErrorKind::LengthMismatch);
}

TEST_CASE("finite family never fires on incoherent states") {
  for (std::size_t d = 2; d <= 5; ++d) {
    const WitnessFamily fam = finite_family(d, 0.5);
    for (std::uint64_t s = 0; s < 100; ++s) {
      CHECK_FALSE(fam.detects(sample_incoherent(d, Seed{s}).to_density()));
    }
  }
}

TEST_CASE("every constructed witness keeps incoherent values inside its interval") {
  std::vector<Witness> ws{lemma2_witness(3, -1, 2),
                          tailored_witness(sample_ginibre(3, Seed{1}), 0, 5),
                          tailored_witness(sample_ginibre(3, Seed{2}), 1, 1),
                          w_eta(3, 2, std::vector<double>{1, -2, 0, 0, 3, 0, 0, 0.5})};
  const WitnessFamily fam = finite_family(3, 1);
  for (const auto& w : fam.members()) ws.push_back(w);
  for (const Witness& w : ws) {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const double v = evaluate(w, sample_incoherent(3, Seed{s}).to_density()).value;
      CHECK(v >= w.lo() - 1e-12);
      CHECK(v <= w.hi() + 1e-12);
    }
  }
}

TEST_CASE("WitnessFamily invariants") {
  CHECK(kind_of([] { WitnessFamily("empty", {}); }) == ErrorKind::LengthMismatch);
  WitnessFamily fam("mixed", {lemma2_witness(2, 0, 1)});
  CHECK(kind_of([&] { fam.add(lemma2_witness(3, 0, 1)); }) == ErrorKind::DimensionMismatch);
}
