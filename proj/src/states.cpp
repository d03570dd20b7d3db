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

#include "cohwit/states.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "cohwit/error.hpp"
#include "cohwit/kernels.hpp"
#include "cohwit/witness.hpp"

namespace cohwit {

DensityMatrix::DensityMatrix(ComplexMatrix m, const Tolerance& tol) : matrix_(std::move(m)) {
  if (!is_hermitian(matrix_, tol.hermiticity)) {
    throw Error(ErrorKind::NotHermitian, "state is not Hermitian");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr.real() - 1.0) > tol.trace_dev || std::abs(tr.imag()) > tol.trace_dev) {
    std::ostringstream msg;
    msg << "state trace " << tr.real() << " deviates from 1";
    throw Error(ErrorKind::NotUnitTrace, msg.str());
  }
  const double lo = min_eigenvalue(matrix_, tol);
  if (lo < -tol.psd_floor) {
    std::ostringstream msg;
    msg << "state has negative eigenvalue " << lo;
    throw Error(ErrorKind::NotPositive, msg.str());
  }
}

IncoherentState::IncoherentState(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 2");
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw Error(ErrorKind::InvalidProbabilities, "probabilities must be finite and >= 0");
    }
  }
  const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidProbabilities, "probabilities do not sum to 1");
  }
}

DensityMatrix IncoherentState::to_density() const {
  return DensityMatrix(ComplexMatrix::diagonal(probs_));
}

Seed Seed::derive(std::uint64_t index) const noexcept {
  std::uint64_t z = value + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return Seed{z ^ (z >> 31)};
}

Complex Rng::complex_normal() noexcept {
  const double u1 = uniform_open();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

double l1_coherence(const ComplexMatrix& m) {
  const std::size_t d = m.dim();
  double total = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const auto row = m.row(i);
    total += kernels::abs_sum(row.first(i)) + kernels::abs_sum(row.subspan(i + 1));
  }
  return total;
}

double l1_coherence(const DensityMatrix& rho) { return l1_coherence(rho.matrix()); }

namespace {

void require_dim(std::size_t d) {
  if (d < 2) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 2");
}

ComplexMatrix ginibre_matrix(std::size_t d, Seed seed) {
  Rng rng(seed);
  ComplexMatrix g(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  return g;
}

}  // namespace

DensityMatrix sample_ginibre(std::size_t d, Seed seed) {
  require_dim(d);
  const ComplexMatrix g = ginibre_matrix(d, seed);
  ComplexMatrix rho(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < d; ++k) s += g(i, k) * std::conj(g(j, k));
      rho(i, j) = s;
      rho(j, i) = std::conj(s);
    }
  // Exact Hermiticity on the diagonal.
  double tr = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    rho(i, i) = rho(i, i).real();
    tr += rho(i, i).real();
  }
  rho *= 1.0 / tr;
  return DensityMatrix(std::move(rho));
}

IncoherentState sample_incoherent(std::size_t d, Seed seed) {
  require_dim(d);
  Rng rng(seed);
  std::vector<double> p(d);
  double total = 0.0;
  for (auto& x : p) {
    x = -std::log(rng.uniform_open());
    total += x;
  }
  if (total == 0.0) {
    // Every draw was exactly 1.0; vanishingly unlikely, fall back to uniform.
    p.assign(d, 1.0 / static_cast<double>(d));
    return IncoherentState(std::move(p));
  }
  for (auto& x : p) x /= total;
  return IncoherentState(std::move(p));
}

ComplexMatrix sample_hermitian(std::size_t d, Seed seed, double scale) {
  require_dim(d);
  const ComplexMatrix g = ginibre_matrix(d, seed);
  ComplexMatrix h(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const Complex s = 0.5 * scale * (g(i, j) + std::conj(g(j, i)));
      h(i, j) = s;
      h(j, i) = std::conj(s);
    }
  return h;
}

DensityMatrix canonical_coherent(std::size_t d) {
  require_dim(d);
  const double w = 1.0 / static_cast<double>(d);
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = w;
  m(0, 1) = w;
  m(1, 0) = w;
  return DensityMatrix(std::move(m));
}

DensityMatrix qubit_state(double x, double y, double z) {
  ComplexMatrix m(2);
  m(0, 0) = 0.5 * (1.0 + z);
  m(1, 1) = 0.5 * (1.0 - z);
  m(0, 1) = Complex(0.5 * x, -0.5 * y);
  m(1, 0) = Complex(0.5 * x, 0.5 * y);
  return DensityMatrix(std::move(m));
}

IncoherentState delta_h(const Witness& w, double h) {
  const double m = w.lo();
  const double big_m = w.hi();
  if (!(h >= m && h <= big_m)) {
    std::ostringstream msg;
    msg << "h = " << h << " outside [" << m << ", " << big_m << "]";
    throw Error(ErrorKind::OutOfInterval, msg.str());
  }
  const std::size_t d = w.dim();
  if (m == big_m) return IncoherentState(std::vector<double>(d, 1.0 / static_cast<double>(d)));

  const auto first_with = [&](double target) {
    std::size_t i = 0;
    while (i + 1 < d && w.matrix()(i, i).real() != target) ++i;
    return i;
  };
  const std::size_t at_min = first_with(m);
  const std::size_t at_max = first_with(big_m);
  std::vector<double> p(d, 0.0);
  const double span = big_m - m;
  p[at_min] = (big_m - h) / span;
  p[at_max] += (h - m) / span;
  return IncoherentState(std::move(p));
}

}  // namespace cohwit
