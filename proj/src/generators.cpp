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

#include "cohwit/generators.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "cohwit/error.hpp"

namespace cohwit {

namespace {

void require_dim(std::size_t d) {
  if (d < 2) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 2");
}

// Lexicographic position of (j, k), j < k, among all pairs of a d-level system.
std::size_t pair_position(std::size_t d, std::size_t j, std::size_t k) {
  if (!(j < k && k < d)) {
    throw Error(ErrorKind::IndexOutOfRange, "pair (" + std::to_string(j) + "," +
                                                std::to_string(k) + ") invalid for d=" +
                                                std::to_string(d));
  }
  return j * (2 * d - j - 1) / 2 + (k - j - 1);
}

std::pair<std::size_t, std::size_t> pair_at(std::size_t d, std::size_t position) {
  std::size_t j = 0;
  while (position >= d - j - 1) {
    position -= d - j - 1;
    ++j;
  }
  return {j, j + 1 + position};
}

}  // namespace

GeneratorLabel generator_label(std::size_t d, std::size_t index) {
  require_dim(d);
  if (index < 1 || index > generator_count(d)) {
    throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(index) +
                                                " outside 1.." +
                                                std::to_string(generator_count(d)));
  }
  if (index < d) return {GeneratorKind::Diagonal, index - 1, 0, 0};
  const std::size_t offset = index - d;
  const std::size_t pairs = pair_count(d);
  if (offset < pairs) {
    auto [j, k] = pair_at(d, offset);
    return {GeneratorKind::Symmetric, 0, j, k};
  }
  auto [j, k] = pair_at(d, offset - pairs);
  return {GeneratorKind::Antisymmetric, 0, j, k};
}

std::size_t symmetric_index(std::size_t d, std::size_t j, std::size_t k) {
  return d + pair_position(d, j, k);
}

std::size_t antisymmetric_index(std::size_t d, std::size_t j, std::size_t k) {
  return d + pair_count(d) + pair_position(d, j, k);
}

ComplexMatrix generator(std::size_t d, std::size_t index) {
  const GeneratorLabel label = generator_label(d, index);
  ComplexMatrix m(d);
  switch (label.kind) {
    case GeneratorKind::Diagonal: {
      const double l = static_cast<double>(label.l);
      const double c = std::sqrt(2.0 / ((l + 1.0) * (l + 2.0)));
      for (std::size_t i = 0; i <= label.l; ++i) m(i, i) = c;
      m(label.l + 1, label.l + 1) = -(l + 1.0) * c;
      break;
    }
    case GeneratorKind::Symmetric:
      m(label.j, label.k) = 1.0;
      m(label.k, label.j) = 1.0;
      break;
    case GeneratorKind::Antisymmetric:
      m(label.j, label.k) = Complex(0.0, -1.0);
      m(label.k, label.j) = Complex(0.0, 1.0);
      break;
  }
  return m;
}

GeneratorBasis::GeneratorBasis(std::size_t d) : dim_(d) {
  require_dim(d);
  matrices_.reserve(generator_count(d));
  for (std::size_t i = 1; i <= generator_count(d); ++i) matrices_.push_back(generator(d, i));
}

const GeneratorBasis& GeneratorBasis::get(std::size_t d) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<const GeneratorBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[d];
  if (!slot) slot = std::make_unique<const GeneratorBasis>(d);
  return *slot;
}

double BlochVector::norm() const noexcept {
  double s = 0.0;
  for (double r : components) s += r * r;
  return std::sqrt(s);
}

double bloch_norm_bound(std::size_t d) noexcept {
  return std::sqrt(static_cast<double>(d * (d - 1)) / 2.0);
}

BlochVector bloch_vector(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  const GeneratorBasis& basis = GeneratorBasis::get(d);
  BlochVector out{d, std::vector<double>(generator_count(d))};
  const double half_d = static_cast<double>(d) / 2.0;
  for (std::size_t i = 1; i <= basis.size(); ++i) {
    out.components[i - 1] = half_d * hermitian_trace_product(rho.matrix(), basis[i]);
  }
  return out;
}

ComplexMatrix state_from_bloch(std::size_t d, const BlochVector& r) {
  require_dim(d);
  if (r.components.size() != generator_count(d)) {
    throw Error(ErrorKind::LengthMismatch,
                "Bloch vector has " + std::to_string(r.components.size()) +
                    " components, expected " + std::to_string(generator_count(d)));
  }
  const GeneratorBasis& basis = GeneratorBasis::get(d);
  ComplexMatrix m = ComplexMatrix::identity(d);
  for (std::size_t i = 1; i <= basis.size(); ++i) {
    const double ri = r.components[i - 1];
    if (ri != 0.0) m += Complex(ri) * basis[i];
  }
  m *= 1.0 / static_cast<double>(d);
  return m;
}

std::vector<std::size_t> offdiag_support(const DensityMatrix& rho, double threshold) {
  // T_ij for i != j has zeros in the diagonal block, so only u/v components
  // can carry an off-diagonal entry.
  const BlochVector r = bloch_vector(rho);
  std::vector<std::size_t> support;
  for (std::size_t i = first_offdiag_index(rho.dim()); i <= r.components.size(); ++i) {
    if (std::abs(r.at(i)) > threshold) support.push_back(i);
  }
  return support;
}

}  // namespace cohwit
