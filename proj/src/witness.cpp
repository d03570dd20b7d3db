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

#include "cohwit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cohwit/error.hpp"
#include "cohwit/generators.hpp"

namespace cohwit {

Witness::Witness(ComplexMatrix h, double detect_eps)
    : matrix_(std::move(h)), lo_(matrix_(0, 0).real()), hi_(lo_), detect_eps_(detect_eps) {
  for (std::size_t i = 1; i < matrix_.dim(); ++i) {
    lo_ = std::min(lo_, matrix_(i, i).real());
    hi_ = std::max(hi_, matrix_(i, i).real());
  }
}

Witness Witness::from_matrix(ComplexMatrix h, double detect_eps, const Tolerance& tol) {
  if (!is_hermitian(h, tol.hermiticity)) {
    throw Error(ErrorKind::NotHermitian, "witness matrix is not Hermitian");
  }
  if (!(detect_eps >= 0.0)) throw Error(ErrorKind::Parse, "detect_eps must be >= 0");
  return Witness(std::move(h), detect_eps);
}

Witness Witness::with_detect_eps(double eps) const { return from_matrix(matrix_, eps); }

std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::Detected ? "Detected" : "NotDetected";
}

DetectionReport evaluate(const Witness& w, const DensityMatrix& rho) {
  DetectionReport r;
  r.value = hermitian_trace_product(w.matrix(), rho.matrix());
  r.lo = w.lo();
  r.hi = w.hi();
  r.margin = std::max(r.lo - r.value, r.value - r.hi);
  r.verdict = r.margin > w.detect_eps() ? Verdict::Detected : Verdict::NotDetected;
  return r;
}

WitnessFamily::WitnessFamily(std::string label, std::vector<Witness> members)
    : label_(std::move(label)), members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorKind::LengthMismatch, "witness family is empty");
  for (const auto& w : members_) {
    if (w.dim() != members_.front().dim()) {
      throw Error(ErrorKind::DimensionMismatch, "family members differ in dimension");
    }
  }
}

void WitnessFamily::add(Witness w) {
  if (w.dim() != dim()) {
    throw Error(ErrorKind::DimensionMismatch, "family members differ in dimension");
  }
  members_.push_back(std::move(w));
}

std::vector<Verdict> WitnessFamily::verdicts(const DensityMatrix& rho) const {
  std::vector<Verdict> out;
  out.reserve(members_.size());
  for (const auto& w : members_) out.push_back(evaluate(w, rho).verdict);
  return out;
}

bool WitnessFamily::detects(const DensityMatrix& rho) const {
  return std::any_of(members_.begin(), members_.end(), [&](const Witness& w) {
    return evaluate(w, rho).verdict == Verdict::Detected;
  });
}

namespace {

void require_dim(std::size_t d) {
  if (d < 2) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 2");
}

void require_interval(double m, double big_m) {
  if (!std::isfinite(m) || !std::isfinite(big_m) || m > big_m) {
    std::ostringstream msg;
    msg << "invalid interval [" << m << ", " << big_m << "]";
    throw Error(ErrorKind::InvalidInterval, msg.str());
  }
}

}  // namespace

Witness lemma2_witness(std::size_t d, double m, double big_m) {
  require_dim(d);
  require_interval(m, big_m);
  ComplexMatrix w(d);
  for (std::size_t i = 0; i < d; ++i) w(i, i) = big_m;
  w(1, 1) = m;
  const double off = (static_cast<double>(d) - m + big_m) / 2.0;
  w(0, 1) = off;
  w(1, 0) = off;
  return Witness::from_matrix(std::move(w));
}

OffDiagonalChoice select_offdiagonal(const DensityMatrix& rho, double threshold) {
  const ComplexMatrix& m = rho.matrix();
  OffDiagonalChoice best;
  double best_mod = -1.0;
  for (std::size_t k = 0; k < m.dim(); ++k)
    for (std::size_t l = k + 1; l < m.dim(); ++l) {
      const double mod = std::abs(m(k, l));
      if (mod > best_mod) {
        best_mod = mod;
        best.k = k;
        best.l = l;
        best.entry = m(k, l);
      }
    }
  if (!(best_mod > threshold)) {
    throw Error(ErrorKind::NotCoherent, "no off-diagonal entry exceeds the threshold");
  }
  best.use_real = std::abs(best.entry.real()) >= std::abs(best.entry.imag());
  return best;
}

ComplexMatrix real_part_probe(std::size_t d, std::size_t k, std::size_t l) {
  ComplexMatrix p(d);
  p(k, l) = 0.5;
  p(l, k) = 0.5;
  return p;
}

ComplexMatrix imag_part_probe(std::size_t d, std::size_t k, std::size_t l) {
  ComplexMatrix p(d);
  p(k, l) = Complex(0.0, 0.5);
  p(l, k) = Complex(0.0, -0.5);
  return p;
}

Witness tailored_witness(const DensityMatrix& rho, double m, double big_m) {
  require_interval(m, big_m);
  const std::size_t d = rho.dim();
  const OffDiagonalChoice pick = select_offdiagonal(rho);
  const ComplexMatrix probe = pick.use_real ? real_part_probe(d, pick.k, pick.l)
                                            : imag_part_probe(d, pick.k, pick.l);
  if (m == big_m) {
    return Witness::from_matrix(probe + Complex(m) * ComplexMatrix::identity(d));
  }
  const Witness base = lemma2_witness(d, m, big_m);
  const double shortfall = big_m + 1.0 - evaluate(base, rho).value;
  if (shortfall == 0.0) return base;
  const double eps = shortfall / pick.component();
  return Witness::from_matrix(base.matrix() + Complex(eps) * probe);
}

Witness qubit_witness(double k, double a, double b, double c) {
  if (a == 0.0 && b == 0.0 && c == 0.0) {
    throw Error(ErrorKind::ZeroOperator, "qubit witness needs a^2 + b^2 + c^2 != 0");
  }
  ComplexMatrix w(2);
  w(0, 0) = (k + c) / 2.0;
  w(1, 1) = (k - c) / 2.0;
  w(0, 1) = Complex(a / 2.0, -b / 2.0);
  w(1, 0) = Complex(a / 2.0, b / 2.0);
  return Witness::from_matrix(std::move(w));
}

QubitEffectiveness classify_qubit(double a, double b, double c) {
  if (a == 0.0 && b == 0.0 && c == 0.0) {
    throw Error(ErrorKind::ZeroOperator, "qubit witness needs a^2 + b^2 + c^2 != 0");
  }
  QubitEffectiveness e;
  e.effective = a != 0.0 || b != 0.0;
  e.numerically_marginal = e.effective && std::hypot(a, b) < 1e-9;
  return e;
}

WitnessFamily qubit_pair_family(double k, double a1, double b1, double a2, double b2) {
  if (a1 * b2 - a2 * b1 == 0.0) {
    throw Error(ErrorKind::DegenerateFamily, "a1:b1 must differ from a2:b2");
  }
  std::ostringstream label;
  label << "qubit_pair(K=" << k << ",a1=" << a1 << ",b1=" << b1 << ",a2=" << a2
        << ",b2=" << b2 << ")";
  return WitnessFamily(label.str(), {qubit_witness(k, a1, b1, 0.0), qubit_witness(k, a2, b2, 0.0)});
}

Witness w_eta(std::size_t d, double k, std::span<const double> eta) {
  require_dim(d);
  if (eta.size() != generator_count(d)) {
    throw Error(ErrorKind::LengthMismatch, "eta has " + std::to_string(eta.size()) +
                                               " entries, expected " +
                                               std::to_string(generator_count(d)));
  }
  const GeneratorBasis& basis = GeneratorBasis::get(d);
  ComplexMatrix sum = Complex(k) * ComplexMatrix::identity(d);
  for (std::size_t i = 1; i <= basis.size(); ++i) {
    if (eta[i - 1] != 0.0) sum += Complex(eta[i - 1]) * basis[i];
  }
  const double dd = static_cast<double>(d);
  std::vector<Complex> entries(sum.entries().begin(), sum.entries().end());
  for (auto& z : entries) z = Complex(z.real() / dd, z.imag() / dd);
  return Witness::from_matrix(ComplexMatrix(d, std::move(entries)));
}

Witness theorem2_witness(const DensityMatrix& rho, double k) {
  const std::vector<std::size_t> support = offdiag_support(rho);
  if (support.empty()) {
    throw Error(ErrorKind::NotCoherent, "state has no off-diagonal Bloch component");
  }
  const BlochVector r = bloch_vector(rho);
  std::size_t m0 = support.front();
  for (std::size_t i : support) {
    if (std::abs(r.at(i)) > std::abs(r.at(m0))) m0 = i;
  }
  std::vector<double> eta(generator_count(rho.dim()), 0.0);
  eta[m0 - 1] = 1.0;
  return w_eta(rho.dim(), k, eta);
}

WitnessFamily finite_family(std::size_t d, double k, std::optional<std::span<const double>> s) {
  require_dim(d);
  const std::size_t count = d * (d - 1);
  std::vector<double> coeffs(count, 1.0);
  if (s) {
    if (s->size() != count) {
      throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(count) +
                                                 " coefficients, got " +
                                                 std::to_string(s->size()));
    }
    coeffs.assign(s->begin(), s->end());
  }
  std::vector<Witness> members;
  members.reserve(count);
  std::vector<double> eta(generator_count(d), 0.0);
  for (std::size_t n = 0; n < count; ++n) {
    if (coeffs[n] == 0.0 || !std::isfinite(coeffs[n])) {
      throw Error(ErrorKind::ZeroCoefficient,
                  "coefficient s_" + std::to_string(d + n) + " must be nonzero");
    }
    const std::size_t index = first_offdiag_index(d) + n;
    eta[index - 1] = coeffs[n];
    members.push_back(w_eta(d, k, eta));
    eta[index - 1] = 0.0;
  }
  std::ostringstream label;
  label << "finite_family(d=" << d << ",K=" << k << ")";
  return WitnessFamily(label.str(), std::move(members));
}

}  // namespace cohwit
