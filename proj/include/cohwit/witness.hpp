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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cohwit/linalg.hpp"
#include "cohwit/states.hpp"

namespace cohwit {

inline constexpr double kDefaultDetectEps = 1e-9;

/// Hermitian operator W together with the interval [m, M] spanned by its
/// diagonal. Every incoherent state gives Tr(W delta) in [m, M], so a value
/// outside the interval certifies coherence. The interval is always derived
/// from the matrix; it cannot be set independently.
class Witness {
 public:
  /// Throws NotHermitian (at tol.hermiticity) or Parse for a negative eps.
  static Witness from_matrix(ComplexMatrix h, double detect_eps = kDefaultDetectEps,
                             const Tolerance& tol = kDefaultTolerance);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double detect_eps() const noexcept { return detect_eps_; }

  Witness with_detect_eps(double eps) const;

  friend bool operator==(const Witness&, const Witness&) = default;

 private:
  Witness(ComplexMatrix h, double detect_eps);

  ComplexMatrix matrix_;
  double lo_;
  double hi_;
  double detect_eps_;
};

enum class Verdict { Detected, NotDetected };

std::string_view to_string(Verdict v) noexcept;

struct DetectionReport {
  double value = 0.0;  // Re Tr(W rho)
  double lo = 0.0;
  double hi = 0.0;
  double margin = 0.0;  // max(lo - value, value - hi); > 0 means outside
  Verdict verdict = Verdict::NotDetected;
};

/// Throws DimensionMismatch.
DetectionReport evaluate(const Witness& w, const DensityMatrix& rho);

class WitnessFamily {
 public:
  /// Throws LengthMismatch if members is empty, DimensionMismatch if the
  /// members disagree on dimension.
  WitnessFamily(std::string label, std::vector<Witness> members);

  const std::string& label() const noexcept { return label_; }
  std::span<const Witness> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t dim() const noexcept { return members_.front().dim(); }

  void add(Witness w);

  /// Verdict of each member on rho.
  std::vector<Verdict> verdicts(const DensityMatrix& rho) const;
  bool detects(const DensityMatrix& rho) const;

 private:
  std::string label_;
  std::vector<Witness> members_;
};

/// diag(M, m, M, ..., M) with (d - m + M)/2 at (0,1) and (1,0). Gives
/// exactly M + 1 on canonical_coherent(d). Throws InvalidInterval if m > M.
Witness lemma2_witness(std::size_t d, double m, double big_m);

/// The off-diagonal entry a tailored witness is built on.
struct OffDiagonalChoice {
  std::size_t k = 0;
  std::size_t l = 1;
  Complex entry;
  bool use_real = true;  // |Re| >= |Im|

  double component() const noexcept { return use_real ? entry.real() : entry.imag(); }
};

/// Largest-modulus upper-triangular entry, lowest (k, l) on ties.
/// Throws NotCoherent if no entry exceeds `threshold` in modulus.
OffDiagonalChoice select_offdiagonal(const DensityMatrix& rho,
                                     double threshold = kDefaultDetectEps);

/// (|k><l| + |l><k|)/2 and i(|k><l| - |l><k|)/2: Tr(. rho) picks out
/// Re(rho_kl) and Im(rho_kl) respectively.
ComplexMatrix real_part_probe(std::size_t d, std::size_t k, std::size_t l);
ComplexMatrix imag_part_probe(std::size_t d, std::size_t k, std::size_t l);

/// Witness with interval exactly [m, M] that detects rho.
///  m == M: probe + m I, value m + component.
///  m <  M: lemma2_witness(d, m, M) + eps * probe with eps chosen so the
///          value is M + 1.
/// Throws NotCoherent or InvalidInterval.
Witness tailored_witness(const DensityMatrix& rho, double m, double big_m);

/// (K I + a sigma1 + b sigma2 + c sigma3)/2 on a qubit; interval
/// [(K-|c|)/2, (K+|c|)/2]. Throws ZeroOperator if a = b = c = 0.
Witness qubit_witness(double k, double a, double b, double c);

struct QubitEffectiveness {
  bool effective = false;
  /// Effective, but sqrt(a^2 + b^2) < 1e-9: detection is below tolerance.
  bool numerically_marginal = false;
};

/// Throws ZeroOperator if a = b = c = 0.
QubitEffectiveness classify_qubit(double a, double b, double c);
inline bool is_effective_qubit(double a, double b, double c) {
  return classify_qubit(a, b, c).effective;
}

/// {W[K,a1,b1,0], W[K,a2,b2,0]}. Throws ZeroOperator if a member vanishes,
/// DegenerateFamily if a1*b2 - a2*b1 == 0.
WitnessFamily qubit_pair_family(double k, double a1, double b1, double a2, double b2);

/// (1/d)(K I + sum_i eta_i lambda_i), eta indexed 0-based for lambda_1.
/// Throws LengthMismatch.
Witness w_eta(std::size_t d, double k, std::span<const double> eta);

/// w_eta with a unit coefficient on the support index of largest |r_i|.
/// Throws NotCoherent when offdiag_support(rho) is empty.
Witness theorem2_witness(const DensityMatrix& rho, double k);

/// The d(d-1) single-coefficient witnesses w_eta(d, K, s_i e_i) for
/// i = d .. d^2-1. `s` holds s_d .. s_{d^2-1}; all ones when omitted.
/// Throws LengthMismatch or ZeroCoefficient.
WitnessFamily finite_family(std::size_t d, double k,
                            std::optional<std::span<const double>> s = std::nullopt);

}  // namespace cohwit
