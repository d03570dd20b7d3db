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

// Ensemble sweeps that check the witness constructions against the l1
// coherence oracle. All sweeps are deterministic in (inputs, seed); the
// threaded paths write per-state results by index and reduce in order, so
// thread count never changes a report.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cohwit/states.hpp"
#include "cohwit/witness.hpp"

namespace cohwit {

struct Lemma1Options {
  double slack = 1e-12;
  /// Harness self-test: shrink every interval by this much on both ends.
  double narrow = 0.0;
};

struct Lemma1Result {
  std::size_t dim = 0;
  std::size_t n_witnesses = 0;
  std::size_t n_states = 0;
  std::size_t n_checks = 0;
  std::size_t n_violations = 0;
  /// max over checks of max(m - value, value - M); <= 0 when all inside.
  double worst_excursion = 0.0;
  Seed seed;
  double slack = 0.0;
  bool pass = false;
};

/// Random Hermitian witnesses (sample_hermitian) against random incoherent
/// states; every value must land in [m - slack, M + slack].
Lemma1Result verify_lemma1(std::size_t d, std::size_t n_witnesses, std::size_t n_states,
                           Seed seed, const Lemma1Options& opts = {});

/// Same check with caller-supplied witnesses (all of one dimension).
Lemma1Result verify_lemma1(std::span<const Witness> witnesses, std::size_t n_states, Seed seed,
                           const Lemma1Options& opts = {});

struct CoverageOptions {
  /// States with l1 above this must be detected.
  double coherence_threshold = 1e-7;
  /// States with l1 at or below this count as incoherent; anything in
  /// between is exempt from both checks.
  double incoherent_floor = 0.0;
  unsigned threads = 1;
};

struct CoverageReport {
  std::string family_label;
  std::size_t dim = 0;
  std::size_t n_states = 0;
  std::size_t n_coherent = 0;
  std::size_t n_incoherent = 0;
  std::size_t n_detected = 0;  // coherent states hit by at least one member
  std::size_t n_false_alarm = 0;
  std::optional<double> min_margin_detected;  // over detected coherent states, best member
  std::vector<std::size_t> per_witness_hits;  // any state, per member
  std::vector<std::size_t> missed;            // indices of undetected coherent states
  std::optional<Seed> seed;
  CoverageOptions options;
  double detect_eps = 0.0;  // of the first member
  bool pass = false;
};

/// n - n/2 Ginibre states followed by n/2 diagonal states, state i drawn
/// from seed.derive(i).
std::vector<DensityMatrix> coverage_ensemble(std::size_t d, std::size_t n, Seed seed);

/// Throws DimensionMismatch if the family is not d-dimensional.
CoverageReport verify_coverage(const WitnessFamily& family, std::size_t d, std::size_t n_states,
                               Seed seed, const CoverageOptions& opts = {});

CoverageReport verify_coverage(const WitnessFamily& family, std::span<const DensityMatrix> states,
                               const CoverageOptions& opts = {});

struct BlochPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// grid_n^3 lattice over [-1, 1]^3 in (x outer, y, z inner) order, kept to
/// points with x^2 + y^2 + z^2 <= 1 + 1e-12.
std::vector<BlochPoint> bloch_grid(std::size_t grid_n);

/// |ax + by + cz| > |c| + 2 eps
bool qubit_detection_predicate(double a, double b, double c, const BlochPoint& p, double eps);

struct GeometryReport {
  double k = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  std::size_t grid_n = 0;
  std::size_t n_points = 0;
  std::size_t n_mismatch = 0;
  std::size_t n_detected = 0;
  bool effective = false;
  /// n_detected > 0 exactly when is_effective_qubit(a, b, c).
  bool effectiveness_consistent = false;
  double detect_eps = 0.0;
  bool pass = false;  // n_mismatch == 0
};

/// Throws ZeroOperator, or InvalidDimension if grid_n < 2.
GeometryReport qubit_geometry_check(double k, double a, double b, double c, std::size_t grid_n);

}  // namespace cohwit
