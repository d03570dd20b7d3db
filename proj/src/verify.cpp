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

#include "cohwit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "cohwit/error.hpp"

namespace cohwit {

namespace {

// Runs body(i) for i in [0, n) over `threads` contiguous chunks.
template <typename Body>
void for_each_index(std::size_t n, unsigned threads, Body&& body) {
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &body] {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }
}

}  // namespace

Lemma1Result verify_lemma1(std::span<const Witness> witnesses, std::size_t n_states, Seed seed,
                           const Lemma1Options& opts) {
  if (witnesses.empty()) throw Error(ErrorKind::LengthMismatch, "no witnesses to check");
  const std::size_t d = witnesses.front().dim();
  Lemma1Result res;
  res.dim = d;
  res.n_witnesses = witnesses.size();
  res.n_states = n_states;
  res.seed = seed;
  res.slack = opts.slack;
  res.worst_excursion = -std::numeric_limits<double>::infinity();

  std::vector<DensityMatrix> states;
  states.reserve(n_states);
  for (std::size_t s = 0; s < n_states; ++s) {
    states.push_back(sample_incoherent(d, seed.derive(s)).to_density());
  }
  for (const Witness& w : witnesses) {
    if (w.dim() != d) throw Error(ErrorKind::DimensionMismatch, "witness dimensions differ");
    const double lo = w.lo() + opts.narrow;
    const double hi = w.hi() - opts.narrow;
    for (const DensityMatrix& delta : states) {
      const double value = evaluate(w, delta).value;
      const double excursion = std::max(lo - value, value - hi);
      res.worst_excursion = std::max(res.worst_excursion, excursion);
      ++res.n_checks;
      if (excursion > opts.slack) ++res.n_violations;
    }
  }
  res.pass = res.n_violations == 0;
  return res;
}

Lemma1Result verify_lemma1(std::size_t d, std::size_t n_witnesses, std::size_t n_states,
                           Seed seed, const Lemma1Options& opts) {
  // Witness streams are offset so they never reuse a state stream.
  const Seed witness_seed = seed.derive(std::numeric_limits<std::uint64_t>::max() / 2);
  std::vector<Witness> witnesses;
  witnesses.reserve(n_witnesses);
  for (std::size_t i = 0; i < n_witnesses; ++i) {
    witnesses.push_back(Witness::from_matrix(sample_hermitian(d, witness_seed.derive(i))));
  }
  return verify_lemma1(witnesses, n_states, seed, opts);
}

std::vector<DensityMatrix> coverage_ensemble(std::size_t d, std::size_t n, Seed seed) {
  std::vector<DensityMatrix> out;
  out.reserve(n);
  const std::size_t n_ginibre = n - n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < n_ginibre) {
      out.push_back(sample_ginibre(d, seed.derive(i)));
    } else {
      out.push_back(sample_incoherent(d, seed.derive(i)).to_density());
    }
  }
  return out;
}

CoverageReport verify_coverage(const WitnessFamily& family, std::span<const DensityMatrix> states,
                               const CoverageOptions& opts) {
  const std::size_t members = family.size();
  for (const auto& rho : states) {
    if (rho.dim() != family.dim()) {
      throw Error(ErrorKind::DimensionMismatch, "state and family dimensions differ");
    }
  }

  struct Outcome {
    double l1 = 0.0;
    double best_margin = 0.0;
    std::vector<bool> hits;
  };
  std::vector<Outcome> outcomes(states.size());
  for_each_index(states.size(), opts.threads, [&](std::size_t i) {
    Outcome& o = outcomes[i];
    o.l1 = l1_coherence(states[i]);
    o.best_margin = -std::numeric_limits<double>::infinity();
    o.hits.resize(members);
    for (std::size_t w = 0; w < members; ++w) {
      const DetectionReport r = evaluate(family.members()[w], states[i]);
      o.best_margin = std::max(o.best_margin, r.margin);
      o.hits[w] = r.verdict == Verdict::Detected;
    }
  });

  CoverageReport rep;
  rep.family_label = family.label();
  rep.dim = family.dim();
  rep.n_states = states.size();
  rep.options = opts;
  rep.detect_eps = family.members().front().detect_eps();
  rep.per_witness_hits.assign(members, 0);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    bool any = false;
    for (std::size_t w = 0; w < members; ++w) {
      if (o.hits[w]) {
        ++rep.per_witness_hits[w];
        any = true;
      }
    }
    if (o.l1 > opts.coherence_threshold) {
      ++rep.n_coherent;
      if (any) {
        ++rep.n_detected;
        rep.min_margin_detected =
            std::min(rep.min_margin_detected.value_or(o.best_margin), o.best_margin);
      } else {
        rep.missed.push_back(i);
      }
    } else if (o.l1 <= opts.incoherent_floor) {
      ++rep.n_incoherent;
      if (any) ++rep.n_false_alarm;
    }
  }
  rep.pass = rep.n_detected == rep.n_coherent && rep.n_false_alarm == 0;
  return rep;
}

CoverageReport verify_coverage(const WitnessFamily& family, std::size_t d, std::size_t n_states,
                               Seed seed, const CoverageOptions& opts) {
  if (family.dim() != d) {
    throw Error(ErrorKind::DimensionMismatch, "family is " + std::to_string(family.dim()) +
                                                  "-dimensional, sweep asked for d=" +
                                                  std::to_string(d));
  }
  const std::vector<DensityMatrix> states = coverage_ensemble(d, n_states, seed);
  CoverageReport rep = verify_coverage(family, states, opts);
  rep.seed = seed;
  return rep;
}

std::vector<BlochPoint> bloch_grid(std::size_t grid_n) {
  if (grid_n < 2) throw Error(ErrorKind::InvalidDimension, "grid needs at least 2 points per axis");
  const double step = 2.0 / static_cast<double>(grid_n - 1);
  const auto coord = [&](std::size_t i) {
    return i + 1 == grid_n ? 1.0 : -1.0 + step * static_cast<double>(i);
  };
  std::vector<BlochPoint> out;
  for (std::size_t i = 0; i < grid_n; ++i)
    for (std::size_t j = 0; j < grid_n; ++j)
      for (std::size_t k = 0; k < grid_n; ++k) {
        const BlochPoint p{coord(i), coord(j), coord(k)};
        if (p.x * p.x + p.y * p.y + p.z * p.z <= 1.0 + 1e-12) out.push_back(p);
      }
  return out;
}

bool qubit_detection_predicate(double a, double b, double c, const BlochPoint& p, double eps) {
  return std::abs(a * p.x + b * p.y + c * p.z) > std::abs(c) + 2.0 * eps;
}

GeometryReport qubit_geometry_check(double k, double a, double b, double c, std::size_t grid_n) {
  const Witness w = qubit_witness(k, a, b, c);
  GeometryReport rep;
  rep.k = k;
  rep.a = a;
  rep.b = b;
  rep.c = c;
  rep.grid_n = grid_n;
  rep.detect_eps = w.detect_eps();
  rep.effective = is_effective_qubit(a, b, c);
  for (const BlochPoint& p : bloch_grid(grid_n)) {
    const bool detected = evaluate(w, qubit_state(p.x, p.y, p.z)).verdict == Verdict::Detected;
    ++rep.n_points;
    if (detected) ++rep.n_detected;
    if (detected != qubit_detection_predicate(a, b, c, p, w.detect_eps())) ++rep.n_mismatch;
  }
  rep.effectiveness_consistent = (rep.n_detected > 0) == rep.effective;
  rep.pass = rep.n_mismatch == 0;
  return rep;
}

}  // namespace cohwit
