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

#include "cohwit/documents.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cohwit/error.hpp"

namespace cohwit::io {

namespace {

[[noreturn]] void fail(std::string_view field, std::string_view problem) {
  throw Error(ErrorKind::Parse, std::string(field) + ": " + std::string(problem));
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object()) fail("<document>", "expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) fail(key, "missing");
  return *it;
}

double number(const json& v, std::string_view field) {
  if (!v.is_number()) fail(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(field, "must be finite");
  return x;
}

json interval_json(double lo, double hi) { return json::array({lo, hi}); }

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const Complex& z : m.entries()) entries.push_back(json::array({z.real(), z.imag()}));
  return {{"dim", m.dim()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& doc) {
  const json& dim = require(doc, "dim");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() < 2) {
    fail("dim", "expected an integer >= 2");
  }
  const std::size_t d = dim.get<std::size_t>();
  const json& entries = require(doc, "entries");
  if (!entries.is_array()) fail("entries", "expected an array");
  if (entries.size() != d * d) {
    fail("entries", "expected " + std::to_string(d * d) + " entries, got " +
                        std::to_string(entries.size()));
  }
  std::vector<Complex> values;
  values.reserve(d * d);
  for (std::size_t n = 0; n < entries.size(); ++n) {
    const std::string field = "entries[" + std::to_string(n) + "]";
    const json& pair = entries[n];
    if (!pair.is_array() || pair.size() != 2) fail(field, "expected [re, im]");
    values.emplace_back(number(pair[0], field + "[0]"), number(pair[1], field + "[1]"));
  }
  return ComplexMatrix(d, std::move(values));
}

json to_json(const WitnessDocument& doc) {
  json out = matrix_to_json(doc.witness.matrix());
  out["interval"] = interval_json(doc.witness.lo(), doc.witness.hi());
  out["detect_eps"] = doc.witness.detect_eps();
  out["constructor"] = {{"kind", doc.constructor.kind}, {"params", doc.constructor.params}};
  return out;
}

WitnessDocument witness_from_json(const json& doc) {
  ComplexMatrix m = matrix_from_json(doc);
  if (!is_hermitian(m, kDefaultTolerance.hermiticity)) {
    fail("entries", "matrix is not Hermitian");
  }
  const double eps = number(require(doc, "detect_eps"), "detect_eps");
  if (eps < 0.0) fail("detect_eps", "must be >= 0");
  Witness w = Witness::from_matrix(std::move(m), eps);

  const json& interval = require(doc, "interval");
  if (!interval.is_array() || interval.size() != 2) fail("interval", "expected [m, M]");
  const double lo = number(interval[0], "interval[0]");
  const double hi = number(interval[1], "interval[1]");
  if (std::abs(lo - w.lo()) > 1e-12 || std::abs(hi - w.hi()) > 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "[" << lo << ", " << hi << "] inconsistent with diagonal range [" << w.lo() << ", "
        << w.hi() << "]";
    fail("interval", msg.str());
  }

  ConstructorTag tag;
  if (const auto it = doc.find("constructor"); it != doc.end()) {
    const json& kind = require(*it, "kind");
    if (!kind.is_string()) fail("constructor.kind", "expected a string");
    tag.kind = kind.get<std::string>();
    static const std::vector<std::string> kKinds = {"lemma2", "tailored",      "qubit",
                                                    "eta",    "family-member", "custom"};
    if (std::find(kKinds.begin(), kKinds.end(), tag.kind) == kKinds.end()) {
      fail("constructor.kind", "unknown constructor '" + tag.kind + "'");
    }
    if (const auto p = it->find("params"); p != it->end()) tag.params = *p;
  }
  return {std::move(w), std::move(tag)};
}

WitnessFamily FamilyDocument::family() const {
  std::vector<Witness> ws;
  ws.reserve(members.size());
  for (const auto& m : members) ws.push_back(m.witness);
  return WitnessFamily(label, std::move(ws));
}

json to_json(const FamilyDocument& doc) {
  json members = json::array();
  for (const auto& m : doc.members) members.push_back(to_json(m));
  return {{"family", doc.label}, {"members", std::move(members)}};
}

FamilyDocument family_from_json(const json& doc) {
  const json& label = require(doc, "family");
  if (!label.is_string()) fail("family", "expected a string label");
  const json& members = require(doc, "members");
  if (!members.is_array() || members.empty()) fail("members", "expected a nonempty array");
  FamilyDocument out{label.get<std::string>(), {}};
  for (std::size_t i = 0; i < members.size(); ++i) {
    try {
      out.members.push_back(witness_from_json(members[i]));
    } catch (const Error& e) {
      fail("members[" + std::to_string(i) + "]", e.what());
    }
  }
  const std::size_t d = out.members.front().witness.dim();
  for (std::size_t i = 0; i < out.members.size(); ++i) {
    if (out.members[i].witness.dim() != d) {
      fail("members[" + std::to_string(i) + "].dim", "differs from members[0]");
    }
  }
  return out;
}

FamilyDocument load_witnesses(const json& doc) {
  if (doc.is_object() && doc.contains("members")) return family_from_json(doc);
  WitnessDocument w = witness_from_json(doc);
  FamilyDocument out{"single(" + w.constructor.kind + ")", {}};
  out.members.push_back(std::move(w));
  return out;
}

json state_to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

DensityMatrix state_from_json(const json& doc) {
  ComplexMatrix m = matrix_from_json(doc);
  try {
    return DensityMatrix(std::move(m));
  } catch (const Error& e) {
    fail("entries", std::string("not a valid density matrix (") +
                        std::string(to_string(e.kind())) + "): " + e.what());
  }
}

json to_json(const DetectionReport& r, double detect_eps) {
  return {{"value", r.value},
          {"interval", interval_json(r.lo, r.hi)},
          {"margin", r.margin},
          {"detect_eps", detect_eps},
          {"verdict", std::string(to_string(r.verdict))}};
}

json to_json(const CoverageReport& r) {
  return {{"report", "coverage"},
          {"family", r.family_label},
          {"dim", r.dim},
          {"n_states", r.n_states},
          {"n_coherent", r.n_coherent},
          {"n_incoherent", r.n_incoherent},
          {"n_detected", r.n_detected},
          {"n_false_alarm", r.n_false_alarm},
          {"min_margin_detected", optional_json(r.min_margin_detected)},
          {"per_witness_hits", r.per_witness_hits},
          {"missed", r.missed},
          {"seed", r.seed ? json(r.seed->value) : json(nullptr)},
          {"coherence_threshold", r.options.coherence_threshold},
          {"incoherent_floor", r.options.incoherent_floor},
          {"detect_eps", r.detect_eps},
          {"result", r.pass ? "PASS" : "FAIL"}};
}

json to_json(const Lemma1Result& r) {
  return {{"report", "lemma1"},
          {"dim", r.dim},
          {"n_witnesses", r.n_witnesses},
          {"n_states", r.n_states},
          {"n_checks", r.n_checks},
          {"n_violations", r.n_violations},
          {"worst_excursion", r.worst_excursion},
          {"seed", r.seed.value},
          {"slack", r.slack},
          {"result", r.pass ? "PASS" : "FAIL"}};
}

json to_json(const GeometryReport& r) {
  return {{"report", "qubit_geometry"},
          {"witness_params", {{"K", r.k}, {"a", r.a}, {"b", r.b}, {"c", r.c}}},
          {"grid", r.grid_n},
          {"n_points", r.n_points},
          {"n_mismatch", r.n_mismatch},
          {"n_detected", r.n_detected},
          {"effective", r.effective},
          {"effectiveness_consistent", r.effectiveness_consistent},
          {"detect_eps", r.detect_eps},
          {"result", r.pass ? "PASS" : "FAIL"}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path, e.what());
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open file for writing");
  out << doc.dump(2) << '\n';
  if (!out) fail(path, "write failed");
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_bloch_csv(std::ostream& out, double k, double a, double b, double c,
                     std::size_t grid_n) {
  const Witness w = qubit_witness(k, a, b, c);
  out << "x,y,z,value,verdict\n";
  for (const BlochPoint& p : bloch_grid(grid_n)) {
    const DetectionReport r = evaluate(w, qubit_state(p.x, p.y, p.z));
    out << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(p.z) << ','
        << format_double(r.value) << ',' << to_string(r.verdict) << '\n';
  }
}

}  // namespace cohwit::io
