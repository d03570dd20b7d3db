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

// JSON documents and CSV streams. One JSON object per file; complex numbers
// are [re, im] pairs, matrices row-major. Doubles are written in shortest
// round-trip form, so write -> read reproduces every value bit-for-bit.
//
// Loading revalidates everything and reports failures as Error(Parse) with
// the offending field named in the message.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cohwit/linalg.hpp"
#include "cohwit/states.hpp"
#include "cohwit/verify.hpp"
#include "cohwit/witness.hpp"

namespace cohwit::io {

using json = nlohmann::json;

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& doc);

/// How a witness was built: lemma2 | tailored | qubit | eta | family-member
/// | custom, plus the parameters that went in.
struct ConstructorTag {
  std::string kind = "custom";
  json params = json::object();
};

struct WitnessDocument {
  Witness witness;
  ConstructorTag constructor;
};

json to_json(const WitnessDocument& doc);
WitnessDocument witness_from_json(const json& doc);

struct FamilyDocument {
  std::string label;
  std::vector<WitnessDocument> members;

  WitnessFamily family() const;
};

json to_json(const FamilyDocument& doc);
FamilyDocument family_from_json(const json& doc);

/// A witness file holds either a single witness or a family; a single
/// witness loads as a one-member family.
FamilyDocument load_witnesses(const json& doc);

json state_to_json(const DensityMatrix& rho);
/// Throws Parse for malformed JSON, and the DensityMatrix errors for a
/// matrix that is not a valid state (re-raised as Parse with context).
DensityMatrix state_from_json(const json& doc);

json to_json(const DetectionReport& r, double detect_eps);
json to_json(const CoverageReport& r);
json to_json(const Lemma1Result& r);
json to_json(const GeometryReport& r);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);

/// Shortest round-trip decimal form.
std::string format_double(double v);

/// Header `x,y,z,value,verdict` then one row per Bloch-ball lattice point,
/// LF line endings.
void write_bloch_csv(std::ostream& out, double k, double a, double b, double c,
                     std::size_t grid_n);

}  // namespace cohwit::io
