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

#include "cohwit/error.hpp"

namespace cohwit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotUnitTrace: return "NotUnitTrace";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OutOfInterval: return "OutOfInterval";
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::NotCoherent: return "NotCoherent";
    case ErrorKind::ZeroOperator: return "ZeroOperator";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::DegenerateFamily: return "DegenerateFamily";
    case ErrorKind::InvalidProbabilities: return "InvalidProbabilities";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace cohwit
