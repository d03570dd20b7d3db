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

#include <iosfwd>
#include <span>
#include <string>

namespace cohwit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitVerifyFail = 3;

/// Parses `args` (without the program name) and runs one subcommand:
///   gen     --kind {lemma2|qubit|eta|family|tailored|canonical|ginibre} ... --out FILE
///   detect  --witness FILE --state FILE [--eps R]
///   oracle  --state FILE
///   verify  --d D --samples N --seed U64 [--K R] [--threshold R] [--family FILE] [--threads N]
///   bloch   --K R --a R --b R --c R --grid N [--out FILE]
/// Structured output goes to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cohwit::cli
