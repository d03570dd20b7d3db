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

#include "cohwit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

#include "cohwit/documents.hpp"
#include "cohwit/error.hpp"
#include "cohwit/generators.hpp"
#include "cohwit/verify.hpp"

namespace cohwit::cli {

namespace {

using io::json;

std::vector<double> parse_csv_list(const std::string& text, std::string_view flag) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    while (first < last && *first == ' ') ++first;
    double v = 0.0;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(v)) {
      throw Error(ErrorKind::Parse, std::string(flag) + ": bad number '" +
                                        std::string(first, last) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

struct GenArgs {
  std::string kind;
  std::size_t d = 0;
  std::optional<double> m, big_m;
  double k = 0.0;
  double a = 0.0, b = 0.0, c = 0.0;
  std::string eta, s, state, out;
  std::uint64_t seed = 0;
  std::optional<double> eps;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::Parse, what);
}

io::WitnessDocument tagged(Witness w, std::string kind, json params) {
  return {std::move(w), {std::move(kind), std::move(params)}};
}

json run_gen(const GenArgs& g) {
  const auto need_d = [&] { require(g.d >= 2, "--d: required (>= 2) for --kind " + g.kind); };
  const auto need_interval = [&] {
    require(g.m && g.big_m, "--m and --M: required for --kind " + g.kind);
  };
  const auto with_eps = [&](io::WitnessDocument doc) {
    if (g.eps) doc.witness = doc.witness.with_detect_eps(*g.eps);
    return doc;
  };

  json doc;
  if (g.kind == "lemma2") {
    need_d();
    need_interval();
    doc = io::to_json(with_eps(tagged(lemma2_witness(g.d, *g.m, *g.big_m), "lemma2",
                                      {{"d", g.d}, {"m", *g.m}, {"M", *g.big_m}})));
  } else if (g.kind == "qubit") {
    require(g.d == 0 || g.d == 2, "--d: qubit witnesses are 2-dimensional");
    doc = io::to_json(with_eps(tagged(qubit_witness(g.k, g.a, g.b, g.c), "qubit",
                                      {{"K", g.k}, {"a", g.a}, {"b", g.b}, {"c", g.c}})));
  } else if (g.kind == "eta") {
    need_d();
    require(!g.eta.empty(), "--eta: required for --kind eta");
    const std::vector<double> eta = parse_csv_list(g.eta, "--eta");
    doc = io::to_json(
        with_eps(tagged(w_eta(g.d, g.k, eta), "eta", {{"d", g.d}, {"K", g.k}, {"eta", eta}})));
  } else if (g.kind == "family") {
    need_d();
    std::optional<std::vector<double>> s;
    if (!g.s.empty()) s = parse_csv_list(g.s, "--s");
    const WitnessFamily fam =
        s ? finite_family(g.d, g.k, std::span<const double>(*s)) : finite_family(g.d, g.k);
    io::FamilyDocument fd{fam.label(), {}};
    for (std::size_t n = 0; n < fam.size(); ++n) {
      const std::size_t index = first_offdiag_index(g.d) + n;
      fd.members.push_back(with_eps(tagged(fam.members()[n], "family-member",
                                           {{"d", g.d},
                                            {"K", g.k},
                                            {"index", index},
                                            {"s", s ? (*s)[n] : 1.0}})));
    }
    doc = io::to_json(fd);
  } else if (g.kind == "tailored") {
    need_interval();
    require(!g.state.empty(), "--state: required for --kind tailored");
    const DensityMatrix rho = io::state_from_json(io::read_json_file(g.state));
    doc = io::to_json(with_eps(tagged(tailored_witness(rho, *g.m, *g.big_m), "tailored",
                                      {{"m", *g.m}, {"M", *g.big_m}, {"state", g.state}})));
  } else if (g.kind == "canonical") {
    need_d();
    doc = io::state_to_json(canonical_coherent(g.d));
  } else if (g.kind == "ginibre") {
    need_d();
    doc = io::state_to_json(sample_ginibre(g.d, Seed{g.seed}));
  } else {
    throw Error(ErrorKind::Parse, "--kind: unknown kind '" + g.kind + "'");
  }
  io::write_json_file(g.out, doc);
  return {{"wrote", g.out}, {"kind", g.kind}};
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherence witness construction and verification", "cohwit"};
  app.require_subcommand(1);

  GenArgs g;
  auto* gen = app.add_subcommand("gen", "Construct a witness, witness family or state document");
  gen->add_option("--kind", g.kind, "lemma2|qubit|eta|family|tailored|canonical|ginibre")
      ->required();
  gen->add_option("--d", g.d, "Dimension");
  gen->add_option("--m", g.m, "Interval lower end");
  gen->add_option("--M", g.big_m, "Interval upper end");
  gen->add_option("--K", g.k, "Identity coefficient");
  gen->add_option("--a", g.a, "sigma1 coefficient");
  gen->add_option("--b", g.b, "sigma2 coefficient");
  gen->add_option("--c", g.c, "sigma3 coefficient");
  gen->add_option("--eta", g.eta, "Comma-separated generator coefficients s_1..s_{d^2-1}");
  gen->add_option("--s", g.s, "Comma-separated coefficients s_d..s_{d^2-1}");
  gen->add_option("--state", g.state, "State document (tailored)");
  gen->add_option("--seed", g.seed, "Seed (ginibre)");
  gen->add_option("--eps", g.eps, "Detection tolerance stored in the witness");
  gen->add_option("--out", g.out, "Output file")->required();

  std::string witness_file, state_file;
  std::optional<double> detect_eps;
  auto* detect = app.add_subcommand("detect", "Evaluate a witness (or family) on a state");
  detect->add_option("--witness", witness_file)->required();
  detect->add_option("--state", state_file)->required();
  detect->add_option("--eps", detect_eps, "Override the stored detection tolerance");

  std::string oracle_state;
  auto* oracle = app.add_subcommand("oracle", "Print the l1 coherence of a state");
  oracle->add_option("--state", oracle_state)->required();

  std::size_t vd = 0, samples = 0;
  std::uint64_t vseed = 0;
  double vk = 0.0;
  CoverageOptions vopts;
  std::string family_file;
  auto* verify = app.add_subcommand("verify", "Coverage sweep of the finite witness family");
  verify->add_option("--d", vd, "Dimension")->required();
  verify->add_option("--samples", samples, "Ensemble size (half Ginibre, half diagonal)")
      ->required();
  verify->add_option("--seed", vseed, "Ensemble seed")->required();
  verify->add_option("--K", vk, "Identity coefficient of the finite family");
  verify->add_option("--threshold", vopts.coherence_threshold,
                     "l1 coherence above which detection is required");
  verify->add_option("--family", family_file, "Check this family instead of the finite family");
  verify->add_option("--threads", vopts.threads, "Worker threads (output does not depend on it)");

  double bk = 0.0, ba = 0.0, bb = 0.0, bc = 0.0;
  std::size_t grid = 0;
  std::string bloch_out;
  auto* bloch = app.add_subcommand("bloch", "Bloch-ball point cloud for a qubit witness (CSV)");
  bloch->add_option("--K", bk)->required();
  bloch->add_option("--a", ba)->required();
  bloch->add_option("--b", bb)->required();
  bloch->add_option("--c", bc)->required();
  bloch->add_option("--grid", grid)->required();
  bloch->add_option("--out", bloch_out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*gen) {
      out << run_gen(g).dump() << '\n';
      return kExitOk;
    }
    if (*detect) {
      io::FamilyDocument fd = io::load_witnesses(io::read_json_file(witness_file));
      const DensityMatrix rho = io::state_from_json(io::read_json_file(state_file));
      json reports = json::array();
      bool any = false;
      for (auto& member : fd.members) {
        const Witness w = detect_eps ? member.witness.with_detect_eps(*detect_eps) : member.witness;
        if (w.dim() != rho.dim()) {
          throw Error(ErrorKind::DimensionMismatch, "witness and state dimensions differ");
        }
        const DetectionReport r = evaluate(w, rho);
        any = any || r.verdict == Verdict::Detected;
        reports.push_back(io::to_json(r, w.detect_eps()));
      }
      if (fd.members.size() == 1) {
        out << reports.front().dump(2) << '\n';
      } else {
        out << json{{"family", fd.label},
                    {"reports", reports},
                    {"verdict", any ? "Detected" : "NotDetected"}}
                   .dump(2)
            << '\n';
      }
      return kExitOk;
    }
    if (*oracle) {
      const DensityMatrix rho = io::state_from_json(io::read_json_file(oracle_state));
      out << json{{"l1_coherence", l1_coherence(rho)}}.dump(2) << '\n';
      return kExitOk;
    }
    if (*verify) {
      require(vd >= 2, "--d: must be >= 2");
      require(vopts.coherence_threshold >= 0.0, "--threshold: must be >= 0");
      const WitnessFamily family =
          family_file.empty() ? finite_family(vd, vk)
                              : io::load_witnesses(io::read_json_file(family_file)).family();
      const CoverageReport rep = verify_coverage(family, vd, samples, Seed{vseed}, vopts);
      out << io::to_json(rep).dump(2) << '\n';
      return rep.pass ? kExitOk : kExitVerifyFail;
    }
    if (*bloch) {
      if (bloch_out.empty()) {
        io::write_bloch_csv(out, bk, ba, bb, bc, grid);
      } else {
        std::ofstream file(bloch_out, std::ios::binary);
        require(static_cast<bool>(file), bloch_out + ": cannot open file for writing");
        io::write_bloch_csv(file, bk, ba, bb, bc, grid);
        require(static_cast<bool>(file), bloch_out + ": write failed");
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace cohwit::cli
