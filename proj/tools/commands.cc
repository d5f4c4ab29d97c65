// Copyright 2026 The CICI Authors.
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

#include "commands.h"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "cici/bounds.h"
#include "cici/independence.h"
#include "cici/inference.h"
#include "cici/json_io.h"
#include "cici/synergy.h"

namespace cici::cli {
namespace {

// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string Num(double x) { return fmt::format("{:.12g}", x); }

const char* YesNo(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- analyze

struct AnalyzeOptions {
  std::string path;
  double tol = kDefaultDetTolerance;
  bool json = false;
};

int Analyze(const AnalyzeOptions& opt, std::ostream& out) {
  const GeneralLikelihoodMatrix general =
      ParseGeneralMatrix(std::string_view(ReadFile(opt.path)));
  if (general.rows() != 2 || general.cols() != 2) {
    const bool rank_one = is_cici(general, opt.tol);
    if (opt.json) {
      out << nlohmann::json{{"state", EvidenceStateName(general.state())},
                            {"rows", general.rows()},
                            {"cols", general.cols()},
                            {"cici", rank_one}}
                 .dump(2)
          << '\n';
    } else {
      out << fmt::format("{}x{} grid at e{}: CICI (rank one): {}\n",
                         general.rows(), general.cols(),
                         general.state() == EvidenceState::kPos ? "+" : "-",
                         YesNo(rank_one));
    }
    return kSuccess;
  }

  const LikelihoodMatrix input = ToLikelihoodMatrix(general);
  const LikelihoodMatrix m_pos =
      input.state() == EvidenceState::kPos ? input : input.complement();
  const LikelihoodMatrix m_neg = m_pos.complement();
  const SynergyReport report = synergy_report(m_pos);
  const bool cici_pos = is_cici(m_pos, opt.tol);
  const bool cici_neg = is_cici(m_neg, opt.tol);
  const bool double_cici = is_degenerate_double_cici(m_pos, opt.tol);

  // The table that carries the rank-one structure, e- by convention.
  std::optional<LikelihoodMatrix> cici_table;
  if (cici_neg) {
    cici_table = m_neg;
  } else if (cici_pos) {
    cici_table = m_pos;
  }
  std::optional<SingularFactorization> factors;
  std::optional<CanonicalForm> canonical;
  if (cici_table) {
    canonical = canonicalize(*cici_table, opt.tol);
    try {
      factors = factorize(*cici_table, opt.tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegenerateEntries) throw;
    }
  }

  if (opt.json) {
    nlohmann::json doc;
    doc["input"] = ToJson(input);
    doc["synergy"] = ToJson(report);
    doc["cici_pos"] = cici_pos;
    doc["cici_neg"] = cici_neg;
    doc["degenerate_double_cici"] = double_cici;
    doc["factorization"] = nullptr;
    doc["canonical"] = nullptr;
    if (factors) {
      doc["factorization"] = ToJson(*factors);
      doc["factorization"]["state"] = EvidenceStateName(cici_table->state());
    }
    if (canonical) {
      doc["canonical"] = {
          {"class", static_cast<int>(canonical->swap_class)},
          {"name", SwapClassName(canonical->swap_class)},
          {"rows_swapped", canonical->rows_swapped},
          {"cols_swapped", canonical->cols_swapped},
          {"matrix", ToJson(canonical->canonical)}};
    }
    out << doc.dump(2) << '\n';
    return kSuccess;
  }

  out << fmt::format("relation: {}\n", RelationName(report.classification));
  out << fmt::format("det e+: {}\n", Num(report.det_pos));
  out << fmt::format("det e-: {}\n", Num(report.det_neg));
  out << fmt::format("Y e+: {}\n", Num(report.y_pos));
  out << fmt::format("Y e-: {}\n", Num(report.y_neg));
  out << fmt::format("CICI at e+: {}\n", YesNo(cici_pos));
  out << fmt::format("CICI at e-: {}\n", YesNo(cici_neg));
  if (!cici_table) {
    out << "not CICI\n";
  }
  if (factors) {
    out << fmt::format("factorization (e{}): a={} b={} c={}\n",
                       cici_table->state() == EvidenceState::kPos ? "+" : "-",
                       Num(factors->a), Num(factors->b), Num(factors->c));
  } else if (cici_table) {
    out << "factorization: unavailable (zero entries)\n";
  }
  if (canonical) {
    out << fmt::format("class {} ({})\n",
                       static_cast<int>(canonical->swap_class),
                       SwapClassName(canonical->swap_class));
  }
  out << fmt::format("degenerate double CICI: {}\n", YesNo(double_cici));
  return kSuccess;
}

// ---------------------------------------------------------------- surface

struct SurfaceOptions {
  std::optional<double> k, w, q0, q1, q2;
  std::optional<std::string> matrix;
  double prior_b = 0.5;
  std::size_t grid = 41;
  std::string out_path;
  std::optional<std::string> edge;
};

LikelihoodMatrix SurfaceMatrix(const SurfaceOptions& opt) {
  const bool symmetric = opt.k || opt.w;
  const bool noisy = opt.q0 || opt.q1 || opt.q2;
  const bool file = opt.matrix.has_value();
  if (symmetric + noisy + file != 1) {
    throw UsageError(
        "give exactly one matrix source: --k/--w, --q0/--q1/--q2, or --matrix");
  }
  if (symmetric) {
    if (!opt.k || !opt.w) throw UsageError("--k and --w go together");
    return factored_symmetric_matrix({*opt.k, *opt.w}).complement();
  }
  if (noisy) {
    if (!opt.q0 || !opt.q1 || !opt.q2) {
      throw UsageError("--q0, --q1 and --q2 go together");
    }
    return noisy_or_matrix({*opt.q0, *opt.q1, *opt.q2});
  }
  const LikelihoodMatrix m = ParseMatrix(std::string_view(ReadFile(*opt.matrix)));
  return m.state() == EvidenceState::kPos ? m : m.complement();
}

int Surface(const SurfaceOptions& opt, std::ostream& out) {
  const LikelihoodMatrix m_pos = SurfaceMatrix(opt);
  const Probability b(opt.prior_b);
  if (opt.edge && *opt.edge != "f=1") {
    throw UsageError("--edge only supports f=1");
  }
  std::ostringstream csv;
  if (opt.edge) {
    WriteExclusionCsv(csv, exclusion_curve(m_pos, b, opt.grid));
  } else {
    WriteSurfaceCsv(csv, belief_surface(m_pos, b, opt.grid));
  }
  if (opt.out_path.empty() || opt.out_path == "-") {
    out << csv.str();
    return kSuccess;
  }
  std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << csv.str())) {
    throw UsageError("cannot write " + opt.out_path);
  }
  return kSuccess;
}

// ---------------------------------------------------------------- convert

struct ConvertOptions {
  std::string from;
  std::string to;
  std::optional<double> q0, q1, q2, a, b, c, k, w;
};

double Need(const std::optional<double>& v, const char* flag,
            const std::string& model) {
  if (!v) throw UsageError(fmt::format("--from {} needs {}", model, flag));
  return *v;
}

int Convert(const ConvertOptions& opt, std::ostream& out) {
  NoisyOrParams hub(1, 1, 1);
  std::optional<SingularFactorization> singular;
  if (opt.from == "noisy-or") {
    hub = NoisyOrParams(Need(opt.q0, "--q0", opt.from),
                        Need(opt.q1, "--q1", opt.from),
                        Need(opt.q2, "--q2", opt.from));
  } else if (opt.from == "singular") {
    singular = SingularFactorization(Need(opt.a, "--a", opt.from),
                                     Need(opt.b, "--b", opt.from),
                                     Need(opt.c, "--c", opt.from));
    if (opt.to == "singular") {
      out << ToJson(*singular).dump() << '\n';
      return kSuccess;
    }
    hub = singular_to_noisy_or(*singular);
  } else {
    hub = symmetric_to_noisy_or(FactoredSymmetric(
        Need(opt.k, "--k", opt.from), Need(opt.w, "--w", opt.from)));
  }

  nlohmann::json doc;
  if (opt.to == "noisy-or") {
    doc = ToJson(hub);
  } else if (opt.to == "singular") {
    doc = ToJson(noisy_or_to_singular(hub));
  } else {
    doc = ToJson(noisy_or_to_symmetric(hub));
  }
  out << doc.dump() << '\n';
  return kSuccess;
}

int ExitFor(ErrorCode code) {
  return code == ErrorCode::kParseError ? kParseFailure : kDomainFailure;
}

}  // namespace

int RunVerify(const verify::Config& config, bool json, std::ostream& out) {
  const auto results = verify::RunAll(config);
  bool ok = true;
  if (json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : results) {
      ok = ok && r.passed;
      doc.push_back({{"suite", r.name},
                     {"passed", r.passed},
                     {"checks", r.checks},
                     {"counterexample", r.counterexample}});
    }
    out << nlohmann::json{{"seed", config.seed},
                          {"samples", config.samples},
                          {"passed", ok},
                          {"suites", doc}}
               .dump(2)
        << '\n';
  } else {
    ok = verify::PrintSummary(out, results);
  }
  return ok ? kSuccess : kVerificationFailure;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Conditional inter-causal independence toolkit"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  AnalyzeOptions analyze;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Synergy and CICI report for a matrix file");
  analyze_cmd->add_option("input", analyze.path, "Matrix JSON file")
      ->required();
  analyze_cmd->add_option("--tol", analyze.tol, "Determinant tolerance")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--json", json, "Machine-readable output");

  SurfaceOptions surface;
  auto* surface_cmd =
      app.add_subcommand("surface", "Belief surface CSV for p{B}");
  surface_cmd->add_option("--k", surface.k, "Symmetric model k");
  surface_cmd->add_option("--w", surface.w, "Symmetric model w");
  surface_cmd->add_option("--q0", surface.q0, "Noisy-or leak complement");
  surface_cmd->add_option("--q1", surface.q1, "Noisy-or complement for B");
  surface_cmd->add_option("--q2", surface.q2, "Noisy-or complement for A");
  surface_cmd->add_option("--matrix", surface.matrix, "Matrix JSON file");
  surface_cmd->add_option("--prior-b", surface.prior_b, "pi(b+)");
  surface_cmd->add_option("--grid", surface.grid, "Points per axis")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  surface_cmd->add_option("--out", surface.out_path, "Output CSV (- = stdout)");
  surface_cmd->add_option("--edge", surface.edge,
                          "Emit the f=1 exclusion curve instead");

  verify::Config verify_config;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the property verification suites");
  verify_cmd->add_option("--seed", verify_config.seed, "RNG seed");
  verify_cmd->add_option("--samples", verify_config.samples,
                         "Random draws per suite")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", json, "Machine-readable output");

  ConvertOptions convert;
  auto* convert_cmd =
      app.add_subcommand("convert", "Convert between CICI parameterizations");
  const std::vector<std::string> models{"noisy-or", "singular", "symmetric"};
  convert_cmd->add_option("--from", convert.from)
      ->required()
      ->check(CLI::IsMember(models));
  convert_cmd->add_option("--to", convert.to)
      ->required()
      ->check(CLI::IsMember(models));
  convert_cmd->add_option("--q0", convert.q0);
  convert_cmd->add_option("--q1", convert.q1);
  convert_cmd->add_option("--q2", convert.q2);
  convert_cmd->add_option("--a", convert.a);
  convert_cmd->add_option("--b", convert.b);
  convert_cmd->add_option("--c", convert.c);
  convert_cmd->add_option("--k", convert.k);
  convert_cmd->add_option("--w", convert.w);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageFailure;
  }

  try {
    if (*analyze_cmd) {
      analyze.json = json;
      return Analyze(analyze, out);
    }
    if (*surface_cmd) return Surface(surface, out);
    if (*verify_cmd) return RunVerify(verify_config, json, out);
    return Convert(convert, out);
  } catch (const OutOfNoisyOrRange& e) {
    err << "error: OutOfNoisyOrRange (" << SwapClassName(e.swap_class())
        << " class): " << e.what() << '\n';
    return kDomainFailure;
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return ExitFor(e.code());
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageFailure;
  }
}

}  // namespace cici::cli
