// Copyright 2026 The Choilab Authors
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
//
// choilab CLI: convert between map/state representations, check predicates,
// generate seeded random maps and run the verification suites.
//
// Exit codes: 0 pass/holds, 1 predicate or suite failure, 2 usage/parse,
// 3 dimension mismatch, 4 variant-tag mismatch. All machine-readable output
// is a single JSON document on stdout; diagnostics go to stderr.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "choilab/io.hpp"

namespace {

using namespace choilab;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CHOILAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw parse_error("CHOILAB_SEED is not a valid unsigned integer");
    }
  }
  return 0;
}

std::optional<Variant> parse_variant(const std::string& s) {
  for (Variant v : {Variant::J, Variant::C, Variant::CJstar, Variant::JstarC})
    if (s == variant_name(v)) return v;
  return std::nullopt;
}

struct ConvertArgs {
  std::string in, out, to;
  std::string from;  // optional cross-check against the file's own tag
};

int cmd_convert(const ConvertArgs& args) {
  const io::json doc = io::load_json_file(args.in);
  const io::FileKind kind = io::peek_kind(doc);

  QuantumMap phi;
  if (kind == io::FileKind::Map) {
    phi = io::map_from_json(doc);
    if (!args.from.empty() && args.from != doc["repr"].get<std::string>())
      throw parse_error("--from does not match the file's repr \"" +
                        doc["repr"].get<std::string>() + "\"");
  } else {
    const DualityState rho = io::state_from_json(doc);
    if (!args.from.empty() && args.from != variant_name(rho.variant))
      throw variant_error("--from does not match the file's variant tag " +
                          std::string(variant_name(rho.variant)));
    if (auto target = parse_variant(args.to)) {
      io::save_json_file(args.out, io::state_to_json(to_variant(rho, *target)));
      return 0;
    }
    phi = j_inverse(to_variant(rho, Variant::J));
  }

  if (auto target = parse_variant(args.to)) {
    const DualityState rho = to_variant(j_forward(phi), *target);
    io::save_json_file(args.out, io::state_to_json(rho));
    return 0;
  }
  if (args.to == "transfer") {
    io::save_json_file(args.out, io::map_to_json(phi, /*prefer_kraus=*/false));
    return 0;
  }
  if (args.to == "kraus") {
    if (!phi.kraus) phi.kraus = kraus_factorization(phi);
    io::save_json_file(args.out, io::map_to_json(phi, /*prefer_kraus=*/true));
    return 0;
  }
  throw parse_error("--to must be one of kraus, transfer, J, C, CJstar, JstarC");
}

struct CheckArgs {
  std::string in, predicate;
  double tol = -1.0;  // negative means predicate default
  PoptConfig popt;
};

int cmd_check(const CheckArgs& args) {
  const io::json doc = io::load_json_file(args.in);
  const io::FileKind kind = io::peek_kind(doc);
  const double tol = args.tol;
  PredicateReport report;

  if (kind == io::FileKind::Map) {
    const QuantumMap phi = io::map_from_json(doc);
    if (args.predicate == "cp")
      report = is_cp(phi, tol > 0 ? tol : kPsdFloorTol);
    else if (args.predicate == "co-cp")
      report = is_co_cp(phi, tol > 0 ? tol : kPsdFloorTol);
    else if (args.predicate == "trace-preserving")
      report = is_trace_preserving(phi, tol > 0 ? tol : 1e-9);
    else if (args.predicate == "hermitian")
      report = is_hermitian(j_forward(phi).matrix, tol > 0 ? tol : kHermTol);
    else if (args.predicate == "popt")
      report = is_popt(j_forward(phi), args.popt);
    else
      throw parse_error("predicate \"" + args.predicate + "\" does not apply to a map file");
  } else {
    const DualityState rho = io::state_from_json(doc);
    if (args.predicate == "hermitian")
      report = is_hermitian(rho.matrix, tol > 0 ? tol : kHermTol);
    else if (args.predicate == "psd")
      report = is_psd(rho.matrix, tol > 0 ? tol : kPsdFloorTol);
    else if (args.predicate == "popt")
      report = is_popt(rho, args.popt);
    else if (args.predicate == "ppt")
      report = is_ppt_state(rho.matrix, rho.idx, tol > 0 ? tol : kPsdFloorTol);
    else
      throw parse_error("predicate \"" + args.predicate +
                        "\" does not apply to a state file");
  }

  std::cout << io::predicate_report_to_json(report, args.predicate).dump(2) << "\n";
  return report.verdict == Verdict::Holds ? 0 : 1;
}

struct GenerateArgs {
  std::string cls;
  int d_a = 2, d_b = 2;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out;
};

int cmd_generate(const GenerateArgs& args) {
  MapClass cls;
  if (args.cls == "arbitrary") cls = MapClass::Arbitrary;
  else if (args.cls == "herm-preserving") cls = MapClass::HermPreserving;
  else if (args.cls == "cp") cls = MapClass::CP;
  else if (args.cls == "co-cp") cls = MapClass::CoCP;
  else if (args.cls == "decomposable") cls = MapClass::Decomposable;
  else if (args.cls == "tp-cp") cls = MapClass::TracePreservingCP;
  else
    throw parse_error("unknown map class \"" + args.cls + "\"");

  const std::uint64_t seed = args.seed_set ? args.seed : default_seed();
  const QuantumMap phi = random_map(cls, args.d_a, args.d_b, seed);
  const io::json j = io::map_to_json(phi);
  if (args.out.empty())
    std::cout << j.dump(2) << "\n";
  else
    io::save_json_file(args.out, j);
  return 0;
}

struct VerifyArgs {
  std::string suites = "all";
  std::vector<std::string> dims;
  int trials = 100;
  std::uint64_t seed = 0;
  bool seed_set = false;
  double tol = kMatEqTol;
  std::string report_path;
  bool inject_corruption = false;
};

int cmd_verify(const VerifyArgs& args) {
  std::vector<SuiteId> ids;
  if (args.suites == "all") {
    ids = all_suites();
  } else {
    std::string rest = args.suites;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string name = rest.substr(0, comma);
      rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
      const auto id = suite_from_name(name);
      if (!id) throw parse_error("unknown suite \"" + name + "\"");
      ids.push_back(*id);
    }
    if (ids.empty()) throw parse_error("no suites selected");
  }

  TheoremSuite config;
  config.trials = args.trials;
  config.seed = args.seed_set ? args.seed : default_seed();
  config.tol = args.tol;
  config.inject_corruption = args.inject_corruption;
  config.dims.clear();
  for (const std::string& d : args.dims) {
    const auto comma = d.find(',');
    if (comma == std::string::npos) throw parse_error("--dims expects \"d_a,d_b\"");
    try {
      config.dims.emplace_back(std::stoi(d.substr(0, comma)), std::stoi(d.substr(comma + 1)));
    } catch (const std::exception&) {
      throw parse_error("--dims expects \"d_a,d_b\"");
    }
  }
  if (config.dims.empty()) config.dims = {{2, 2}};

  std::vector<SuiteResult> results;
  for (SuiteId id : ids) {
    config.id = id;
    results.push_back(run_suite(config));
    const SuiteResult& r = results.back();
    std::cerr << suite_name(id) << ": passed=" << r.passed << " failed=" << r.failed
              << "\n";
  }

  const io::json report = io::verify_report_to_json(results, config);
  std::cout << report.dump(2) << "\n";
  if (!args.report_path.empty()) io::save_json_file(args.report_path, report);

  for (const SuiteResult& r : results)
    if (r.failed > 0) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"choilab: channel-state duality toolkit"};
  app.require_subcommand(1);

  ConvertArgs conv;
  CLI::App* convert = app.add_subcommand(
      "convert", "Convert between map representations and state variants");
  convert->add_option("--in", conv.in, "input map or state file")->required();
  convert->add_option("--out", conv.out, "output file")->required();
  convert
      ->add_option("--to", conv.to,
                   "target: kraus | transfer | J | C | CJstar | JstarC")
      ->required();
  convert->add_option("--from", conv.from,
                      "declared source repr/variant; must match the file");

  CheckArgs chk;
  CLI::App* check = app.add_subcommand("check", "Run a predicate and report a witness");
  check->add_option("--in", chk.in, "input map or state file")->required();
  check
      ->add_option("--predicate", chk.predicate,
                   "hermitian | psd | popt | cp | co-cp | trace-preserving | ppt")
      ->required();
  check->add_option("--tol", chk.tol, "tolerance override");
  check->add_option("--restarts", chk.popt.restarts, "see-saw restarts (popt)");
  check->add_option("--max-iters", chk.popt.max_iters, "see-saw iteration cap (popt)");
  check->add_option("--eps", chk.popt.convergence_eps, "see-saw convergence eps (popt)");
  bool chk_seed_set = false;
  check->add_option("--seed", chk.popt.seed, "see-saw restart seed (popt)")
      ->each([&chk_seed_set](const std::string&) { chk_seed_set = true; });

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Draw a seeded random map");
  generate
      ->add_option("class", gen.cls,
                   "arbitrary | herm-preserving | cp | co-cp | decomposable | tp-cp")
      ->required();
  generate->add_option("d_a", gen.d_a, "input dimension")->required();
  generate->add_option("d_b", gen.d_b, "output dimension")->required();
  generate->add_option("seed", gen.seed, "seed (default: CHOILAB_SEED or 0)")
      ->each([&gen](const std::string&) { gen.seed_set = true; });
  generate->add_option("--seed", gen.seed, "seed (overrides the positional)")
      ->each([&gen](const std::string&) { gen.seed_set = true; });
  generate->add_option("--out", gen.out, "output file (default: stdout)");

  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("suites", ver.suites, "\"all\" or comma-separated suite names");
  verify->add_option("--dims", ver.dims, "dimension pair \"d_a,d_b\" (repeatable)");
  verify->add_option("--trials", ver.trials, "trials per dimension pair");
  verify->add_option("--seed", ver.seed, "master seed (default: CHOILAB_SEED or 0)")
      ->each([&ver](const std::string&) { ver.seed_set = true; });
  verify->add_option("--tol", ver.tol, "matrix-equality tolerance");
  verify->add_option("--report", ver.report_path, "also write the JSON report here");
  verify
      ->add_flag("--inject-corruption", ver.inject_corruption,
                 "test hook: corrupt one generator so suites must fail")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (convert->parsed()) return cmd_convert(conv);
    if (check->parsed()) {
      if (!chk_seed_set) chk.popt.seed = default_seed();
      return cmd_check(chk);
    }
    if (generate->parsed()) return cmd_generate(gen);
    if (verify->parsed()) return cmd_verify(ver);
  } catch (const dim_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const variant_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
