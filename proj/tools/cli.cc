// Copyright 2026 The modsym Authors.
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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "modsym/astrong.h"
#include "modsym/circuit.h"
#include "modsym/cover2d.h"
#include "modsym/coverkd.h"
#include "modsym/errors.h"
#include "modsym/serialize.h"

namespace modsym::cli {
namespace {

using nlohmann::json;

// Carries an exit code out of a command.
struct Failure {
  int code;
  std::string message;
};

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Failure{kUsage, "cannot open '" + path + "' for writing"};
  f << contents;
  if (!f) throw Failure{kUsage, "write to '" + path + "' failed"};
}

json read_json(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Failure{kUsage, "cannot read '" + path + "'"};
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw Failure{kUsage, "'" + path + "' is not valid JSON: " + e.what()};
  }
}

CoverFile read_cover(const std::string& path) {
  try {
    return cover_from_json(read_json(path));
  } catch (const SchemaError& e) {
    throw Failure{kUsage, "'" + path + "': " + e.what()};
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsage, "'" + path + "': " + e.what()};
  }
}

std::string join(const std::vector<Residue>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s.empty() ? "0" : s;
}

// gcd(m, k!) = 1 exactly when every prime factor of m exceeds k.
bool factorial_invertible(const Modulus& mod, std::uint32_t k) {
  return std::all_of(mod.factors().begin(), mod.factors().end(),
                     [k](const PrimePower& pp) { return pp.p > k; });
}

void check_n(std::uint32_t n, const RunConfig& cfg) {
  if (n < 2) throw Failure{kUsage, "n must be at least 2"};
  if (cfg.poly == "sk" && n < cfg.k) throw Failure{kUsage, "n must be at least k"};
}

struct Built {
  json cover;
  SigmaPiSigmaCircuit circuit;
  std::size_t initial_items = 0;
  std::size_t items = 0;
  std::uint64_t repetition_count = 0;
  SymmetricPolynomial f;
  std::string shape;  // "N=8 g=3" or "u=12 b=6"
};

Built build_one(const RunConfig& cfg, std::uint32_t n, const Modulus& mod) {
  check_n(n, cfg);
  if (cfg.poly == "s2") {
    S2Construction s = build_s2_cover(n, mod);
    json meta = meta_for(s);
    meta["seed"] = cfg.seed;
    return Built{cover_to_json(s.cover, meta), from_cover2d(s.cover),
                 s.initial.size(), s.cover.size(),
                 s.cover.repetition_count(), s.f,
                 "N=" + std::to_string(s.scheme.base) +
                     " g=" + std::to_string(s.scheme.digits)};
  }
  HashFamilyOptions options;
  options.strategy = parse_hash_strategy(cfg.strategy);
  options.seed = cfg.seed;
  if (cfg.max_rows) options.max_rows = cfg.max_rows;
  SkConstruction s = build_sk_cover(n, cfg.k, mod, cfg.b, options);
  return Built{cover_to_json(s.cover, meta_for(s, options)),
               from_coverkd(s.cover), s.initial.size(), s.cover.size(),
               s.cover.repetition_count(), s.f,
               "u=" + std::to_string(s.hash.u()) +
                   " b=" + std::to_string(s.hash.b)};
}

std::string default_circuit_path(const std::string& out) {
  const std::string ext = ".json";
  if (out.size() > ext.size() &&
      out.compare(out.size() - ext.size(), ext.size(), ext) == 0) {
    return out.substr(0, out.size() - ext.size()) + ".circuit.json";
  }
  return out + ".circuit.json";
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n.size() != 1) throw Failure{kUsage, "build takes a single --n"};
  const Modulus mod(cfg.m);
  const std::uint32_t n = cfg.n.front();
  const std::uint32_t k = cfg.poly == "s2" ? 2 : cfg.k;
  Built b = build_one(cfg, n, mod);
  const CircuitSize cs = size(b.circuit);

  out << "build poly=" << cfg.poly << " n=" << n << " k=" << k
      << " m=" << mod.value() << " (" << mod.to_string() << ") seed=" << cfg.seed
      << '\n'
      << "shape " << b.shape << " initial_items=" << b.initial_items << '\n'
      << "bbr degree=" << b.f.degree() << " coeffs=" << join(b.f.coeffs())
      << '\n'
      << "cover items=" << b.items << " repetition_count=" << b.repetition_count
      << '\n'
      << "circuit gate_total=" << cs.gate_total << " products=" << cs.products
      << " graph_model_count=" << cs.graph_model_count << '\n';

  if (!cfg.out.empty()) {
    write_file(cfg.out, b.cover.dump(1) + "\n");
    out << "wrote " << cfg.out << '\n';
  }
  const std::string circuit_path =
      !cfg.circuit.empty() ? cfg.circuit
                           : (cfg.out.empty() ? "" : default_circuit_path(cfg.out));
  if (!circuit_path.empty()) {
    write_file(circuit_path, circuit_to_json(b.circuit).dump(1) + "\n");
    out << "wrote " << circuit_path << '\n';
  }
  return kOk;
}

// Prints the check and returns whether it passed; a blown expansion budget
// is reported and does not count as a failure.
bool astrong_section(const std::string& label, const SigmaPiSigmaCircuit& c,
                     const CoefficientMap& target, std::uint64_t budget,
                     std::ostream& out) {
  out << "target " << label << '\n';
  CoefficientMap expanded(c.vars);
  try {
    expanded = expand_coefficients(c, budget);
  } catch (const ResourceError& e) {
    out << "astrong SKIPPED " << e.what() << '\n';
    return true;
  }
  const AStrongReport r = check_astrong(expanded, target, c.mod);
  out << to_text(r, c.vars, c.mod);
  return r.pass();
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const CoverFile file = read_cover(cfg.in);
  const WeightedBoxCover& box = *file.box;
  const Modulus& mod = box.mod();
  const std::uint32_t n = box.n(), k = box.k();
  const std::uint64_t budget =
      cfg.expansion_budget ? cfg.expansion_budget : kDefaultExpansionBudget;

  out << "cover kind=" << file.kind << " n=" << n << " k=" << k
      << " m=" << mod.value() << " (" << mod.to_string()
      << ") items=" << box.size() << '\n';

  bool ok = true;
  SigmaPiSigmaCircuit circuit{mod, {}, {}};
  if (file.kind == "rect") {
    const S2Report r = verify_s2_properties(*file.rect);
    out << to_text(r);
    ok = r.pass();
    circuit = from_cover2d(*file.rect);
  } else {
    SkVerifyOptions options;
    if (cfg.exhaustive_cap) options.exhaustive_cap = cfg.exhaustive_cap;
    if (cfg.samples) options.sample_size = cfg.samples;
    options.seed = cfg.seed;
    const SkReport r = verify_sk_properties(box, options);
    out << to_text(r);
    ok = r.pass();
    circuit = from_coverkd(box);
  }

  ok &= astrong_section("ordered k=" + std::to_string(k), circuit,
                        target_coefficients(n, k, true), budget, out);
  if (factorial_invertible(mod, k)) {
    ok &= astrong_section("symmetric k=" + std::to_string(k) + " (identified)",
                          identify_variables_and_scale(circuit),
                          target_coefficients(n, k, false), budget, out);
  } else {
    out << "target symmetric k=" << k << " skipped: gcd(m, k!) != 1\n";
  }
  out << "verdict " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kVerificationFailed;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n.empty()) throw Failure{kUsage, "report needs at least one --n"};
  for (std::uint32_t n : cfg.n) check_n(n, cfg);
  const Modulus mod(cfg.m);
  const std::uint32_t k = cfg.poly == "s2" ? 2 : cfg.k;

  std::ostringstream csv;
  csv << "n,m,k,h,bbr_degree,distinct_items,graph_model_count,gate_total,"
         "baseline_n_minus_1,baseline_naive\n";
  for (std::uint32_t n : cfg.n) {
    Built b = build_one(cfg, n, mod);
    const CircuitSize cs = size(b.circuit);
    csv << n << ',' << mod.value() << ',' << k << ',' << b.initial_items << ','
        << b.f.degree() << ',' << b.items << ',' << cs.graph_model_count << ','
        << cs.gate_total << ',' << n - 1 << ',' << binom_saturating(n, k)
        << '\n';
  }
  out << csv.str()
      << "# baseline_n_minus_1: bipartite graphs needed to partition K_n "
         "exactly (Graham-Pollack)\n"
      << "# baseline_naive: C(n, k), one product per monomial\n"
      << "# the modular construction's size advantage is asymptotic; no "
         "inequality against either baseline is claimed at these n\n";
  if (!cfg.csv.empty()) {
    write_file(cfg.csv, csv.str());
    out << "wrote " << cfg.csv << '\n';
  }
  return kOk;
}

int cmd_export_dot(const RunConfig& cfg, std::ostream& out) {
  if (cfg.out_dir.empty()) throw Failure{kUsage, "export-dot needs --out-dir"};
  const CoverFile file = read_cover(cfg.in);
  if (!file.rect) {
    throw Failure{kUsage, "export-dot needs an s2 (rect) cover"};
  }
  const Modulus& mod = file.rect->mod();
  BipartiteExport e;
  try {
    e = make_bipartite_export(*file.rect);
  } catch (const UnsupportedModulusError&) {
    throw Failure{
        kUnsupportedModulus,
        "export-dot: m = " + std::to_string(mod.value()) +
            " is even. Each edge {i, j} is counted from both (i, j) and "
            "(j, i), so counts are halved with 2^-1 mod m, which needs odd "
            "m. How even m should be handled is an open question."};
  }

  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw Failure{kUsage, "cannot create '" + cfg.out_dir + "'"};
  const std::filesystem::path dir(cfg.out_dir);
  for (std::size_t i = 0; i < e.graphs.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "graph_%04zu", i + 1);
    write_file((dir / (std::string(name) + ".dot")).string(),
               to_dot(e.graphs[i], name));
  }
  write_file((dir / "edges.csv").string(), edges_to_csv(e, mod));

  const auto bad = std::count_if(e.edges.begin(), e.edges.end(),
                                 [](const EdgeCount& c) { return !c.factor; });
  std::uint64_t total = 0;
  for (const BipartiteGraph& g : e.graphs) total += g.repetition;
  out << "export graphs=" << e.graphs.size() << " repetitions=" << total
      << " edges=" << e.edges.size() << " uncovered=" << bad << '\n'
      << "wrote " << (dir / "edges.csv").string() << '\n';
  return bad == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Modular representations of elementary symmetric polynomials",
               "modsym"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "Build a cover and its circuit");
  auto* verify = app.add_subcommand("verify", "Verify a cover file");
  auto* report = app.add_subcommand("report", "Tabulate sizes over n");
  auto* dot = app.add_subcommand("export-dot", "Export an s2 cover as graphs");

  for (auto* sc : {build, report}) {
    sc->add_option("--poly", cfg.poly, "s2 or sk")
        ->check(CLI::IsMember({"s2", "sk"}));
    sc->add_option("--k", cfg.k, "degree for sk")->check(CLI::Range(2u, 64u));
    sc->add_option("--m", cfg.m, "modulus")->required();
    sc->add_option("--b", cfg.b, "hash alphabet size (default 2k)");
    sc->add_option("--strategy", cfg.strategy, "greedy or randomized")
        ->check(CLI::IsMember({"greedy", "randomized"}));
    sc->add_option("--seed", cfg.seed, "RNG seed");
    sc->add_option("--max-rows", cfg.max_rows, "hash family row cap");
  }
  build->add_option("--n", cfg.n, "number of variables")->required()->expected(1);
  build->add_option("--out", cfg.out, "cover JSON path");
  build->add_option("--circuit", cfg.circuit, "circuit JSON path");
  report->add_option("--n", cfg.n, "comma-separated n values")
      ->required()
      ->delimiter(',');
  report->add_option("--csv", cfg.csv, "CSV output path");

  verify->add_option("--in", cfg.in, "cover JSON path")->required();
  verify->add_option("--budget", cfg.expansion_budget,
                     "expansion term budget for the a-strong check");
  verify->add_option("--cap", cfg.exhaustive_cap,
                     "exhaustive tuple cap for box covers");
  verify->add_option("--samples", cfg.samples, "sample size above the cap");
  verify->add_option("--seed", cfg.seed, "sampling seed");

  dot->add_option("--in", cfg.in, "s2 cover JSON path")->required();
  dot->add_option("--out-dir", cfg.out_dir, "output directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "build") return cmd_build(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "report") return cmd_report(cfg, out);
    return cmd_export_dot(cfg, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const UnsupportedModulusError& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupportedModulus;
  } catch (const ConstructionFailedError& e) {
    err << "error: " << e.what() << '\n';
    return kConstructionFailed;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kConstructionFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConstructionFailed;
  }
}

}  // namespace modsym::cli
