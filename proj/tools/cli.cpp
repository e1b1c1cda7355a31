// Copyright 2026 The wlgraph Authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "wlgraph/certify.hpp"
#include "wlgraph/cfi.hpp"
#include "wlgraph/coherent.hpp"
#include "wlgraph/cws.hpp"
#include "wlgraph/errors.hpp"
#include "wlgraph/generators.hpp"
#include "wlgraph/oracle.hpp"
#include "wlgraph/refine.hpp"

namespace wlgraph::cli {

namespace {

struct RunConfig {
  int k = 2;
  std::string mode = "canonical";
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::uint64_t seed = 1;
  std::string output = "text";

  bool digest_only() const { return output == "digest-only"; }
  RefineOptions refine() const {
    RefineOptions r;
    r.threads = threads;
    return r;
  }
};

ColoredGraph load(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  return read_graph_file(path);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw InvalidArgument("not an integer: '" + s + "'");
  return v;
}

std::vector<std::pair<Vertex, Vertex>> parse_twists(const std::string& text) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, '-');
    if (parts.size() != 2) throw InvalidArgument("twist must look like u-v, got '" + item + "'");
    out.emplace_back(to_int(parts[0]), to_int(parts[1]));
  }
  return out;
}

void check_k(int k) {
  if (k < 1 || k > 4) throw InvalidArgument("k must be in [1, 4]");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weisfeiler-Leman refinement, certificates and CFI/Klein constructions", "wlg"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  RunConfig cfg;
  bool version = false;
  app.add_flag("--version", version, "Print version information");
  app.add_option("--threads", cfg.threads, "Worker threads inside engine calls")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized commands");
  app.add_option("--output", cfg.output, "Output style")
      ->check(CLI::IsMember({"text", "digest-only"}));

  std::string file, file2, twist, map_path, sizes = "20,40,80";
  int repeat = 3, cap = 0;
  double density = 0.5;
  bool as_graph = false;

  auto* refine_cmd = app.add_subcommand("refine", "Stable k-tuple coloring");
  refine_cmd->add_option("-k", cfg.k, "Dimension")->default_val(2);
  refine_cmd->add_option("graph", file, "WLG file ('-' for stdin)")->required();

  auto* certify_cmd = app.add_subcommand("certify", "Individualization-refinement certificate");
  certify_cmd->add_option("-k", cfg.k, "Dimension")->default_val(2);
  certify_cmd->add_option("--mode", cfg.mode, "fast, verified or canonical")
      ->check(CLI::IsMember({"fast", "verified", "canonical"}));
  certify_cmd->add_option("graph", file, "WLG file")->required();

  auto* iso_cmd = app.add_subcommand("iso", "Compare certificates (exit 0 same, 1 different)");
  iso_cmd->add_option("-k", cfg.k, "Dimension")->default_val(2);
  iso_cmd->add_option("--mode", cfg.mode, "fast, verified or canonical")
      ->check(CLI::IsMember({"fast", "verified", "canonical"}));
  iso_cmd->add_option("a", file, "First WLG file")->required();
  iso_cmd->add_option("b", file2, "Second WLG file")->required();

  auto* orbits_cmd = app.add_subcommand("orbits", "Exact orbit partition (oracle)");
  orbits_cmd->add_option("--cap", cap, "Vertex cap");
  orbits_cmd->add_option("graph", file, "WLG file")->required();

  auto* cfi_cmd = app.add_subcommand("cfi", "CFI gadget graph");
  cfi_cmd->add_option("--twist", twist, "Twisted edges, e.g. 0-1,2-3");
  cfi_cmd->add_option("--map", map_path, "Write the vertex map sidecar here");
  cfi_cmd->add_option("graph", file, "WLG file")->required();

  auto* klein_cmd = app.add_subcommand("klein", "Klein scheme of a cubic graph");
  klein_cmd->add_option("--twist", twist, "Fibres to twist, e.g. 0,2");
  klein_cmd->add_flag("--as-graph", as_graph, "Emit the colored di-graph instead");
  klein_cmd->add_option("graph,--graph", file, "WLG file")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Prime CWS pieces");
  decompose_cmd->add_option("-k", cfg.k, "Dimension")->default_val(2);
  decompose_cmd->add_option("graph", file, "WLG file")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Decomposition tree and digest");
  reduce_cmd->add_option("-k", cfg.k, "Dimension")->default_val(2);
  reduce_cmd->add_option("graph", file, "WLG file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force isomorphism or automorphism data");
  oracle_cmd->add_option("--cap", cap, "Vertex cap");
  oracle_cmd->add_option("graph", file, "WLG file")->required();
  oracle_cmd->add_option("other", file2, "Second WLG file for an isomorphism query");

  auto* bench_cmd = app.add_subcommand("bench", "Refinement timing on random graphs (CSV)");
  bench_cmd->add_option("-k", cfg.k, "Dimension")->default_val(2);
  bench_cmd->add_option("--sizes", sizes, "Comma-separated vertex counts");
  bench_cmd->add_option("--repeat", repeat, "Runs per size; the fastest is reported")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--density", density, "Edge probability")->check(CLI::Range(0.0, 1.0));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (version) {
    out << "wlg " << kVersion << " (engine " << kFormatVersion << ", wlg format "
        << kFormatVersion << ", scheme format " << kFormatVersion << ")\n";
    return 0;
  }

  try {
    check_k(cfg.k);
    if (refine_cmd->parsed()) {
      const ColoredGraph g = load(file);
      const TupleColoring tc = refine(g, cfg.k, cfg.refine());
      if (cfg.digest_only()) {
        out << to_hex(invariant_digest(tc)) << "\n";
      } else {
        out << "# k " << tc.k << " n " << tc.n << " rounds " << tc.rounds << " classes "
            << tc.num_colors << "\n";
        out << export_coloring(tc);
      }
    } else if (certify_cmd->parsed()) {
      CertifyOptions opts;
      opts.mode = parse_mode(cfg.mode);
      opts.refine = cfg.refine();
      const Certificate c = certify(load(file), cfg.k, opts);
      out << c.hex() << "\n";
      if (!cfg.digest_only()) out << c.trace_text();
    } else if (iso_cmd->parsed()) {
      CertifyOptions opts;
      opts.mode = parse_mode(cfg.mode);
      opts.refine = cfg.refine();
      const Certificate a = certify(load(file), cfg.k, opts);
      const Certificate b = certify(load(file2), cfg.k, opts);
      const bool same = a.digest == b.digest;
      if (cfg.digest_only()) {
        out << a.hex() << "\n" << b.hex() << "\n";
      } else {
        out << (same ? "same" : "different") << "\n" << a.hex() << "\n" << b.hex() << "\n";
      }
      return same ? 0 : 1;
    } else if (orbits_cmd->parsed()) {
      for (const auto& orbit : orbits_oracle(load(file), cap)) {
        for (std::size_t i = 0; i < orbit.size(); ++i) out << (i ? " " : "") << orbit[i];
        out << "\n";
      }
    } else if (cfi_cmd->parsed()) {
      const auto twists = parse_twists(twist);
      const CfiGraph c = cfi_build(load(file), twists);
      out << serialize(c.graph);
      if (!map_path.empty()) {
        std::ofstream m(map_path);
        if (!m) throw Error("cannot write " + map_path);
        m << c.map.sidecar();
      }
    } else if (klein_cmd->parsed()) {
      const ColoredGraph g = load(file);
      CoherentConfig c = klein_scheme(g);
      for (const auto& f : split(twist, ',')) c = psi_twist(c, to_int(f));
      out << (as_graph ? serialize(scheme_graph(c, g)) : serialize_scheme(c));
    } else if (decompose_cmd->parsed()) {
      const ColoredGraph g = load(file);
      const auto pieces = decompose(g, cfg.k, cfg.refine());
      for (const CWSRecord& r : pieces) {
        out << (r.prime ? "prime" : "cws");
        for (Vertex v : r.vertices) out << " " << v;
        out << "\n";
      }
      if (pieces.empty()) out << "# no prime pieces\n";
    } else if (reduce_cmd->parsed()) {
      ReduceOptions opts;
      opts.k = cfg.k;
      opts.refine = cfg.refine();
      const DecompositionTree t = reduce(load(file), opts);
      out << (cfg.digest_only() ? to_hex(t.digest) + "\n" : t.text());
    } else if (oracle_cmd->parsed()) {
      const ColoredGraph g = load(file);
      if (!file2.empty()) {
        const auto map = iso_oracle(g, load(file2), cap);
        if (!map) {
          out << "non-isomorphic\n";
          return 1;
        }
        out << "isomorphic";
        for (Vertex v : *map) out << " " << v;
        out << "\n";
      } else {
        out << "aut-order " << aut_order_oracle(g, cap) << "\n";
        for (const auto& orbit : orbits_oracle(g, cap)) {
          out << "orbit";
          for (Vertex v : orbit) out << " " << v;
          out << "\n";
        }
      }
    } else if (bench_cmd->parsed()) {
      RefineOptions single;
      single.threads = 1;
      out << "n,k,rounds,seconds\n";
      for (const auto& s : split(sizes, ',')) {
        const int n = to_int(s);
        const ColoredGraph g = gen::random_graph(n, density, cfg.seed + n);
        double best = 1e300;
        int rounds = 0;
        for (int r = 0; r < repeat; ++r) {
          const auto t0 = std::chrono::steady_clock::now();
          rounds = refine(g, cfg.k, single).rounds;
          const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
          best = std::min(best, dt.count());
        }
        out << n << "," << cfg.k << "," << rounds << "," << best << "\n";
      }
    } else {
      out << app.help();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace wlgraph::cli
