// Copyright 2026 The genrig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genrig/complex_io.hpp"
#include "genrig/generators.hpp"
#include "genrig/harness.hpp"
#include "genrig/rigidity.hpp"

namespace {

using namespace genrig;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

SimplicialComplex load(const std::string& path) {
  if (path.empty() || path == "-") return read_facet_list(std::cin);
  return read_facet_list_file(path);
}

void emit(const SimplicialComplex& c, const std::string& path) {
  if (path.empty() || path == "-") {
    write_facet_list(std::cout, c);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  write_facet_list(out, c);
}

int as_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput(std::string("expected an integer for ") + what + ", got '" + s + "'");
}

SimplicialComplex generate(const std::string& family,
                           const std::vector<std::string>& params, Seed seed) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw InvalidInput("gen " + family + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (family == "simplex") {
    need(1);
    return boundary_simplex(as_int(params[0], "d"));
  }
  if (family == "cross-polytope") {
    need(1);
    return cross_polytope(as_int(params[0], "d"));
  }
  if (family == "join-spheres") {
    need(2);
    return join_spheres(as_int(params[0], "p"), as_int(params[1], "q"));
  }
  if (family == "join-simplex-cycle") {
    need(2);
    return join_simplex_cycle(as_int(params[0], "d"), as_int(params[1], "k"));
  }
  if (family == "cyclic") {
    need(2);
    return cyclic_polytope_boundary(as_int(params[0], "n"), as_int(params[1], "d"));
  }
  if (family == "stacked") {
    // k stackings of ∂Δ^d, each over the most recently created facet.
    need(2);
    const int d = as_int(params[0], "d");
    const int k = as_int(params[1], "k");
    SimplicialComplex c = boundary_simplex(d);
    for (int i = 0; i < k; ++i) c = stack_over_facet(c, c.facets().back(), c.max_vertex() + 1);
    return c;
  }
  if (family == "flip-walk") {
    // Last prime complex of a walk started at the cross-polytope.
    need(2);
    const int d = as_int(params[0], "d");
    FlipWalkOptions options;
    options.keep_prime = true;
    const auto walk = random_flip_walk(cross_polytope(d),
                                       static_cast<std::size_t>(as_int(params[1], "steps")),
                                       seed, options);
    return walk.empty() ? cross_polytope(d) : walk.back();
  }
  throw InvalidInput("unknown family '" + family + "'");
}

Edge parse_edge_arg(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw InvalidInput("edge must be given as a,b");
  return Edge(as_int(s.substr(0, comma), "edge"), as_int(s.substr(comma + 1), "edge"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic rigidity of simplicial sphere graphs"};
  app.require_subcommand(1);

  std::string input, output;
  Seed seed = 0;
  bool seed_given = false;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", input, "facet-list file (default: stdin)");
  };

  auto* gen = app.add_subcommand("gen", "generate a sphere family as a facet list");
  std::string family;
  std::vector<std::string> params;
  gen->add_option("family", family,
                  "simplex | cross-polytope | join-spheres | join-simplex-cycle | "
                  "cyclic | stacked | flip-walk")
      ->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("-o,--output", output, "output file (default: stdout)");
  gen->add_option("--seed", seed, "seed for flip-walk")->each([&](const std::string&) {
    seed_given = true;
  });

  auto* g2cmd = app.add_subcommand("g2", "print g2 = f1 - d f0 + C(d+1, 2)");
  int dim = 0;
  add_input(g2cmd);
  g2cmd->add_option("--dim", dim, "d (default: dim + 1)");

  auto* primecmd = app.add_subcommand("prime", "report whether the complex is prime");
  add_input(primecmd);

  auto* missing = app.add_subcommand("missing-faces", "list minimal non-faces");
  add_input(missing);

  auto* contract = app.add_subcommand("contract", "contract the edge a b");
  Vertex a = 0, b = 0;
  Vertex label = -1;
  contract->add_option("a", a)->required();
  contract->add_option("b", b)->required();
  contract->add_option("--label", label, "label of the merged vertex (default: max + 1)");
  add_input(contract);
  contract->add_option("-o,--output", output, "output file (default: stdout)");

  auto* rigid = app.add_subcommand("rigid", "decide generic d-rigidity of the graph");
  int trials = 3;
  std::string minus_edge;
  add_input(rigid);
  rigid->add_option("--dim", dim, "d")->required();
  rigid->add_option("--minus-edge", minus_edge, "delete edge a,b first");
  rigid->add_option("--trials", trials, "random embeddings");
  rigid->add_option("--seed", seed, "seed")->each([&](const std::string&) { seed_given = true; });

  auto* decompose = app.add_subcommand("decompose", "split into prime factors");
  add_input(decompose);
  decompose->add_option("--dim", dim, "d (default: dim + 1)");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string config_path, machine_path;
  verify->add_option("--config", config_path, "key=value config file");
  verify->add_option("--machine", machine_path,
                     "write the tab-separated report here ('-' for stdout)");
  verify->add_option("--seed", seed, "override the config seed")->each([&](const std::string&) {
    seed_given = true;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const Seed base_seed = seed_given ? seed : default_seed();
    if (gen->parsed()) {
      emit(generate(family, params, base_seed), output);
      return kExitPass;
    }
    if (g2cmd->parsed()) {
      const auto c = load(input);
      std::cout << g2(c, dim ? dim : c.dim() + 1) << '\n';
      return kExitPass;
    }
    if (primecmd->parsed()) {
      const auto c = load(input);
      std::cout << (is_prime(c, c.dim() + 1) ? "prime" : "not prime") << '\n';
      return kExitPass;
    }
    if (missing->parsed()) {
      for (const Face& f : missing_faces(load(input))) {
        for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? " " : "") << f[i];
        std::cout << '\n';
      }
      return kExitPass;
    }
    if (contract->parsed()) {
      const auto c = load(input);
      emit(contract_edge(c, Face{a, b}, label >= 0 ? label : c.max_vertex() + 1), output);
      return kExitPass;
    }
    if (rigid->parsed()) {
      const auto c = load(input);
      Graph g = graph_of(c);
      if (!minus_edge.empty()) g = remove_edge(g, parse_edge_arg(minus_edge));
      const auto v = decide_rigidity(g, dim, trials, base_seed);
      std::cout << "rank " << v.rank << "\ntarget " << v.target_rank << "\nstress_dim "
                << v.stress_dim << "\ntrials " << v.trials << "\nrigid "
                << (v.is_rigid ? "yes" : "no") << '\n';
      return v.is_rigid ? kExitPass : kExitFail;
    }
    if (decompose->parsed()) {
      const auto c = load(input);
      const auto factors = prime_factors(c, dim ? dim : c.dim() + 1);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        std::cout << "# factor " << i + 1 << " of " << factors.size() << '\n';
        write_facet_list(std::cout, factors[i]);
      }
      return kExitPass;
    }
    if (verify->parsed()) {
      SuiteConfig config;
      config.seed = base_seed;
      if (!config_path.empty()) config = read_config_file(config_path, base_seed);
      if (seed_given) config.seed = seed;
      validate(config);
      const Report report = run_suite(config);
      if (machine_path == "-") {
        std::cout << machine_format(report);
      } else {
        std::cout << human_format(report);
        if (!machine_path.empty()) {
          std::ofstream out(machine_path);
          if (!out) throw InvalidInput("cannot write " + machine_path);
          out << machine_format(report);
        }
      }
      return report.ok() ? kExitPass : kExitFail;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
