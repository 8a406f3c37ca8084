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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "genrig/certificate.hpp"
#include "genrig/generators.hpp"
#include "genrig/harness.hpp"
#include "genrig/rigidity.hpp"
#include "oracles.hpp"

using namespace genrig;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Sphere {
  std::string name;
  SimplicialComplex complex;
  int d;
};

// Suite corpus over every family plus the test corpus.
std::vector<Sphere> all_spheres() {
  SuiteConfig config;
  config.families = known_families();
  config.families.erase(std::find(config.families.begin(), config.families.end(), "negative-control"));
  config.d_min = 3;
  config.d_max = 7;
  std::vector<Sphere> out;
  for (auto& e : build_corpus(config)) out.push_back({e.name, e.complex, e.d});
  for (auto& s : testing_corpus::spheres()) out.push_back({s.name, s.complex, s.d});
  return out;
}

Outcome criterion1() {
  Outcome o;
  for (int d = 3; d <= 6; ++d) {
    const auto v = decide_rigidity(graph_of(boundary_simplex(d)), d);
    o.require(v.rank == (d + 1) * d / 2, "rank of simplex boundary, d=" + std::to_string(d));
    o.require(v.stress_dim == 0, "stress of simplex boundary, d=" + std::to_string(d));
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::vector<Sphere> list = {
      {"cross4", cross_polytope(4), 4},
      {"cross5", cross_polytope(5), 5},
      {"join22", join_spheres(2, 2), 4},
      {"join23", join_spheres(2, 3), 5},
      {"join33", join_spheres(3, 3), 6},
      {"jsc5_5", join_simplex_cycle(5, 5), 5},
      {"cyclic7_4", cyclic_polytope_boundary(7, 4), 4},
  };
  for (int k = 4; k <= 7; ++k) list.push_back({"jsc4_" + std::to_string(k), join_simplex_cycle(4, k), 4});
  const auto c8 = cyclic_polytope_boundary(8, 4);
  if (is_prime(c8, 4)) list.push_back({"cyclic8_4", c8, 4});

  // 20 distinct prime walk outputs with g2 > 0; ∂Δ^4 is the only prime
  // 3-sphere with g2 = 0 and falls outside the theorem's hypothesis.
  FlipWalkOptions options;
  options.keep_prime = true;
  std::vector<SimplicialComplex> walks;
  for (const auto& c : random_flip_walk(cross_polytope(4), 400, 20181103, options)) {
    if (walks.size() == 20) break;
    if (g2(c, 4) > 0 && std::find(walks.begin(), walks.end(), c) == walks.end()) walks.push_back(c);
  }
  o.require(walks.size() == 20, "fewer than 20 prime walk outputs");
  for (std::size_t i = 0; i < walks.size(); ++i) list.push_back({"walk" + std::to_string(i), walks[i], 4});

  std::size_t edges = 0;
  for (const auto& s : list) {
    const auto report = verify_minus_edge(s.complex, s.d, 3, 0, s.name);
    const long target = rigidity_target_rank(static_cast<long>(s.complex.num_vertices()), s.d);
    o.require(report.total() == graph_of(s.complex).num_edges(), s.name + " was gated");
    for (const auto& r : report.records) {
      o.require(r.verdict == Verdict::Pass && r.rank == target, r.instance);
      ++edges;
    }
  }
  o.detail = o.ok ? std::to_string(list.size()) + " spheres, " + std::to_string(edges) + " edges"
                  : o.detail;
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& [name, gamma] : {std::pair{"simplex4", boundary_simplex(4)},
                                    std::pair{"cross4", cross_polytope(4)}}) {
    const auto report = verify_negative_control(gamma, 4, 3, 0, name);
    const long f0 = static_cast<long>(gamma.num_vertices()) + 1;
    o.require(report.total() == 4, std::string(name) + ": expected 4 new edges");
    for (const auto& r : report.records)
      o.require(r.verdict == Verdict::Pass && r.rank == 4 * f0 - 10 - 1, r.instance);
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::set<long> seen;
  for (const auto& s : all_spheres()) {
    const long g = g2(s.complex, s.d);
    const long stress = stress_space_dim(graph_of(s.complex), s.d);
    o.require(stress == g, s.name + ": stress " + std::to_string(stress) + " vs g2 " + std::to_string(g));
    seen.insert(g);
  }
  for (long v : {0L, 1L, 2L, 3L, 5L}) o.require(seen.count(v) == 1, "g2 value missing: " + std::to_string(v));
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t qualifying = 0;
  for (const auto& [name, c] : {std::pair{"cross4", cross_polytope(4)},
                                std::pair{"jsc4_5", join_simplex_cycle(4, 5)}}) {
    std::size_t here = 0;
    const Graph g = graph_of(c);
    for (const auto& e : g.edges()) {
      const auto report = verify_contraction_reduction(c, e, 3, 0, name);
      for (const auto& r : report.records) o.require(r.verdict != Verdict::Fail, r.instance);
      if (report.records.front().verdict == Verdict::Pass) ++here;
    }
    o.require(here > 0, std::string(name) + ": no qualifying edge");
    qualifying += here;
  }
  if (o.ok) o.detail = std::to_string(qualifying) + " qualifying edges";
  return o;
}

Outcome criterion6() {
  Outcome o;
  Rng gen(2024);
  for (int i = 0; i < 50; ++i) {
    const int n = 5 + static_cast<int>(uniform_below(gen, 8));
    const double p = 0.45 + 0.5 * static_cast<double>(uniform_below(gen, 100)) / 100.0;
    std::bernoulli_distribution coin(p);
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int a = 1; a <= n; ++a) {
      vs.push_back(a);
      for (int b = a + 1; b <= n; ++b)
        if (coin(gen)) es.emplace_back(a, b);
    }
    const Graph g(vs, es);
    for (int d = 3; d <= 5; ++d)
      o.require(decide_rigidity(g, d - 1).is_rigid == decide_rigidity(cone_graph(g, 100), d).is_rigid,
                "cone equivalence, graph " + std::to_string(i));
  }

  std::vector<Certificate> certs;
  for (const auto& s : all_spheres()) {
    if (s.complex.num_vertices() > 14) continue;
    for (const auto& f : s.complex.all_faces())
      if (static_cast<int>(f.size()) <= s.d - 3) certs.push_back(certify_star_rigidity(s.complex, f, s.d));
    for (const auto& m : missing_faces(s.complex)) {
      if (m.dim() < 2 || m.dim() > s.d - 2) continue;
      for (const auto& pair : m.subsets(2))
        certs.push_back(certify_missing_face_edge(s.complex, m, Edge(pair[0], pair[1]), s.d));
    }
  }
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const auto r = check(certs[i], 3, i);
    o.require(r.ok(), "certificate " + std::to_string(i) + " failed at " + r.path + ": " + r.reason);
    o.require(decide_rigidity(certs[i].graph, certs[i].d, 3, i).is_rigid,
              "certificate claim not rigid: " + std::to_string(i));
  }

  for (int d = 3; d <= 5; ++d) {
    std::vector<Vertex> a, b;
    for (int v = 1; v <= d + 1; ++v) a.push_back(v);
    for (int v = 3; v <= d + 3; ++v) b.push_back(v);  // shares d - 1 vertices
    const auto glued = gluing_rule(complete_leaf(complete_graph(a), d), complete_leaf(complete_graph(b), d));
    o.require(check(glued).kind == CheckResult::Kind::SideCondition,
              "gluing on d-1 vertices accepted, d=" + std::to_string(d));
  }
  if (o.ok) o.detail = std::to_string(certs.size()) + " certificates";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t graphs = 0;
  for (const auto& s : all_spheres()) {
    if (s.complex.num_vertices() > 8) continue;
    const auto g = graph_of(s.complex);
    std::vector<Graph> cases{g};
    for (const auto& e : g.edges()) cases.push_back(remove_edge(g, e));
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const long exact = oracle::rational_rigidity_rank(cases[i], s.d, i);
      o.require(decide_rigidity(cases[i], s.d, 3, i).rank == exact, s.name + " case " + std::to_string(i));
      ++graphs;
    }
  }
  if (o.ok) o.detail = std::to_string(graphs) + " graphs";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t complexes = 0;
  auto family = [](const SimplicialComplex& c) {
    oracle::Family out;
    for (const auto& f : c.facets()) out.insert(oracle::VSet(f.begin(), f.end()));
    return out;
  };
  for (const auto& s : all_spheres()) {
    if (s.complex.num_vertices() > 10) continue;
    ++complexes;
    oracle::Family got;
    for (const auto& f : missing_faces(s.complex)) got.insert(oracle::VSet(f.begin(), f.end()));
    o.require(got == oracle::missing_faces(s.complex, s.complex.num_vertices()), s.name + ": missing faces");
    const Vertex merged = s.complex.max_vertex() + 1;
    for (const auto& e : s.complex.faces_of_size(2))
      o.require(family(contract_edge(s.complex, e, merged)) ==
                    oracle::contract(s.complex, e[0], e[1], merged),
                s.name + ": contraction of " + e.to_string());
    std::multiset<oracle::Family> factors;
    for (const auto& f : prime_factors(s.complex, s.d)) factors.insert(family(f));
    o.require(factors == oracle::prime_factor_facets(s.complex, s.d), s.name + ": prime factors");
  }
  if (o.ok) o.detail = std::to_string(complexes) + " complexes";
  return o;
}

Outcome criterion9() {
  Outcome o;
  SuiteConfig config;
  config.seed = 20181103;
  const auto first = machine_format(run_suite(config));
  const auto second = machine_format(run_suite(config));
  o.require(!first.empty() && first == second, "machine reports differ");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "rank baseline for simplex boundaries", 1, criterion1},
      {2, "every edge deletion stays rigid", 60, criterion2},
      {3, "stacking negative control", 5, criterion3},
      {4, "stress dimension equals g2", 10, criterion4},
      {5, "contraction rank identity", 5, criterion5},
      {6, "certificate calculus", 30, criterion6},
      {7, "finite field vs rational rank", 30, criterion7},
      {8, "combinatorial oracles", 30, criterion8},
      {9, "deterministic verify reports", 0, criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s && o.ok) {
      o.ok = false;
      o.detail = "over the time limit";
    }
    if (!o.ok) ++failures;
    char limit[32] = "";
    if (c.limit_s > 0) std::snprintf(limit, sizeof limit, " < %.0fs", c.limit_s);
    std::printf("criterion %d: %s  %s (%.2fs%s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, secs, limit,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
