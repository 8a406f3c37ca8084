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

#include <cstdlib>
#include <sstream>

#include "catch2/catch_amalgamated.hpp"
#include "genrig/generators.hpp"
#include "genrig/harness.hpp"

using namespace genrig;

namespace {

SuiteConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in, 77);
}

bool all_of(const Report& r, Verdict v) {
  for (const auto& rec : r.records)
    if (rec.verdict != v) return false;
  return !r.records.empty();
}

}  // namespace

TEST_CASE("config parsing", "[harness][config]") {
  const auto c = parse("# suite\nfamilies = simplex, cyclic\ndims=4-5\ntrials=2\n");
  CHECK(c.families == std::vector<std::string>{"simplex", "cyclic"});
  CHECK(c.d_min == 4);
  CHECK(c.d_max == 5);
  CHECK(c.trials == 2);
  CHECK(c.seed == 77);
  CHECK(parse("seed=5\n").seed == 5);
  CHECK(parse("dims=6\n").d_min == 6);
  CHECK(parse("").families == SuiteConfig{}.families);

  CHECK_THROWS_AS(parse("families=foo\n"), InvalidInput);
  CHECK_THROWS_AS(parse("colour=red\n"), InvalidInput);
  CHECK_THROWS_AS(parse("trials=0\n"), InvalidInput);
  CHECK_THROWS_AS(parse("dims=6-4\n"), InvalidInput);
  CHECK_THROWS_AS(parse("dims=2-4\n"), InvalidInput);
  CHECK_THROWS_AS(parse("trials\n"), InvalidInput);
  CHECK_THROWS_AS(read_config_file("/nonexistent/genrig.cfg", 0), InvalidInput);
}

TEST_CASE("corpus entries recompute their expectations", "[harness]") {
  const auto e = make_entry("cross4", cross_polytope(4), 4, {true, 2, false});
  CHECK(e.expected.prime == true);
  CHECK(e.expected.g2 == 2);
  CHECK_THROWS_AS(make_entry("cross4", cross_polytope(4), 4, {true, 3, {}}), InvalidInput);
  const auto s = boundary_simplex(4);
  const auto stacked = make_entry("st", stack_over_facet(s, s.facets().front(), 6), 4);
  CHECK(stacked.expected.stacked == true);
  CHECK(stacked.expected.prime == false);
  CHECK_THROWS_AS(make_entry("ball", SimplicialComplex::simplex({1, 2, 3, 4}), 4), InvalidInput);
}

TEST_CASE("minus-edge examples and gates", "[harness]") {
  const auto c4 = verify_minus_edge(cross_polytope(4), 4, 3, 0, "cross4");
  CHECK(c4.total() == 24);
  CHECK(all_of(c4, Verdict::Pass));
  for (const auto& r : c4.records) CHECK(r.rank == 22);

  const auto j = verify_minus_edge(join_spheres(2, 2), 4, 3, 0);
  CHECK(j.total() == 15);
  for (const auto& r : j.records) CHECK(r.rank == 14);

  const auto jc = verify_minus_edge(join_simplex_cycle(5, 4), 5, 3, 0);
  CHECK(all_of(jc, Verdict::Pass));
  for (const auto& r : jc.records) CHECK(r.rank == 5 * 8 - 15);

  const auto s = boundary_simplex(4);
  const auto gated_g2 = verify_minus_edge(s, 4, 3, 0);
  REQUIRE(gated_g2.total() == 1);
  CHECK(gated_g2.records[0].verdict == Verdict::Skip);
  CHECK(gated_g2.records[0].detail == "gate: g2 = 0");
  const auto sum = verify_minus_edge(
      connected_sum(cross_polytope(4), cross_polytope(4).facets().front(), s, s.facets().front()), 4,
      3, 0);
  REQUIRE(sum.total() == 1);
  CHECK(sum.records[0].detail == "gate: not prime");
  CHECK(verify_minus_edge(cross_polytope(3), 3, 3, 0).records[0].detail == "gate: d < 4");
}

TEST_CASE("negative control loses exactly one row", "[harness]") {
  const auto s = verify_negative_control(boundary_simplex(4), 4, 3, 0);
  CHECK(s.total() == 4);
  for (const auto& r : s.records) {
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.rank == 4 * 6 - 10 - 1);
  }
  const auto c = verify_negative_control(cross_polytope(4), 4, 3, 0);
  CHECK(all_of(c, Verdict::Pass));
  for (const auto& r : c.records) CHECK(r.target - r.rank == 1);
}

TEST_CASE("missing face lemma", "[harness]") {
  const auto vac = verify_missing_face_lemma(cross_polytope(5), 5, 3, 0);
  REQUIRE(vac.total() == 1);
  CHECK(vac.records[0].verdict == Verdict::Pass);
  CHECK(vac.records[0].detail.rfind("vacuous", 0) == 0);

  const auto j = verify_missing_face_lemma(join_spheres(2, 3), 5, 3, 0);
  // Missing triangle {1,2,3} and missing tetrahedron {4,5,6,7}.
  CHECK(j.total() == 3 + 6);
  CHECK(all_of(j, Verdict::Pass));

  const auto r = verify_missing_face_lemma(suspension(join_spheres(2, 2)), 5, 3, 0);
  CHECK(r.total() == 6);
  CHECK(all_of(r, Verdict::Pass));
}

TEST_CASE("contraction reduction", "[harness]") {
  const auto c = cross_polytope(4);
  const Graph g = graph_of(c);
  for (const auto& e : g.edges()) {
    const auto r = verify_contraction_reduction(c, e, 3, 0);
    REQUIRE(r.total() == 2);
    CHECK(r.records[0].verdict == Verdict::Pass);
    CHECK(r.records[0].rank == 22);
    CHECK(r.records[0].target == 22);
    CHECK(r.records[1].verdict == Verdict::Pass);
  }
  // Triangle on 1..3, cycle on 4..8.
  const auto j = join_simplex_cycle(4, 5);
  // {1,2} lies in the missing triangle {1,2,3}.
  const auto in_missing = verify_contraction_reduction(j, {1, 2}, 3, 0);
  CHECK(all_of(in_missing, Verdict::Skip));
  CHECK(in_missing.records[0].detail == "link condition fails");
  CHECK(all_of(verify_contraction_reduction(j, {1, 4}, 3, 0), Verdict::Pass));
  // A cycle edge has the triangle as its link, which is out of scope.
  const auto tri = verify_contraction_reduction(j, {4, 5}, 3, 0);
  CHECK(all_of(tri, Verdict::Skip));
  CHECK(tri.records[0].detail == "link of e has fewer than 4 vertices");
  CHECK(all_of(verify_contraction_reduction(j, {1, 9}, 3, 0), Verdict::Skip));
}

TEST_CASE("star rigidity and stresses", "[harness]") {
  const auto c5 = verify_star_rigidity(cross_polytope(5), 5, 3, 0);
  CHECK(c5.total() == 1 + 10 + 40);
  CHECK(all_of(c5, Verdict::Pass));
  CHECK(all_of(verify_star_rigidity(boundary_simplex(6), 6, 3, 0), Verdict::Pass));

  const auto s = verify_g2_stress(cyclic_polytope_boundary(7, 4), 4, 3, 0);
  REQUIRE(s.total() == 1);
  CHECK(s.records[0].verdict == Verdict::Pass);
  CHECK(s.records[0].detail == "stress 3, g2 3");
}

TEST_CASE("suite output is deterministic and ordered", "[harness]") {
  SuiteConfig config;
  config.families = {"simplex", "cross-polytope", "joins", "flip-walks", "negative-control"};
  config.d_min = 4;
  config.d_max = 4;
  config.seed = 3;
  const auto a = run_suite(config);
  const auto b = run_suite(config);
  CHECK(machine_format(a) == machine_format(b));
  CHECK(a.ok());
  CHECK(a.total() == a.passed() + a.failed() + a.skipped());
  const auto human = human_format(a);
  CHECK(human.find("total " + std::to_string(a.total())) != std::string::npos);

  std::istringstream lines(machine_format(a));
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    ++count;
    CHECK(std::count(line.begin(), line.end(), '\t') == 5);
  }
  CHECK(count == a.total());

  config.seed = 4;
  CHECK_FALSE(machine_format(run_suite(config)) == machine_format(a));
}

TEST_CASE("the default seed can come from the environment", "[harness]") {
  ::setenv("GENRIG_SEED", "123", 1);
  CHECK(default_seed() == 123);
  ::unsetenv("GENRIG_SEED");
  CHECK(default_seed() == 20181103);
}
