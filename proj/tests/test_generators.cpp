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

#include "catch2/catch_amalgamated.hpp"
#include "genrig/generators.hpp"
#include "genrig/graph.hpp"

using namespace genrig;

TEST_CASE("simplex boundary", "[generators]") {
  CHECK(boundary_simplex(3).f_vector().counts == std::vector<long>{1, 4, 6, 4});
  const auto s = boundary_simplex(4);
  CHECK(s.num_vertices() == 5);
  CHECK(s.f_vector().f(1) == 10);
  CHECK(g2(s, 4) == 0);
  for (int d = 1; d <= 6; ++d)
    CHECK(missing_faces(boundary_simplex(d)).size() == 1);
  CHECK_THROWS_AS(boundary_simplex(0), InvalidInput);
}

TEST_CASE("cross-polytopes", "[generators]") {
  const auto c4 = cross_polytope(4);
  CHECK(c4.num_vertices() == 8);
  CHECK(c4.f_vector().f(1) == 24);
  CHECK(g2(c4, 4) == 2);
  CHECK(is_prime(c4, 4));
  const auto c5 = cross_polytope(5);
  CHECK(c5.f_vector().f(1) == 40);
  CHECK(g2(c5, 5) == 5);
  for (int d = 4; d <= 7; ++d) {
    CHECK(g2(cross_polytope(d), d) == d * (d - 3) / 2);
    CHECK(missing_faces(cross_polytope(d)).size() == static_cast<std::size_t>(d));
  }
  CHECK_THROWS_AS(cross_polytope(1), InvalidInput);
}

TEST_CASE("join families have g2 = 1 and are prime", "[generators]") {
  const auto j = join_spheres(2, 2);
  CHECK(j.num_vertices() == 6);
  CHECK(g2(j, 4) == 1);
  const auto c4 = join_simplex_cycle(4, 4);
  CHECK(c4.num_vertices() == 7);
  CHECK(c4.f_vector().f(1) == 19);
  const auto c6 = join_simplex_cycle(4, 6);
  CHECK(c6.num_vertices() == 9);
  CHECK(c6.f_vector().f(1) == 27);
  for (int d = 4; d <= 7; ++d) {
    for (int p = 2; p <= d / 2; ++p) {
      const auto s = join_spheres(p, d - p);
      INFO("join " << p << " " << d - p);
      CHECK(g2(s, d) == 1);
      CHECK(is_prime(s, d));
      CHECK(check_pseudomanifold(s, d));
    }
    for (int k = 4; k <= 7; ++k) {
      const auto s = join_simplex_cycle(d, k);
      INFO("cycle " << d << " " << k);
      CHECK(g2(s, d) == 1);
      CHECK(is_prime(s, d));
      CHECK(euler_characteristic(s) == sphere_euler_characteristic(d));
    }
  }
  CHECK_THROWS_AS(join_simplex_cycle(4, 3), InvalidInput);
  CHECK_THROWS_AS(join_simplex_cycle(3, 5), InvalidInput);
  CHECK_THROWS_AS(join_spheres(1, 3), InvalidInput);
}

TEST_CASE("cyclic polytopes", "[generators]") {
  const auto c6 = cyclic_polytope_boundary(6, 4);
  CHECK(c6.num_vertices() == 6);
  CHECK(graph_of(c6).is_complete());
  CHECK(g2(c6, 4) == 1);
  const auto c7 = cyclic_polytope_boundary(7, 4);
  CHECK(c7.f_vector().f(1) == 21);
  CHECK(g2(c7, 4) == 3);
  CHECK(cyclic_polytope_boundary(5, 4) == boundary_simplex(4));
  for (int d = 4; d <= 7; ++d)
    for (int n = d + 1; n <= d + 4; ++n) {
      const auto c = cyclic_polytope_boundary(n, d);
      INFO(n << " " << d);
      CHECK(check_pseudomanifold(c, d));
      CHECK(euler_characteristic(c) == sphere_euler_characteristic(d));
      if (d >= 4) CHECK(graph_of(c).is_complete());
    }
  CHECK_THROWS_AS(cyclic_polytope_boundary(4, 4), InvalidInput);
  CHECK_THROWS_AS(cyclic_polytope_boundary(5, 1), InvalidInput);
}

TEST_CASE("stacking and connected sums", "[generators]") {
  const auto s = boundary_simplex(4);
  const auto once = stack_over_facet(s, s.facets().front(), 6);
  CHECK(once.num_vertices() == 6);
  CHECK(g2(once, 4) == 0);
  CHECK_FALSE(is_prime(once, 4));
  CHECK(missing_faces(once).back() == s.facets().front());
  CHECK_THROWS_AS(stack_over_facet(s, {1, 2}, 6), InvalidInput);
  CHECK_THROWS_AS(stack_over_facet(s, s.facets().front(), 1), InvalidInput);

  const auto sum = connected_sum(s, s.facets().front(), s, s.facets().back());
  CHECK(are_isomorphic(sum, once));
  CHECK(sum.num_vertices() == 5 + 5 - 4);

  for (int d = 4; d <= 6; ++d) {
    const std::vector<SimplicialComplex> pieces = {boundary_simplex(d), cross_polytope(d),
                                                   join_spheres(2, d - 2),
                                                   cyclic_polytope_boundary(d + 3, d)};
    for (const auto& a : pieces)
      for (const auto& b : pieces) {
        const auto c = connected_sum(a, a.facets().front(), b, b.facets().back());
        CHECK(g2(c, d) == g2(a, d) + g2(b, d));
        CHECK(c.num_vertices() == a.num_vertices() + b.num_vertices() - d);
        CHECK(check_pseudomanifold(c, d));
        CHECK_FALSE(is_prime(c, d));
        CHECK(prime_factors(c, d).size() >= 2);
      }
  }
  CHECK_THROWS_AS(connected_sum(s, s.facets().front(), s, s.facets().back(), {{1, 1}}),
                  InvalidInput);
}

TEST_CASE("bistellar flips", "[generators]") {
  const auto t = boundary_simplex(3);
  const Face f = t.facets().front();
  const FlipMove stack{f, Face{9}};
  CHECK(stack.kind() == std::pair<std::size_t, std::size_t>{3, 1});
  REQUIRE(is_legal_flip(t, stack));
  CHECK(bistellar_flip(t, stack) == stack_over_facet(t, f, 9));

  const auto c = cross_polytope(4);
  for (const auto& m : legal_flips(c)) {
    const auto flipped = bistellar_flip(c, m);
    INFO(m.face_out << " -> " << m.face_in);
    CHECK(check_pseudomanifold(flipped, 4));
    REQUIRE(is_legal_flip(flipped, m.inverse()));
    CHECK(bistellar_flip(flipped, m.inverse()) == c);
  }
  // The filled triangle of a missing edge link is illegal when the edge exists.
  const FlipMove bad{Face{1, 2}, Face{3, 7, 4}};
  CHECK_FALSE(is_legal_flip(c, bad));
  CHECK_THROWS_AS(bistellar_flip(c, bad), InvalidInput);
}

TEST_CASE("random flip walks", "[generators]") {
  const auto start = cross_polytope(4);
  const auto walk = random_flip_walk(start, 40, 5);
  CHECK(walk.size() == 40);
  for (const auto& s : walk) {
    CHECK(check_pseudomanifold(s, 4));
    CHECK(euler_characteristic(s) == 0);
    CHECK(s.num_vertices() >= 6);
    CHECK(s.num_vertices() <= 10);
  }
  CHECK(random_flip_walk(start, 40, 5) == walk);
  CHECK_FALSE(random_flip_walk(start, 40, 6) == walk);

  FlipWalkOptions prime_only;
  prime_only.keep_prime = true;
  for (const auto& s : random_flip_walk(start, 40, 5, prime_only)) CHECK(is_prime(s, 4));
}
