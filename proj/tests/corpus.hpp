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

#pragma once

#include <string>
#include <vector>

#include "genrig/generators.hpp"

namespace testing_corpus {

struct Sphere {
  std::string name;
  genrig::SimplicialComplex complex;
  int d;
};

/// Spheres used by the property tests.
inline std::vector<Sphere> spheres() {
  using namespace genrig;
  std::vector<Sphere> out;
  for (int d = 3; d <= 7; ++d) out.push_back({"simplex" + std::to_string(d), boundary_simplex(d), d});
  for (int d = 3; d <= 6; ++d) out.push_back({"cross" + std::to_string(d), cross_polytope(d), d});
  for (int p = 2; p <= 4; ++p)
    for (int q = p; p + q <= 7; ++q)
      out.push_back({"join" + std::to_string(p) + std::to_string(q), join_spheres(p, q), p + q});
  for (int k = 4; k <= 7; ++k)
    out.push_back({"jsc4_" + std::to_string(k), join_simplex_cycle(4, k), 4});
  out.push_back({"jsc5_5", join_simplex_cycle(5, 5), 5});
  for (int n = 6; n <= 9; ++n)
    out.push_back({"cyclic" + std::to_string(n) + "_4", cyclic_polytope_boundary(n, 4), 4});
  out.push_back({"cyclic8_5", cyclic_polytope_boundary(8, 5), 5});

  const auto s4 = boundary_simplex(4);
  auto stacked = s4;
  for (int i = 0; i < 3; ++i) {
    stacked = stack_over_facet(stacked, stacked.facets().back(), stacked.max_vertex() + 1);
    out.push_back({"stacked4_" + std::to_string(i + 1), stacked, 4});
  }
  const auto c4 = cross_polytope(4);
  out.push_back({"cross4#simplex4", connected_sum(c4, c4.facets().front(), s4, s4.facets().front()), 4});
  const auto j22 = join_spheres(2, 2);
  out.push_back({"join22#join22", connected_sum(j22, j22.facets().front(), j22, j22.facets().back()), 4});
  out.push_back({"oct#oct", connected_sum(cross_polytope(3), cross_polytope(3).facets().front(),
                                          cross_polytope(3), cross_polytope(3).facets().back()), 3});

  FlipWalkOptions options;
  options.keep_prime = true;
  const auto walk = random_flip_walk(cross_polytope(4), 12, 99, options);
  for (std::size_t i = 0; i < walk.size() && i < 4; ++i)
    out.push_back({"walk4_" + std::to_string(i), walk[i], 4});
  return out;
}

}  // namespace testing_corpus
