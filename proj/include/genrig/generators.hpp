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

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "genrig/complex.hpp"
#include "genrig/random.hpp"

namespace genrig {

/// ∂Δ^d on vertices 1..d+1: a (d-1)-sphere.
SimplicialComplex boundary_simplex(int d);

/// Boundary of the d-dimensional cross-polytope; antipodal pairs {i, i+d}.
SimplicialComplex cross_polytope(int d);

/// The cycle (v_0, ..., v_{k-1}) as a 1-dimensional complex.
SimplicialComplex cycle_complex(const std::vector<Vertex>& vertices);

/// ∂Δ^p * ∂Δ^q, a prime (p+q-1)-sphere with g2 = 1. Requires p, q >= 2.
SimplicialComplex join_spheres(int p, int q);

/// ∂Δ^{d-2} * C_k, a prime (d-1)-sphere with g2 = 1. Requires d >= 4, k >= 4.
SimplicialComplex join_simplex_cycle(int d, int k);

/// Boundary of the cyclic polytope C(n, d) on 1..n by Gale's evenness
/// condition.
SimplicialComplex cyclic_polytope_boundary(int n, int d);

/// Replaces facet F by the cone from `apex` over ∂F.
SimplicialComplex stack_over_facet(const SimplicialComplex& complex,
                                   const Face& facet, Vertex apex);

/// Glues `second` to `first` by identifying facet F2 with F1 via `matching`
/// (F1 vertex -> F2 vertex) and removes the glued facet. Vertices of `second`
/// outside F2 keep their labels unless they clash with `first`, in which
/// case all of them are shifted above max_vertex(first).
SimplicialComplex connected_sum(const SimplicialComplex& first, const Face& f1,
                                const SimplicialComplex& second, const Face& f2,
                                const std::map<Vertex, Vertex>& matching);

/// Connected sum matching F1 and F2 in sorted order.
SimplicialComplex connected_sum(const SimplicialComplex& first, const Face& f1,
                                const SimplicialComplex& second, const Face& f2);

/// Replace st(face_out) by ∂(face_out) * face_in.
struct FlipMove {
  Face face_out;
  Face face_in;

  /// (|face_out|, |face_in|); the sizes sum to d + 1.
  std::pair<std::size_t, std::size_t> kind() const {
    return {face_out.size(), face_in.size()};
  }
  FlipMove inverse() const { return {face_in, face_out}; }
  friend auto operator<=>(const FlipMove&, const FlipMove&) = default;
  friend bool operator==(const FlipMove&, const FlipMove&) = default;
};

bool is_legal_flip(const SimplicialComplex& complex, const FlipMove& move);
SimplicialComplex bistellar_flip(const SimplicialComplex& complex,
                                 const FlipMove& move);

/// Every legal flip, sorted. Facet moves insert max_vertex() + 1.
std::vector<FlipMove> legal_flips(const SimplicialComplex& complex);

struct FlipWalkOptions {
  bool keep_prime = false;
  /// Moves leaving more vertices are rejected; 0 means f_0(start) + 2.
  std::size_t max_vertices = 0;
};

/// Applies `steps` uniformly chosen legal flips. Moves that would leave fewer
/// than d + 2 vertices (or more than the vertex cap) are rejected. Returns
/// the complex after each step, only the prime ones when keep_prime is set.
std::vector<SimplicialComplex> random_flip_walk(const SimplicialComplex& start,
                                                std::size_t steps, Seed seed,
                                                FlipWalkOptions options = {});

/// 1 + (-1)^(d-1), the Euler characteristic of a (d-1)-sphere.
long sphere_euler_characteristic(int d);

}  // namespace genrig
