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
#include <vector>

#include "genrig/face.hpp"

namespace genrig {

/// Face counts f_{-1}, f_0, ..., f_dim.
struct FVector {
  std::vector<long> counts;  // counts[i + 1] == f_i

  long f(int i) const {
    const int k = i + 1;
    return (k >= 0 && k < static_cast<int>(counts.size())) ? counts[k] : 0;
  }
  int dim() const { return static_cast<int>(counts.size()) - 2; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// A simplicial complex stored by its facets. Every face query is answered
/// from the facet list; the face lattice is never materialized.
class SimplicialComplex {
 public:
  /// Keeps the inclusion-maximal members of `faces`. Throws InvalidInput on
  /// an empty list or an empty face.
  static SimplicialComplex from_facets(std::vector<Face> faces);

  /// The complex {∅}: the (-1)-sphere, link of a facet in a pure complex.
  static SimplicialComplex minus_one_sphere();

  /// The full simplex on `f` (all subsets of f).
  static SimplicialComplex simplex(const Face& f);

  const std::vector<Face>& facets() const { return facets_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  int dim() const;
  bool is_pure() const;
  bool is_minus_one_sphere() const { return vertices_.empty(); }

  bool has_vertex(Vertex v) const;
  bool has_face(const Face& f) const;
  bool is_facet(const Face& f) const;
  Vertex max_vertex() const;

  /// Distinct faces with exactly k vertices, sorted.
  std::vector<Face> faces_of_size(std::size_t k) const;
  /// Every face including ∅, sorted.
  std::vector<Face> all_faces() const;

  FVector f_vector() const;

  friend bool operator==(const SimplicialComplex&,
                         const SimplicialComplex&) = default;

 private:
  explicit SimplicialComplex(std::vector<Face> faces);

  std::vector<Face> facets_;
  std::vector<Vertex> vertices_;
};

/// f_1 - d f_0 + C(d+1, 2); requires d == dim + 1.
long g2(const SimplicialComplex& complex, int d);

/// Σ_{i>=0} (-1)^i f_i.
long euler_characteristic(const SimplicialComplex& complex);

SimplicialComplex link(const SimplicialComplex& complex, const Face& face);
SimplicialComplex star(const SimplicialComplex& complex, const Face& face);
SimplicialComplex delete_vertex(const SimplicialComplex& complex, Vertex v);
/// Faces whose vertices all lie in `vertices`.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex,
                                     const Face& vertices);
/// Faces common to both complexes.
SimplicialComplex intersection(const SimplicialComplex& a,
                               const SimplicialComplex& b);
/// Codimension-one faces of a pure complex lying in exactly one facet.
SimplicialComplex boundary(const SimplicialComplex& complex);

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& complex, Vertex apex);
SimplicialComplex suspension(const SimplicialComplex& complex, Vertex north,
                             Vertex south);
/// Suspension with apexes max_vertex() + 1 and max_vertex() + 2.
SimplicialComplex suspension(const SimplicialComplex& complex);

/// Renames vertices; labels absent from `mapping` are kept. The mapping must
/// be injective on the vertex set.
SimplicialComplex relabel(const SimplicialComplex& complex,
                          const std::map<Vertex, Vertex>& mapping);

/// Minimal non-faces, sorted by size then lexicographically.
std::vector<Face> missing_faces(const SimplicialComplex& complex);
/// No missing face of size d. Requires a pure (d-1)-complex.
bool is_prime(const SimplicialComplex& complex, int d);

/// Δ^{↓e}: merges the endpoints of `edge` into `merged`. The link condition
/// is not checked.
SimplicialComplex contract_edge(const SimplicialComplex& complex,
                                const Face& edge, Vertex merged);

/// Every (d-2)-face lies in exactly two facets and the facet adjacency graph
/// is connected. Requires a pure (d-1)-complex.
bool check_pseudomanifold(const SimplicialComplex& complex, int d);

/// Splits along missing facets until every piece is prime. Each factor keeps
/// the original labels and contains its separating facets as facets.
std::vector<SimplicialComplex> prime_factors(const SimplicialComplex& complex,
                                             int d);

/// The d-ball Δ(1) bounded by a stacked (d-1)-sphere on the same vertices.
SimplicialComplex stacked_ball(const SimplicialComplex& complex, int d);

/// Brute-force isomorphism test by backtracking over vertex bijections.
bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace genrig
