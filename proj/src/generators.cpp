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

#include "genrig/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace genrig {
namespace {

std::vector<Vertex> labels(Vertex first, int count) {
  std::vector<Vertex> vs(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) vs[i] = first + i;
  return vs;
}

SimplicialComplex simplex_boundary_on(const std::vector<Vertex>& vs) {
  return SimplicialComplex::from_facets(
      Face::from_sorted(vs).subsets(vs.size() - 1));
}

SimplicialComplex boundary_of_simplex(const Face& f) {
  if (f.size() <= 1) return SimplicialComplex::minus_one_sphere();
  return SimplicialComplex::from_facets(f.ridges());
}

}  // namespace

SimplicialComplex boundary_simplex(int d) {
  if (d < 1) throw InvalidInput("boundary_simplex: d must be at least 1");
  return simplex_boundary_on(labels(1, d + 1));
}

SimplicialComplex cross_polytope(int d) {
  if (d < 2) throw InvalidInput("cross_polytope: d must be at least 2");
  auto result = SimplicialComplex::from_facets({Face{1}, Face{1 + d}});
  for (int i = 2; i <= d; ++i)
    result = join(result, SimplicialComplex::from_facets({Face{i}, Face{i + d}}));
  return result;
}

SimplicialComplex cycle_complex(const std::vector<Vertex>& vertices) {
  if (vertices.size() < 3) throw InvalidInput("cycle needs at least 3 vertices");
  std::vector<Face> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    edges.push_back(Face{vertices[i], vertices[(i + 1) % vertices.size()]});
  return SimplicialComplex::from_facets(std::move(edges));
}

SimplicialComplex join_spheres(int p, int q) {
  if (p < 2 || q < 2) throw InvalidInput("join_spheres: need p, q >= 2");
  return join(simplex_boundary_on(labels(1, p + 1)),
              simplex_boundary_on(labels(p + 2, q + 1)));
}

SimplicialComplex join_simplex_cycle(int d, int k) {
  if (d < 4) throw InvalidInput("join_simplex_cycle: d must be at least 4");
  if (k < 4)
    throw InvalidInput("join_simplex_cycle: k must be at least 4 (k = 3 is join_spheres)");
  return join(simplex_boundary_on(labels(1, d - 1)),
              cycle_complex(labels(d, k)));
}

SimplicialComplex cyclic_polytope_boundary(int n, int d) {
  if (d < 2 || n < d + 1)
    throw InvalidInput("cyclic_polytope_boundary: need d >= 2 and n >= d + 1");
  const Face all = Face::from_sorted(labels(1, n));
  std::vector<Face> facets;
  for (Face& s : all.subsets(static_cast<std::size_t>(d))) {
    // Gale: between any two non-members, an even number of members.
    bool even = true;
    for (int i = 1; i <= n && even; ++i) {
      if (s.contains(i)) continue;
      for (int j = i + 1; j <= n; ++j) {
        if (s.contains(j)) continue;
        int between = 0;
        for (Vertex v : s) between += (v > i && v < j);
        if (between % 2) {
          even = false;
          break;
        }
      }
    }
    if (even) facets.push_back(std::move(s));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex stack_over_facet(const SimplicialComplex& complex,
                                   const Face& facet, Vertex apex) {
  if (!complex.is_facet(facet))
    throw InvalidInput("stack_over_facet: " + facet.to_string() + " is not a facet");
  if (complex.has_vertex(apex))
    throw InvalidInput("stack_over_facet: apex " + std::to_string(apex) +
                       " is already a vertex");
  std::vector<Face> out;
  for (const Face& f : complex.facets())
    if (f != facet) out.push_back(f);
  for (const Face& r : facet.ridges()) out.push_back(r.with(apex));
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex connected_sum(const SimplicialComplex& first, const Face& f1,
                                const SimplicialComplex& second, const Face& f2,
                                const std::map<Vertex, Vertex>& matching) {
  if (!first.is_facet(f1) || !second.is_facet(f2))
    throw InvalidInput("connected_sum: gluing faces must be facets");
  if (f1.size() != f2.size() || first.dim() != second.dim())
    throw InvalidInput("connected_sum: dimensions differ");
  std::set<Vertex> targets;
  for (Vertex v : f1) {
    auto it = matching.find(v);
    if (it == matching.end() || !f2.contains(it->second))
      throw InvalidInput("connected_sum: matching is not a bijection F1 -> F2");
    targets.insert(it->second);
  }
  if (targets.size() != f2.size() || matching.size() != f1.size())
    throw InvalidInput("connected_sum: matching is not a bijection F1 -> F2");

  std::map<Vertex, Vertex> rename;
  for (const auto& [a, b] : matching) rename[b] = a;
  std::vector<Vertex> outside;
  for (Vertex v : second.vertices())
    if (!f2.contains(v)) outside.push_back(v);
  const bool clash = std::any_of(outside.begin(), outside.end(),
                                 [&](Vertex v) { return first.has_vertex(v); });
  Vertex next = first.max_vertex() + 1;
  for (Vertex v : outside) rename[v] = clash ? next++ : v;
  const SimplicialComplex moved = relabel(second, rename);

  std::vector<Face> out;
  for (const Face& f : first.facets())
    if (f != f1) out.push_back(f);
  for (const Face& f : moved.facets())
    if (f != f1) out.push_back(f);
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex connected_sum(const SimplicialComplex& first, const Face& f1,
                                const SimplicialComplex& second, const Face& f2) {
  if (f1.size() != f2.size()) throw InvalidInput("connected_sum: dimensions differ");
  std::map<Vertex, Vertex> matching;
  for (std::size_t i = 0; i < f1.size(); ++i) matching[f1[i]] = f2[i];
  return connected_sum(first, f1, second, f2, matching);
}

bool is_legal_flip(const SimplicialComplex& complex, const FlipMove& move) {
  const int d = complex.dim() + 1;
  if (move.face_out.empty() || move.face_in.empty()) return false;
  if (static_cast<int>(move.face_out.size() + move.face_in.size()) != d + 1)
    return false;
  if (!complex.has_face(move.face_out) || complex.has_face(move.face_in))
    return false;
  if (move.face_out.intersects(move.face_in)) return false;
  return link(complex, move.face_out) == boundary_of_simplex(move.face_in);
}

SimplicialComplex bistellar_flip(const SimplicialComplex& complex,
                                 const FlipMove& move) {
  if (!is_legal_flip(complex, move))
    throw InvalidInput("bistellar_flip: illegal move " + move.face_out.to_string() +
                       " -> " + move.face_in.to_string());
  std::vector<Face> out;
  for (const Face& f : complex.facets())
    if (!move.face_out.is_subset_of(f)) out.push_back(f);
  if (move.face_out.size() == 1) {
    out.push_back(move.face_in);
  } else {
    for (const Face& r : move.face_out.ridges()) out.push_back(r.unite(move.face_in));
  }
  return SimplicialComplex::from_facets(std::move(out));
}

std::vector<FlipMove> legal_flips(const SimplicialComplex& complex) {
  const std::size_t d = static_cast<std::size_t>(complex.dim() + 1);
  std::vector<FlipMove> moves;
  const Vertex fresh = complex.max_vertex() + 1;
  for (const Face& f : complex.facets()) moves.push_back({f, Face{fresh}});
  for (std::size_t k = 1; k < d; ++k) {
    for (const Face& out : complex.faces_of_size(k)) {
      const SimplicialComplex lk = link(complex, out);
      if (lk.num_vertices() != d + 1 - k) continue;
      FlipMove m{out, Face::from_sorted(lk.vertices())};
      if (is_legal_flip(complex, m)) moves.push_back(std::move(m));
    }
  }
  std::sort(moves.begin(), moves.end());
  return moves;
}

std::vector<SimplicialComplex> random_flip_walk(const SimplicialComplex& start,
                                                std::size_t steps, Seed seed,
                                                FlipWalkOptions options) {
  const int d = start.dim() + 1;
  const std::size_t floor = static_cast<std::size_t>(d) + 2;
  const std::size_t cap =
      options.max_vertices ? options.max_vertices : start.num_vertices() + 2;
  Rng gen(seed);
  SimplicialComplex current = start;
  std::vector<SimplicialComplex> out;
  for (std::size_t step = 0; step < steps; ++step) {
    std::vector<FlipMove> moves = legal_flips(current);
    std::erase_if(moves, [&](const FlipMove& m) {
      const bool adds = m.face_out.size() == static_cast<std::size_t>(d);
      const bool removes = m.face_out.size() == 1;
      const std::size_t after =
          current.num_vertices() + (adds ? 1 : 0) - (removes ? 1 : 0);
      return after < floor || after > cap;
    });
    if (moves.empty()) break;
    current = bistellar_flip(current, moves[uniform_below(gen, moves.size())]);
    if (!options.keep_prime || is_prime(current, d)) out.push_back(current);
  }
  return out;
}

long sphere_euler_characteristic(int d) { return (d - 1) % 2 == 0 ? 2 : 0; }

}  // namespace genrig
