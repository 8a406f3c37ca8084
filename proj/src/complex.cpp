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

#include "genrig/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace genrig {
namespace {

// Keeps only the inclusion-maximal faces.
std::vector<Face> maximal_faces(std::vector<Face> faces) {
  normalize(faces);
  std::stable_sort(faces.begin(), faces.end(),
                   [](const Face& a, const Face& b) { return a.size() > b.size(); });
  std::vector<Face> kept;
  for (const Face& f : faces) {
    bool dominated = false;
    for (const Face& g : kept) {
      if (g.size() > f.size() && f.is_subset_of(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

void require_pure_of_dim(const SimplicialComplex& c, int d, const char* what) {
  if (!c.is_pure())
    throw InvalidInput(std::string(what) + ": complex is not pure");
  if (c.dim() != d - 1)
    throw InvalidInput(std::string(what) + ": expected dimension " +
                       std::to_string(d - 1) + ", got " +
                       std::to_string(c.dim()));
}

SimplicialComplex from_possibly_empty(std::vector<Face> faces) {
  std::erase_if(faces, [](const Face& f) { return f.empty(); });
  if (faces.empty()) return SimplicialComplex::minus_one_sphere();
  return SimplicialComplex::from_facets(std::move(faces));
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Face> faces)
    : facets_(maximal_faces(std::move(faces))) {
  std::set<Vertex> vs;
  for (const Face& f : facets_) vs.insert(f.begin(), f.end());
  vertices_.assign(vs.begin(), vs.end());
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> faces) {
  if (faces.empty()) throw InvalidInput("complex needs at least one facet");
  for (const Face& f : faces)
    if (f.empty()) throw InvalidInput("facets must have at least one vertex");
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex SimplicialComplex::minus_one_sphere() {
  return SimplicialComplex(std::vector<Face>{Face{}});
}

SimplicialComplex SimplicialComplex::simplex(const Face& f) {
  return f.empty() ? minus_one_sphere() : from_facets({f});
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const Face& f : facets_) d = std::max(d, f.dim());
  return d;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Face& f) {
    return f.size() == facets_.front().size();
  });
}

bool SimplicialComplex::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimplicialComplex::has_face(const Face& f) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Face& g) { return f.is_subset_of(g); });
}

bool SimplicialComplex::is_facet(const Face& f) const {
  return std::binary_search(facets_.begin(), facets_.end(), f);
}

Vertex SimplicialComplex::max_vertex() const {
  return vertices_.empty() ? -1 : vertices_.back();
}

std::vector<Face> SimplicialComplex::faces_of_size(std::size_t k) const {
  std::vector<Face> out;
  for (const Face& f : facets_) {
    auto sub = f.subsets(k);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  normalize(out);
  return out;
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  for (const Face& f : facets_) {
    const std::size_t n = f.size();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      std::vector<Vertex> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ul << i)) s.push_back(f[i]);
      out.push_back(Face::from_sorted(std::move(s)));
    }
  }
  normalize(out);
  return out;
}

FVector SimplicialComplex::f_vector() const {
  FVector fv;
  fv.counts.assign(dim() + 2, 0);
  for (const Face& f : all_faces()) ++fv.counts[f.size()];
  return fv;
}

long g2(const SimplicialComplex& complex, int d) {
  if (complex.dim() != d - 1)
    throw InvalidInput("g2: d must equal dim + 1 (dim is " +
                       std::to_string(complex.dim()) + ", d is " +
                       std::to_string(d) + ")");
  const FVector fv = complex.f_vector();
  return fv.f(1) - static_cast<long>(d) * fv.f(0) + (d + 1L) * d / 2;
}

long euler_characteristic(const SimplicialComplex& complex) {
  const FVector fv = complex.f_vector();
  long chi = 0;
  for (int i = 0; i <= fv.dim(); ++i) chi += (i % 2 == 0 ? 1 : -1) * fv.f(i);
  return chi;
}

SimplicialComplex link(const SimplicialComplex& complex, const Face& face) {
  if (!complex.has_face(face))
    throw InvalidInput("link: " + face.to_string() + " is not a face");
  std::vector<Face> out;
  for (const Face& f : complex.facets())
    if (face.is_subset_of(f)) out.push_back(f.minus(face));
  return from_possibly_empty(std::move(out));
}

SimplicialComplex star(const SimplicialComplex& complex, const Face& face) {
  if (!complex.has_face(face))
    throw InvalidInput("star: " + face.to_string() + " is not a face");
  std::vector<Face> out;
  for (const Face& f : complex.facets())
    if (face.is_subset_of(f)) out.push_back(f);
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex delete_vertex(const SimplicialComplex& complex, Vertex v) {
  if (!complex.has_vertex(v))
    throw InvalidInput("delete_vertex: unknown vertex " + std::to_string(v));
  std::vector<Face> out;
  for (const Face& f : complex.facets()) {
    Face g = f.without(v);
    if (!g.empty()) out.push_back(std::move(g));
  }
  if (out.empty())
    throw InvalidInput("delete_vertex: nothing remains after deletion");
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex,
                                     const Face& vertices) {
  std::vector<Face> out;
  for (const Face& f : complex.facets()) out.push_back(f.intersect(vertices));
  return from_possibly_empty(std::move(out));
}

SimplicialComplex intersection(const SimplicialComplex& a,
                               const SimplicialComplex& b) {
  std::vector<Face> out;
  for (const Face& f : a.facets())
    for (const Face& g : b.facets()) out.push_back(f.intersect(g));
  return from_possibly_empty(std::move(out));
}

SimplicialComplex boundary(const SimplicialComplex& complex) {
  if (!complex.is_pure()) throw InvalidInput("boundary: complex is not pure");
  std::map<Face, int> count;
  for (const Face& f : complex.facets())
    for (Face& r : f.ridges()) ++count[std::move(r)];
  std::vector<Face> out;
  for (const auto& [r, n] : count)
    if (n == 1) out.push_back(r);
  return from_possibly_empty(std::move(out));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (Vertex v : a.vertices())
    if (b.has_vertex(v))
      throw InvalidInput("join: vertex " + std::to_string(v) +
                         " appears in both complexes");
  std::vector<Face> out;
  out.reserve(a.facets().size() * b.facets().size());
  for (const Face& f : a.facets())
    for (const Face& g : b.facets()) out.push_back(f.unite(g));
  return from_possibly_empty(std::move(out));
}

SimplicialComplex cone(const SimplicialComplex& complex, Vertex apex) {
  return join(complex, SimplicialComplex::from_facets({Face{apex}}));
}

SimplicialComplex suspension(const SimplicialComplex& complex, Vertex north,
                             Vertex south) {
  return join(complex,
              SimplicialComplex::from_facets({Face{north}, Face{south}}));
}

SimplicialComplex suspension(const SimplicialComplex& complex) {
  const Vertex top = complex.max_vertex();
  return suspension(complex, top + 1, top + 2);
}

SimplicialComplex relabel(const SimplicialComplex& complex,
                          const std::map<Vertex, Vertex>& mapping) {
  auto image = [&](Vertex v) {
    auto it = mapping.find(v);
    return it == mapping.end() ? v : it->second;
  };
  std::set<Vertex> seen;
  for (Vertex v : complex.vertices()) seen.insert(image(v));
  if (seen.size() != complex.num_vertices())
    throw InvalidInput("relabel: mapping is not injective on the vertex set");
  std::vector<Face> out;
  for (const Face& f : complex.facets()) {
    std::vector<Vertex> g;
    for (Vertex v : f) g.push_back(image(v));
    out.emplace_back(std::move(g));
  }
  return from_possibly_empty(std::move(out));
}

std::vector<Face> missing_faces(const SimplicialComplex& complex) {
  const std::vector<Face> faces = complex.all_faces();
  auto is_face = [&](const Face& f) {
    return std::binary_search(faces.begin(), faces.end(), f);
  };
  std::vector<Face> out;
  // A minimal non-face σ is (σ minus its largest vertex) plus that vertex.
  for (const Face& f : faces) {
    if (f.empty()) continue;
    for (Vertex v : complex.vertices()) {
      if (v <= f.back()) continue;
      Face candidate = f.with(v);
      if (is_face(candidate)) continue;
      const auto ridges = candidate.ridges();
      if (std::all_of(ridges.begin(), ridges.end(), is_face))
        out.push_back(std::move(candidate));
    }
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_prime(const SimplicialComplex& complex, int d) {
  require_pure_of_dim(complex, d, "is_prime");
  for (const Face& m : missing_faces(complex))
    if (static_cast<int>(m.size()) == d) return false;
  return true;
}

SimplicialComplex contract_edge(const SimplicialComplex& complex,
                                const Face& edge, Vertex merged) {
  if (edge.size() != 2)
    throw InvalidInput("contract_edge: " + edge.to_string() + " is not an edge");
  if (!complex.has_face(edge))
    throw InvalidInput("contract_edge: " + edge.to_string() + " is not a face");
  if (complex.has_vertex(merged))
    throw InvalidInput("contract_edge: label " + std::to_string(merged) +
                       " is already in use");
  std::vector<Face> out;
  for (const Face& f : complex.facets()) {
    if (f.intersects(edge))
      out.push_back(f.minus(edge).with(merged));
    else
      out.push_back(f);
  }
  return SimplicialComplex::from_facets(std::move(out));
}

bool check_pseudomanifold(const SimplicialComplex& complex, int d) {
  require_pure_of_dim(complex, d, "check_pseudomanifold");
  const auto& facets = complex.facets();
  std::map<Face, std::vector<std::size_t>> incident;
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (Face& r : facets[i].ridges()) incident[std::move(r)].push_back(i);
  UnionFind uf(facets.size());
  for (const auto& [ridge, owners] : incident) {
    if (owners.size() != 2) return false;
    uf.unite(owners[0], owners[1]);
  }
  const std::size_t root = uf.find(0);
  for (std::size_t i = 1; i < facets.size(); ++i)
    if (uf.find(i) != root) return false;
  return true;
}

namespace {

std::vector<SimplicialComplex> split_prime(const SimplicialComplex& complex,
                                           int d) {
  const auto missing = missing_faces(complex);
  auto it = std::find_if(missing.begin(), missing.end(), [&](const Face& m) {
    return static_cast<int>(m.size()) == d;
  });
  if (it == missing.end()) return {complex};
  const Face& sigma = *it;

  // Connected components of the complex with σ's vertices removed.
  const auto& vs = complex.vertices();
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(
        std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  UnionFind uf(vs.size());
  for (const Face& f : complex.facets()) {
    const Face rest = f.minus(sigma);
    for (std::size_t i = 1; i < rest.size(); ++i)
      uf.unite(index(rest[0]), index(rest[i]));
  }
  std::map<std::size_t, std::vector<Vertex>> components;
  for (Vertex v : vs)
    if (!sigma.contains(v)) components[uf.find(index(v))].push_back(v);
  if (components.size() < 2)
    throw InvalidInput("prime_factors: missing facet " + sigma.to_string() +
                       " does not separate the complex");

  std::vector<std::vector<Vertex>> parts;
  for (auto& [root, part] : components) parts.push_back(std::move(part));
  std::sort(parts.begin(), parts.end());

  std::vector<SimplicialComplex> out;
  for (const auto& part : parts) {
    const Face pieces_vertices = Face::from_sorted(part);
    std::vector<Face> piece{sigma};
    for (const Face& f : complex.facets())
      if (f.minus(sigma).is_subset_of(pieces_vertices)) piece.push_back(f);
    auto factor = SimplicialComplex::from_facets(std::move(piece));
    if (!check_pseudomanifold(factor, d))
      throw InvalidInput("prime_factors: splitting along " + sigma.to_string() +
                         " leaves a piece that is not a pseudomanifold");
    auto sub = split_prime(factor, d);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

}  // namespace

std::vector<SimplicialComplex> prime_factors(const SimplicialComplex& complex,
                                             int d) {
  if (!check_pseudomanifold(complex, d))
    throw InvalidInput("prime_factors: input is not a pseudomanifold");
  return split_prime(complex, d);
}

SimplicialComplex stacked_ball(const SimplicialComplex& complex, int d) {
  if (d < 3) throw InvalidInput("stacked_ball: d must be at least 3");
  require_pure_of_dim(complex, d, "stacked_ball");
  if (g2(complex, d) != 0)
    throw InvalidInput("stacked_ball: g2 is nonzero, the sphere is not stacked");

  std::vector<Face> current = complex.facets();
  std::vector<Face> ball;
  const std::size_t ud = static_cast<std::size_t>(d);
  while (true) {
    const auto cur = SimplicialComplex::from_facets(current);
    if (cur.num_vertices() == ud + 1) {
      if (cur.facets().size() != ud + 1)
        throw InvalidInput("stacked_ball: reduction did not reach a simplex boundary");
      ball.push_back(Face::from_sorted(cur.vertices()));
      break;
    }
    // Undo one stacking: a vertex whose link is the boundary of a simplex
    // whose facet is absent.
    bool reduced = false;
    for (Vertex v : cur.vertices()) {
      std::vector<Face> around;
      Face neighborhood;
      for (const Face& f : current) {
        if (f.contains(v)) {
          around.push_back(f);
          neighborhood = neighborhood.unite(f);
        }
      }
      if (around.size() != ud || neighborhood.size() != ud + 1) continue;
      const Face opposite = neighborhood.without(v);
      if (cur.has_face(opposite)) continue;
      ball.push_back(neighborhood);
      std::erase_if(current, [&](const Face& f) { return f.contains(v); });
      current.push_back(opposite);
      reduced = true;
      break;
    }
    if (!reduced)
      throw InvalidInput("stacked_ball: no removable vertex, the sphere is not stacked");
  }
  return SimplicialComplex::from_facets(std::move(ball));
}

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.num_vertices() != b.num_vertices() ||
      a.facets().size() != b.facets().size() || a.f_vector() != b.f_vector())
    return false;
  if (a.is_minus_one_sphere()) return true;
  const std::size_t n = a.num_vertices();

  // Per-vertex signature: number of facets and graph degree.
  auto profile = [n](const SimplicialComplex& c) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<std::pair<long, long>> sig(n, {0, 0});
    const auto& vs = c.vertices();
    auto idx = [&](Vertex v) {
      return static_cast<std::size_t>(
          std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    for (const Face& f : c.facets()) {
      for (Vertex u : f) {
        ++sig[idx(u)].first;
        for (Vertex w : f)
          if (u != w) adj[idx(u)][idx(w)] = 1;
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      sig[i].second = std::count(adj[i].begin(), adj[i].end(), 1);
    return std::pair{adj, sig};
  };
  const auto [adj_a, sig_a] = profile(a);
  const auto [adj_b, sig_b] = profile(b);
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return sig_a[x] > sig_a[y];
  });
  std::vector<std::size_t> image(n, n);
  std::vector<char> used(n, 0);

  auto facets_match = [&]() {
    std::map<Vertex, Vertex> m;
    for (std::size_t i = 0; i < n; ++i)
      m[a.vertices()[i]] = b.vertices()[image[i]];
    return relabel(a, m).facets() == b.facets();
  };

  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return facets_match();
    const std::size_t u = order[depth];
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x] || sig_b[x] != sig_a[u]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const std::size_t w = order[k];
        ok = adj_a[u][w] == adj_b[x][image[w]];
      }
      if (!ok) continue;
      image[u] = x;
      used[x] = 1;
      if (self(self, depth + 1)) return true;
      used[x] = 0;
    }
    image[u] = n;
    return false;
  };
  return extend(extend, 0);
}

}  // namespace genrig
