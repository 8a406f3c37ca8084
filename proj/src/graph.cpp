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

#include "genrig/graph.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>

#include "genrig/detail/text.hpp"

namespace genrig {

Edge::Edge(Vertex a, Vertex b) : first(std::min(a, b)), second(std::max(a, b)) {
  if (a == b) throw InvalidInput("edge endpoints must differ");
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << e.first << '-' << e.second;
}

Graph::Graph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                  vertices_.end());
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_)
    if (!has_vertex(e.first) || !has_vertex(e.second))
      throw InvalidInput("graph: edge endpoint outside the vertex set");
}

bool Graph::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t Graph::degree(Vertex v) const {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [v](const Edge& e) { return e.contains(v); }));
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const Edge& e : edges_)
    if (e.contains(v)) out.push_back(e.other(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::is_complete() const {
  const std::size_t n = vertices_.size();
  return edges_.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::size_t Graph::index_of(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    throw InvalidInput("graph: unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

Graph graph_of(const SimplicialComplex& complex) {
  if (complex.dim() < 1)
    throw InvalidInput("graph_of: complex must have dimension at least 1");
  std::vector<Edge> edges;
  for (const Face& f : complex.faces_of_size(2)) edges.emplace_back(f[0], f[1]);
  return Graph(complex.vertices(), std::move(edges));
}

Graph restrict_to(const Graph& g, const std::vector<Vertex>& subset) {
  for (Vertex v : subset)
    if (!g.has_vertex(v))
      throw InvalidInput("restrict: vertex " + std::to_string(v) +
                         " is not in the graph");
  std::vector<Vertex> us(subset);
  std::sort(us.begin(), us.end());
  auto inside = [&](Vertex v) { return std::binary_search(us.begin(), us.end(), v); };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (inside(e.first) && inside(e.second)) edges.push_back(e);
  return Graph(std::move(us), std::move(edges));
}

Graph cone_graph(const Graph& g, Vertex apex) {
  if (g.has_vertex(apex))
    throw InvalidInput("cone_graph: apex " + std::to_string(apex) +
                       " is already a vertex");
  std::vector<Vertex> vs = g.vertices();
  std::vector<Edge> edges = g.edges();
  for (Vertex v : vs) edges.emplace_back(v, apex);
  vs.push_back(apex);
  return Graph(std::move(vs), std::move(edges));
}

Graph complete_graph(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      edges.emplace_back(vertices[i], vertices[j]);
  return Graph(std::move(vertices), std::move(edges));
}

Graph graph_union(const Graph& a, const Graph& b) {
  std::vector<Vertex> vs(a.vertices());
  vs.insert(vs.end(), b.vertices().begin(), b.vertices().end());
  std::vector<Edge> es(a.edges());
  es.insert(es.end(), b.edges().begin(), b.edges().end());
  return Graph(std::move(vs), std::move(es));
}

Graph add_edge(const Graph& g, const Edge& e) {
  std::vector<Edge> es(g.edges());
  es.push_back(e);
  return Graph(g.vertices(), std::move(es));
}

Graph remove_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) {
    std::ostringstream msg;
    msg << "remove_edge: " << e << " is not an edge";
    throw InvalidInput(msg.str());
  }
  std::vector<Edge> es;
  es.reserve(g.num_edges() - 1);
  for (const Edge& x : g.edges())
    if (x != e) es.push_back(x);
  return Graph(g.vertices(), std::move(es));
}

bool is_subgraph(const Graph& a, const Graph& b) {
  return std::includes(b.vertices().begin(), b.vertices().end(),
                       a.vertices().begin(), a.vertices().end()) &&
         std::includes(b.edges().begin(), b.edges().end(), a.edges().begin(),
                       a.edges().end());
}

std::vector<Vertex> common_vertices(const Graph& a, const Graph& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.vertices().begin(), a.vertices().end(),
                        b.vertices().begin(), b.vertices().end(),
                        std::back_inserter(out));
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (const auto& row : detail::read_label_rows(in, "edge list")) {
    if (row.size() == 1) {
      vs.push_back(row[0]);
    } else if (row.size() == 2) {
      vs.insert(vs.end(), row.begin(), row.end());
      es.emplace_back(row[0], row[1]);
    } else {
      throw InvalidInput("edge list: each line holds one edge or one vertex");
    }
  }
  return Graph(std::move(vs), std::move(es));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  std::set<Vertex> touched;
  for (const Edge& e : g.edges()) touched.insert({e.first, e.second});
  for (Vertex v : g.vertices())
    if (!touched.count(v)) out << v << '\n';
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

}  // namespace genrig
