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
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "genrig/complex.hpp"

namespace genrig {

/// Unordered vertex pair stored with first < second.
struct Edge {
  Vertex first;
  Vertex second;

  Edge(Vertex a, Vertex b);
  bool contains(Vertex v) const { return first == v || second == v; }
  Vertex other(Vertex v) const { return v == first ? second : first; }
  Face as_face() const { return Face::from_sorted({first, second}); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

/// A simple undirected graph; a value type independent of any complex.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidInput on an endpoint outside `vertices`.
  Graph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_vertex(Vertex v) const;
  bool has_edge(const Edge& e) const;
  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  bool is_complete() const;
  /// Position of v in vertices(); v must be present.
  std::size_t index_of(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// G(Δ); requires dim(Δ) >= 1.
Graph graph_of(const SimplicialComplex& complex);

/// G|_U; throws if U is not a subset of V(G).
Graph restrict_to(const Graph& g, const std::vector<Vertex>& subset);
Graph cone_graph(const Graph& g, Vertex apex);
Graph complete_graph(std::vector<Vertex> vertices);
Graph graph_union(const Graph& a, const Graph& b);
Graph add_edge(const Graph& g, const Edge& e);
Graph remove_edge(const Graph& g, const Edge& e);
/// E(a) ⊆ E(b) and V(a) ⊆ V(b).
bool is_subgraph(const Graph& a, const Graph& b);
std::vector<Vertex> common_vertices(const Graph& a, const Graph& b);

// Edge-list text format: one edge per line, two labels. An isolated vertex
// may be listed on a line by itself.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace genrig
