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

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "genrig/graph.hpp"
#include "genrig/modint.hpp"
#include "genrig/random.hpp"

namespace genrig {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Points in Scalar^d, one column per vertex (vertices kept sorted).
template <typename Scalar>
class Embedding {
 public:
  using Matrix = DenseMatrix<Scalar>;

  /// All points at the origin.
  Embedding(int dim, std::vector<Vertex> vertices)
      : dim_(dim), vertices_(std::move(vertices)) {
    if (dim_ < 1) throw InvalidInput("embedding dimension must be at least 1");
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                    vertices_.end());
    coords_ = Matrix::Zero(dim_, static_cast<Eigen::Index>(vertices_.size()));
  }

  int dim() const { return dim_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Matrix& coordinates() const { return coords_; }

  bool covers(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  auto point(Vertex v) const { return coords_.col(column(v)); }
  auto point(Vertex v) { return coords_.col(column(v)); }

  friend bool operator==(const Embedding& a, const Embedding& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_ &&
           a.coords_ == b.coords_;
  }

 private:
  Eigen::Index column(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
      throw InvalidInput("embedding has no coordinates for vertex " +
                         std::to_string(v));
    return static_cast<Eigen::Index>(it - vertices_.begin());
  }

  int dim_;
  std::vector<Vertex> vertices_;
  Matrix coords_;
};

/// Coordinates drawn uniformly from the field, vertex by vertex in label
/// order, from a generator seeded with `seed`.
template <typename Scalar = Fp61>
Embedding<Scalar> random_embedding(const std::vector<Vertex>& vertices, int d,
                                   Seed seed) {
  Embedding<Scalar> phi(d, vertices);
  Rng gen(seed);
  for (Vertex v : phi.vertices()) {
    auto p = phi.point(v);
    for (int i = 0; i < d; ++i) p(i) = Scalar::random(gen);
  }
  return phi;
}

template <typename Scalar = Fp61>
Embedding<Scalar> random_embedding(const Graph& g, int d, Seed seed) {
  return random_embedding<Scalar>(g.vertices(), d, seed);
}

/// Rig(G, φ): one row per edge, one block of d columns per vertex.
template <typename Scalar>
struct RigidityMatrix {
  int dim = 0;
  std::vector<Edge> row_edges;
  std::vector<Vertex> block_vertices;
  DenseMatrix<Scalar> entries;

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }

  auto block(Eigen::Index row, std::size_t vertex_index) const {
    return entries.row(row).segment(dim * static_cast<Eigen::Index>(vertex_index),
                                    dim);
  }
};

template <typename Scalar>
RigidityMatrix<Scalar> rigidity_matrix(const Graph& g,
                                       const Embedding<Scalar>& phi) {
  for (Vertex v : g.vertices())
    if (!phi.covers(v))
      throw InvalidInput("rigidity_matrix: no coordinates for vertex " +
                         std::to_string(v));
  const int d = phi.dim();
  RigidityMatrix<Scalar> m;
  m.dim = d;
  m.row_edges = g.edges();
  m.block_vertices = g.vertices();
  m.entries = DenseMatrix<Scalar>::Zero(
      static_cast<Eigen::Index>(g.num_edges()),
      d * static_cast<Eigen::Index>(g.num_vertices()));
  for (std::size_t r = 0; r < g.num_edges(); ++r) {
    const Edge& e = g.edges()[r];
    const auto diff = (phi.point(e.first) - phi.point(e.second)).eval();
    const auto row = static_cast<Eigen::Index>(r);
    const auto cu = d * static_cast<Eigen::Index>(g.index_of(e.first));
    const auto cv = d * static_cast<Eigen::Index>(g.index_of(e.second));
    m.entries.row(row).segment(cu, d) = diff.transpose();
    m.entries.row(row).segment(cv, d) = -diff.transpose();
  }
  return m;
}

/// Exact rank by Gaussian elimination. Scalar must be a field.
template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& matrix) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> a =
      matrix;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  const Scalar zero(0);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && a(pivot, c) == zero) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) a.row(pivot).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (a(i, c) == zero) continue;
      const Scalar factor = a(i, c) * inv;
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= factor * a(r, j);
    }
    ++r;
  }
  return r;
}

template <typename Scalar>
Eigen::Index rank(const RigidityMatrix<Scalar>& m) {
  return rank(m.entries);
}

/// Generic rank of a d-rigid graph on n vertices: d n - C(d+1, 2), or
/// C(n, 2) when n <= d + 1 (only complete graphs are rigid there).
constexpr long rigidity_target_rank(long num_vertices, int d) {
  return num_vertices <= d + 1 ? num_vertices * (num_vertices - 1) / 2
                               : d * num_vertices - (d + 1L) * d / 2;
}

struct RigidityVerdict {
  long rank = 0;
  long target_rank = 0;
  bool is_rigid = false;
  int trials = 0;
  long stress_dim = 0;
};

/// Maximum rank over `trials` random embeddings; trials stop early once the
/// rank reaches its upper bound min(f_1, target).
template <typename Scalar = Fp61>
RigidityVerdict decide_rigidity(const Graph& g, int d, int trials = 3,
                                Seed seed = 0) {
  if (d < 1) throw InvalidInput("decide_rigidity: d must be at least 1");
  if (trials < 1) throw InvalidInput("decide_rigidity: trials must be at least 1");
  RigidityVerdict v;
  v.target_rank = rigidity_target_rank(static_cast<long>(g.num_vertices()), d);
  const long ceiling = std::min<long>(static_cast<long>(g.num_edges()), v.target_rank);
  for (int t = 0; t < trials; ++t) {
    const auto phi = random_embedding<Scalar>(g, d, mix_seed(seed, t));
    v.rank = std::max<long>(v.rank, rank(rigidity_matrix(g, phi)));
    v.trials = t + 1;
    if (v.rank >= ceiling) break;
  }
  v.is_rigid = v.rank == v.target_rank;
  v.stress_dim = static_cast<long>(g.num_edges()) - v.rank;
  return v;
}

template <typename Scalar = Fp61>
long stress_space_dim(const Graph& g, int d, int trials = 3, Seed seed = 0) {
  return decide_rigidity<Scalar>(g, d, trials, seed).stress_dim;
}

}  // namespace genrig
