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

#include "genrig/face.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <sstream>

namespace genrig {

Face::Face(std::initializer_list<Vertex> vertices)
    : Face(std::vector<Vertex>(vertices)) {}

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw InvalidInput("face has a repeated vertex: " + to_string());
  if (!vertices_.empty() && vertices_.front() < 0)
    throw InvalidInput("negative vertex label in face " + to_string());
}

Face Face::from_sorted(std::vector<Vertex> vertices) {
  Face f;
  f.vertices_ = std::move(vertices);
  return f;
}

bool Face::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

bool Face::intersects(const Face& other) const {
  auto a = begin();
  auto b = other.begin();
  while (a != end() && b != other.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

Face Face::with(Vertex v) const {
  if (contains(v)) return *this;
  std::vector<Vertex> out(vertices_);
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return from_sorted(std::move(out));
}

Face Face::without(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size());
  for (Vertex u : vertices_)
    if (u != v) out.push_back(u);
  return from_sorted(std::move(out));
}

Face Face::unite(const Face& other) const {
  std::vector<Vertex> out;
  std::set_union(begin(), end(), other.begin(), other.end(),
                 std::back_inserter(out));
  return from_sorted(std::move(out));
}

Face Face::minus(const Face& other) const {
  std::vector<Vertex> out;
  std::set_difference(begin(), end(), other.begin(), other.end(),
                      std::back_inserter(out));
  return from_sorted(std::move(out));
}

Face Face::intersect(const Face& other) const {
  std::vector<Vertex> out;
  std::set_intersection(begin(), end(), other.begin(), other.end(),
                        std::back_inserter(out));
  return from_sorted(std::move(out));
}

std::vector<Face> Face::ridges() const {
  std::vector<Face> out;
  out.reserve(vertices_.size());
  for (Vertex v : vertices_) out.push_back(without(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> Face::subsets(std::size_t k) const {
  std::vector<Face> out;
  const std::size_t n = vertices_.size();
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<Vertex> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = vertices_[idx[i]];
    out.push_back(from_sorted(std::move(s)));
    // advance to the next k-combination
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::string Face::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Face& f) {
  os << '{';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
  return os << '}';
}

void normalize(std::vector<Face>& faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

}  // namespace genrig
