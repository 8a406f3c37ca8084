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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace genrig {

/// Vertex labels are non-negative integers; only identity matters.
using Vertex = int;

/// Raised when an input violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite vertex set, kept sorted. The empty face has dimension -1.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<Vertex> vertices);
  /// Sorts the input; throws InvalidInput on a repeated or negative label.
  explicit Face(std::vector<Vertex> vertices);

  /// Adopts an already sorted, duplicate-free vector without checking.
  static Face from_sorted(std::vector<Vertex> vertices);

  std::size_t size() const { return vertices_.size(); }
  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  bool empty() const { return vertices_.empty(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  bool contains(Vertex v) const;
  bool is_subset_of(const Face& other) const;
  bool intersects(const Face& other) const;

  Face with(Vertex v) const;
  Face without(Vertex v) const;
  Face unite(const Face& other) const;
  Face minus(const Face& other) const;
  Face intersect(const Face& other) const;

  /// All subsets of size |F| - 1.
  std::vector<Face> ridges() const;
  /// All subsets of the given size, in lexicographic order.
  std::vector<Face> subsets(std::size_t k) const;

  std::string to_string() const;

  friend auto operator<=>(const Face&, const Face&) = default;
  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::vector<Vertex> vertices_;
};

std::ostream& operator<<(std::ostream& os, const Face& f);

/// Sorts and removes duplicates.
void normalize(std::vector<Face>& faces);

}  // namespace genrig
