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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genrig/complex.hpp"
#include "genrig/graph.hpp"
#include "genrig/random.hpp"

namespace genrig {

/// Inference rules of the rigidity calculus. Leaves are decided by rank or by
/// completeness; internal rules are trusted lemmas whose side conditions are
/// checked structurally.
enum class Rule {
  RankLeaf,       // rank criterion at random embeddings
  CompleteLeaf,   // K_n with n >= d + 1
  Cone,           // G (d-1)-rigid  =>  C(G) d-rigid
  Gluing,         // G1, G2 rigid, |V(G1) ∩ V(G2)| >= d  =>  G1 ∪ G2 rigid
  Replacement,    // G|_U and G ∪ K(U) rigid  =>  G rigid
  GluingVariant,  // G1 and G2 + ab rigid, G1|_U = G2|_U  =>  G1 ∪ G2 rigid
  Augment,        // spanning subgraph rigid  =>  graph rigid
};

std::string_view rule_name(Rule rule);
std::optional<Rule> parse_rule_name(std::string_view name);

/// A claim "graph is generically d-rigid" together with its justification.
struct Certificate {
  Graph graph;
  int d = 0;
  Rule rule = Rule::RankLeaf;
  std::vector<Certificate> children;
  std::optional<Vertex> apex;   // Cone
  std::vector<Vertex> subset;   // Replacement, GluingVariant: U
  std::optional<Edge> edge;     // GluingVariant: {a, b}

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Constructors that derive the claim from the children.
Certificate rank_leaf(Graph g, int d);
Certificate complete_leaf(Graph g, int d);
Certificate cone_rule(Certificate child, Vertex apex);
Certificate gluing_rule(Certificate first, Certificate second);
/// `restricted` claims G|_U, `completed` claims G ∪ K(U).
Certificate replacement_rule(Graph g, std::vector<Vertex> subset,
                             Certificate restricted, Certificate completed);
/// `first` claims G1, `second` claims G2 + ab; the claim is G1 ∪ G2.
Certificate gluing_variant_rule(Certificate first, Certificate second, Edge ab);
Certificate augment_rule(Certificate spanning, Graph g);

struct CheckResult {
  enum class Kind { Ok, LeafFailed, SideCondition, ClaimMismatch, Malformed, CrossCheckFailed };

  Kind kind = Kind::Ok;
  std::string path;  // "." for the root, "./1/0" for nested children
  std::string reason;

  bool ok() const { return kind == Kind::Ok; }
  explicit operator bool() const { return ok(); }
};

enum class CheckMode {
  Structural,  // internal nodes are trusted once their side conditions hold
  CrossCheck,  // additionally run the rank test on every internal claim
};

CheckResult check(const Certificate& cert, int trials = 3, Seed seed = 0,
                  CheckMode mode = CheckMode::Structural);

/// Cone tower over a rank leaf for the link of σ in dimension d - |σ|,
/// claiming G(st σ). Requires |σ| <= d - 3.
Certificate certify_star_rigidity(const SimplicialComplex& complex,
                                  const Face& sigma, int d);

/// Replacement on W = V(st(σ minus e)) claiming G(Δ) - e, for a missing face
/// σ with 2 <= dim σ <= d - 2 and an edge e ⊆ σ.
Certificate certify_missing_face_edge(const SimplicialComplex& complex,
                                      const Face& sigma, const Edge& e, int d);

std::size_t node_count(const Certificate& cert);

/// Nested text form: (Rule d=.. [apex=..] [U=[..]] [e=a-b] V=[..] E=[..] children...)
std::string serialize(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

}  // namespace genrig
