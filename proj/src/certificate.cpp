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

#include "genrig/certificate.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "genrig/rigidity.hpp"

namespace genrig {
namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 7> kRuleNames{{
    {Rule::RankLeaf, "RankLeaf"},
    {Rule::CompleteLeaf, "CompleteLeaf"},
    {Rule::Cone, "Cone"},
    {Rule::Gluing, "Gluing"},
    {Rule::Replacement, "Replacement"},
    {Rule::GluingVariant, "GluingVariant"},
    {Rule::Augment, "Augment"},
}};

std::string describe(const Edge& e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

struct Checker {
  int trials;
  Seed seed;
  CheckMode mode;
  std::size_t node = 0;

  using Kind = CheckResult::Kind;

  static CheckResult fail(Kind kind, const std::string& path, std::string why) {
    return {kind, path, std::move(why)};
  }

  bool rank_rigid(const Certificate& c, std::size_t id) const {
    return decide_rigidity(c.graph, c.d, trials, mix_seed(seed, id)).is_rigid;
  }

  CheckResult expect_children(const Certificate& c, const std::string& path,
                              std::size_t n) const {
    if (c.children.size() != n)
      return fail(Kind::Malformed, path,
                  std::string(rule_name(c.rule)) + " expects " +
                      std::to_string(n) + " children, got " +
                      std::to_string(c.children.size()));
    return {};
  }

  CheckResult expect_dim(const Certificate& child, int d,
                         const std::string& path) const {
    if (child.d != d)
      return fail(Kind::Malformed, path,
                  "child claims dimension " + std::to_string(child.d) +
                      ", rule needs " + std::to_string(d));
    return {};
  }

  CheckResult node_conditions(const Certificate& c, const std::string& path,
                              std::size_t id) {
    if (c.d < 1) return fail(Kind::Malformed, path, "dimension must be positive");
    switch (c.rule) {
      case Rule::RankLeaf: {
        if (auto r = expect_children(c, path, 0); !r) return r;
        if (!rank_rigid(c, id))
          return fail(Kind::LeafFailed, path, "rank below the rigidity target");
        return {};
      }
      case Rule::CompleteLeaf: {
        if (auto r = expect_children(c, path, 0); !r) return r;
        if (!c.graph.is_complete())
          return fail(Kind::LeafFailed, path, "graph is not complete");
        if (c.graph.num_vertices() < static_cast<std::size_t>(c.d) + 1)
          return fail(Kind::LeafFailed, path, "complete graph has fewer than d + 1 vertices");
        return {};
      }
      case Rule::Cone: {
        if (auto r = expect_children(c, path, 1); !r) return r;
        if (!c.apex) return fail(Kind::Malformed, path, "Cone needs an apex");
        const Certificate& child = c.children[0];
        if (auto r = expect_dim(child, c.d - 1, path); !r) return r;
        if (child.graph.has_vertex(*c.apex))
          return fail(Kind::SideCondition, path, "apex is a vertex of the base graph");
        if (cone_graph(child.graph, *c.apex) != c.graph)
          return fail(Kind::ClaimMismatch, path, "claim is not the cone over the child");
        return {};
      }
      case Rule::Gluing: {
        if (auto r = expect_children(c, path, 2); !r) return r;
        const Graph& g1 = c.children[0].graph;
        const Graph& g2 = c.children[1].graph;
        for (const auto& ch : c.children)
          if (auto r = expect_dim(ch, c.d, path); !r) return r;
        const auto shared = common_vertices(g1, g2);
        if (shared.size() < static_cast<std::size_t>(c.d))
          return fail(Kind::SideCondition, path,
                      "pieces share " + std::to_string(shared.size()) +
                          " vertices, need at least d = " + std::to_string(c.d));
        if (graph_union(g1, g2) != c.graph)
          return fail(Kind::ClaimMismatch, path, "claim is not the union of the pieces");
        return {};
      }
      case Rule::Replacement: {
        if (auto r = expect_children(c, path, 2); !r) return r;
        for (const auto& ch : c.children)
          if (auto r = expect_dim(ch, c.d, path); !r) return r;
        for (Vertex u : c.subset)
          if (!c.graph.has_vertex(u))
            return fail(Kind::SideCondition, path, "U is not a subset of V(G)");
        if (c.children[0].graph != restrict_to(c.graph, c.subset))
          return fail(Kind::ClaimMismatch, path, "first child is not G|_U");
        if (c.children[1].graph != graph_union(c.graph, complete_graph(c.subset)))
          return fail(Kind::ClaimMismatch, path, "second child is not G ∪ K(U)");
        return {};
      }
      case Rule::GluingVariant: {
        if (auto r = expect_children(c, path, 2); !r) return r;
        if (!c.edge) return fail(Kind::Malformed, path, "GluingVariant needs an edge");
        for (const auto& ch : c.children)
          if (auto r = expect_dim(ch, c.d, path); !r) return r;
        const Edge ab = *c.edge;
        const Graph& g1 = c.children[0].graph;
        const Graph& h = c.children[1].graph;
        if (!h.has_edge(ab))
          return fail(Kind::Malformed, path, "second child must contain " + describe(ab));
        // G1|_U = G2|_U forces ab ∈ G2 exactly when ab ∈ G1.
        const Graph g2 = g1.has_edge(ab) ? h : remove_edge(h, ab);
        const auto shared = common_vertices(g1, g2);
        std::vector<Vertex> u(c.subset);
        std::sort(u.begin(), u.end());
        if (u != shared)
          return fail(Kind::SideCondition, path, "U differs from V(G1 ∩ G2)");
        if (!std::binary_search(u.begin(), u.end(), ab.first) ||
            !std::binary_search(u.begin(), u.end(), ab.second))
          return fail(Kind::SideCondition, path, "U must contain a and b");
        if (u.size() < static_cast<std::size_t>(c.d))
          return fail(Kind::SideCondition, path, "U has fewer than d vertices");
        if (restrict_to(g1, u) != restrict_to(g2, u))
          return fail(Kind::SideCondition, path, "G1|_U differs from G2|_U");
        if (graph_union(g1, g2) != c.graph)
          return fail(Kind::ClaimMismatch, path, "claim is not G1 ∪ G2");
        return {};
      }
      case Rule::Augment: {
        if (auto r = expect_children(c, path, 1); !r) return r;
        const Certificate& child = c.children[0];
        if (auto r = expect_dim(child, c.d, path); !r) return r;
        if (child.graph.vertices() != c.graph.vertices() ||
            !is_subgraph(child.graph, c.graph))
          return fail(Kind::SideCondition, path,
                      "child is not a spanning subgraph of the claim");
        return {};
      }
    }
    return fail(Kind::Malformed, path, "unknown rule");
  }

  CheckResult visit(const Certificate& c, const std::string& path) {
    const std::size_t id = node++;
    if (auto r = node_conditions(c, path, id); !r) return r;
    if (mode == CheckMode::CrossCheck && !c.children.empty() && !rank_rigid(c, id))
      return fail(Kind::CrossCheckFailed, path, "internal claim fails the rank test");
    for (std::size_t i = 0; i < c.children.size(); ++i)
      if (auto r = visit(c.children[i], path + "/" + std::to_string(i)); !r)
        return r;
    return {};
  }
};

}  // namespace

std::string_view rule_name(Rule rule) {
  for (const auto& [r, name] : kRuleNames)
    if (r == rule) return name;
  return "?";
}

std::optional<Rule> parse_rule_name(std::string_view name) {
  for (const auto& [r, n] : kRuleNames)
    if (n == name) return r;
  return std::nullopt;
}

Certificate rank_leaf(Graph g, int d) {
  Certificate c;
  c.graph = std::move(g);
  c.d = d;
  c.rule = Rule::RankLeaf;
  return c;
}

Certificate complete_leaf(Graph g, int d) {
  Certificate c = rank_leaf(std::move(g), d);
  c.rule = Rule::CompleteLeaf;
  return c;
}

Certificate cone_rule(Certificate child, Vertex apex) {
  Certificate c;
  c.graph = cone_graph(child.graph, apex);
  c.d = child.d + 1;
  c.rule = Rule::Cone;
  c.apex = apex;
  c.children.push_back(std::move(child));
  return c;
}

Certificate gluing_rule(Certificate first, Certificate second) {
  Certificate c;
  c.graph = graph_union(first.graph, second.graph);
  c.d = first.d;
  c.rule = Rule::Gluing;
  c.children.push_back(std::move(first));
  c.children.push_back(std::move(second));
  return c;
}

Certificate replacement_rule(Graph g, std::vector<Vertex> subset,
                             Certificate restricted, Certificate completed) {
  Certificate c;
  c.graph = std::move(g);
  c.d = restricted.d;
  c.rule = Rule::Replacement;
  std::sort(subset.begin(), subset.end());
  c.subset = std::move(subset);
  c.children.push_back(std::move(restricted));
  c.children.push_back(std::move(completed));
  return c;
}

Certificate gluing_variant_rule(Certificate first, Certificate second, Edge ab) {
  const Graph g2 = first.graph.has_edge(ab) || !second.graph.has_edge(ab)
                       ? second.graph
                       : remove_edge(second.graph, ab);
  Certificate c;
  c.graph = graph_union(first.graph, g2);
  c.d = first.d;
  c.rule = Rule::GluingVariant;
  c.subset = common_vertices(first.graph, g2);
  c.edge = ab;
  c.children.push_back(std::move(first));
  c.children.push_back(std::move(second));
  return c;
}

Certificate augment_rule(Certificate spanning, Graph g) {
  Certificate c;
  c.graph = std::move(g);
  c.d = spanning.d;
  c.rule = Rule::Augment;
  c.children.push_back(std::move(spanning));
  return c;
}

CheckResult check(const Certificate& cert, int trials, Seed seed,
                  CheckMode mode) {
  Checker checker{trials, seed, mode};
  return checker.visit(cert, ".");
}

Certificate certify_star_rigidity(const SimplicialComplex& complex,
                                  const Face& sigma, int d) {
  if (static_cast<int>(sigma.size()) > d - 3)
    throw InvalidInput("certify_star_rigidity: need |σ| <= d - 3, got |σ| = " +
                       std::to_string(sigma.size()));
  if (!complex.has_face(sigma))
    throw InvalidInput("certify_star_rigidity: " + sigma.to_string() +
                       " is not a face");
  if (sigma.empty()) return rank_leaf(graph_of(complex), d);
  const int link_d = d - static_cast<int>(sigma.size());
  Certificate cert = rank_leaf(graph_of(link(complex, sigma)), link_d);
  for (Vertex apex : sigma) cert = cone_rule(std::move(cert), apex);
  return cert;
}

Certificate certify_missing_face_edge(const SimplicialComplex& complex,
                                      const Face& sigma, const Edge& e, int d) {
  const auto missing = missing_faces(complex);
  if (!std::binary_search(missing.begin(), missing.end(), sigma,
                          [](const Face& a, const Face& b) {
                            return a.size() != b.size() ? a.size() < b.size() : a < b;
                          }))
    throw InvalidInput("certify_missing_face_edge: " + sigma.to_string() +
                       " is not a missing face");
  if (sigma.dim() < 2 || sigma.dim() > d - 2)
    throw InvalidInput("certify_missing_face_edge: need 2 <= dim σ <= d - 2");
  const Face ef = e.as_face();
  if (!ef.is_subset_of(sigma))
    throw InvalidInput("certify_missing_face_edge: edge is not contained in σ");

  const Face tau = sigma.minus(ef);
  const Graph full = graph_of(complex);
  const Graph g = remove_edge(full, e);
  const std::vector<Vertex> w = star(complex, tau).vertices();

  Certificate restricted =
      augment_rule(certify_star_rigidity(complex, tau, d), restrict_to(g, w));
  Certificate completed =
      augment_rule(rank_leaf(full, d), graph_union(g, complete_graph(w)));
  return replacement_rule(g, w, std::move(restricted), std::move(completed));
}

std::size_t node_count(const Certificate& cert) {
  std::size_t n = 1;
  for (const auto& c : cert.children) n += node_count(c);
  return n;
}

// Serialization ---------------------------------------------------------------

namespace {

void write_vertices(std::ostream& os, const std::vector<Vertex>& vs) {
  os << '[';
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  os << ']';
}

void write_node(std::ostream& os, const Certificate& c, int depth) {
  os << std::string(2 * depth, ' ') << '(' << rule_name(c.rule) << " d=" << c.d;
  if (c.apex) os << " apex=" << *c.apex;
  if (c.rule == Rule::Replacement || c.rule == Rule::GluingVariant) {
    os << " U=";
    write_vertices(os, c.subset);
  }
  if (c.edge) os << " e=" << *c.edge;
  os << " V=";
  write_vertices(os, c.graph.vertices());
  os << " E=[";
  for (std::size_t i = 0; i < c.graph.num_edges(); ++i)
    os << (i ? " " : "") << c.graph.edges()[i];
  os << ']';
  for (const auto& child : c.children) {
    os << '\n';
    write_node(os, child, depth + 1);
  }
  os << ')';
}

class CertificateParser {
 public:
  explicit CertificateParser(std::string_view text) { tokenize(text); }

  Certificate parse_all() {
    Certificate c = parse_node();
    if (pos_ != tokens_.size()) error("trailing input");
    return c;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw InvalidInput("certificate text: " + what);
  }

  void tokenize(std::string_view text) {
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) tokens_.push_back(std::move(cur));
      cur.clear();
    };
    for (char ch : text) {
      if (ch == '(' || ch == ')' || ch == '[' || ch == ']') {
        flush();
        tokens_.emplace_back(1, ch);
      } else if (ch == ' ' || ch == '\n' || ch == '\t' || ch == '\r') {
        flush();
      } else {
        cur.push_back(ch);
        if (ch == '=') flush();
      }
    }
    flush();
  }

  const std::string& next() {
    if (pos_ >= tokens_.size()) error("unexpected end of input");
    return tokens_[pos_++];
  }
  const std::string* peek() const {
    return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr;
  }

  int parse_int(const std::string& tok) const {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) error("bad integer '" + tok + "'");
    return v;
  }

  Edge parse_edge(const std::string& tok) const {
    const auto dash = tok.find('-');
    if (dash == std::string::npos) error("bad edge '" + tok + "'");
    return Edge(parse_int(tok.substr(0, dash)), parse_int(tok.substr(dash + 1)));
  }

  std::vector<std::string> parse_list() {
    if (next() != "[") error("expected '['");
    std::vector<std::string> out;
    while (true) {
      const std::string& t = next();
      if (t == "]") break;
      out.push_back(t);
    }
    return out;
  }

  Certificate parse_node() {
    if (next() != "(") error("expected '('");
    const auto rule = parse_rule_name(next());
    if (!rule) error("unknown rule");
    Certificate c;
    c.rule = *rule;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    while (const std::string* t = peek()) {
      if (*t == ")" || *t == "(") break;
      const std::string key = next();
      if (key == "d=") {
        c.d = parse_int(next());
      } else if (key == "apex=") {
        c.apex = parse_int(next());
      } else if (key == "e=") {
        c.edge = parse_edge(next());
      } else if (key == "U=") {
        for (const auto& s : parse_list()) c.subset.push_back(parse_int(s));
      } else if (key == "V=") {
        for (const auto& s : parse_list()) vertices.push_back(parse_int(s));
      } else if (key == "E=") {
        for (const auto& s : parse_list()) edges.push_back(parse_edge(s));
      } else {
        error("unknown field '" + key + "'");
      }
    }
    c.graph = Graph(std::move(vertices), std::move(edges));
    while (peek() && *peek() == "(") c.children.push_back(parse_node());
    if (next() != ")") error("expected ')'");
    return c;
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize(const Certificate& cert) {
  std::ostringstream os;
  write_node(os, cert, 0);
  os << '\n';
  return os.str();
}

Certificate parse_certificate(std::string_view text) {
  return CertificateParser(text).parse_all();
}

}  // namespace genrig
