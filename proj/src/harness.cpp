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

#include "genrig/harness.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "genrig/certificate.hpp"
#include "genrig/generators.hpp"
#include "genrig/rigidity.hpp"

namespace genrig {
namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_ = Clock::now();
};

std::string edge_name(const Edge& e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

CheckRecord skip(std::string check, std::string instance, Seed seed,
                 std::string why) {
  CheckRecord r;
  r.check = std::move(check);
  r.instance = std::move(instance);
  r.verdict = Verdict::Skip;
  r.seed = seed;
  r.detail = std::move(why);
  return r;
}

bool is_pure_of_dim(const SimplicialComplex& c, int d) {
  return c.is_pure() && c.dim() == d - 1;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skip: return "skip";
  }
  return "?";
}

std::size_t Report::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(),
      [v](const CheckRecord& r) { return r.verdict == v; }));
}

void Report::append(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

std::string machine_format(const Report& report) {
  std::ostringstream os;
  for (const auto& r : report.records)
    os << r.check << '\t' << r.instance << '\t' << verdict_name(r.verdict) << '\t'
       << r.rank << '\t' << r.target << '\t' << r.seed << '\n';
  return os.str();
}

std::string human_format(const Report& report) {
  std::size_t wc = 5, wi = 8;
  for (const auto& r : report.records) {
    wc = std::max(wc, r.check.size());
    wi = std::max(wi, r.instance.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(wc)) << "check" << "  "
     << std::setw(static_cast<int>(wi)) << "instance" << "  verdict  "
     << std::right << std::setw(6) << "rank" << ' ' << std::setw(6) << "target"
     << ' ' << std::setw(10) << "ms" << "  detail\n";
  for (const auto& r : report.records) {
    os << std::left << std::setw(static_cast<int>(wc)) << r.check << "  "
       << std::setw(static_cast<int>(wi)) << r.instance << "  "
       << std::setw(7) << verdict_name(r.verdict) << "  " << std::right
       << std::setw(6) << r.rank << ' ' << std::setw(6) << r.target << ' '
       << std::setw(10) << std::fixed << std::setprecision(2) << r.elapsed_ms
       << "  " << r.detail;
    if (r.verdict == Verdict::Fail) os << " (seed " << r.seed << ")";
    os << '\n';
  }
  os << "total " << report.total() << ": " << report.passed() << " pass, "
     << report.failed() << " fail, " << report.skipped() << " skip\n";
  return os.str();
}

CorpusEntry make_entry(std::string name, SimplicialComplex complex, int d,
                       Expectation expected) {
  if (!check_pseudomanifold(complex, d))
    throw InvalidInput("corpus entry " + name + " is not a pseudomanifold");
  const bool prime = is_prime(complex, d);
  const long g = g2(complex, d);
  bool stacked = false;
  if (d >= 3 && g == 0) {
    try {
      stacked_ball(complex, d);
      stacked = true;
    } catch (const InvalidInput&) {
    }
  }
  if (expected.prime && *expected.prime != prime)
    throw InvalidInput("corpus entry " + name + ": primeness differs from expectation");
  if (expected.g2 && *expected.g2 != g)
    throw InvalidInput("corpus entry " + name + ": g2 is " + std::to_string(g) +
                       ", expected " + std::to_string(*expected.g2));
  if (expected.stacked && *expected.stacked != stacked)
    throw InvalidInput("corpus entry " + name + ": stackedness differs from expectation");
  return {std::move(name), std::move(complex), d, {prime, g, stacked}};
}

Report verify_minus_edge(const CorpusEntry& entry, int trials, Seed seed) {
  return verify_minus_edge(entry.complex, entry.d, trials, seed, entry.name);
}

Report verify_minus_edge(const SimplicialComplex& complex, int d, int trials,
                         Seed seed, const std::string& name) {
  const std::string check_name = "minus_edge";
  Report report;
  if (d < 4) {
    report.records.push_back(skip(check_name, name, seed, "gate: d < 4"));
    return report;
  }
  if (!is_pure_of_dim(complex, d) || !is_prime(complex, d)) {
    report.records.push_back(skip(check_name, name, seed, "gate: not prime"));
    return report;
  }
  if (g2(complex, d) <= 0) {
    report.records.push_back(skip(check_name, name, seed, "gate: g2 = 0"));
    return report;
  }
  const Graph g = graph_of(complex);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    Timer timer;
    const Edge& e = g.edges()[i];
    const Seed s = mix_seed(seed, i);
    const auto verdict = decide_rigidity(remove_edge(g, e), d, trials, s);
    CheckRecord r;
    r.check = check_name;
    r.instance = name + " e=" + edge_name(e);
    r.verdict = verdict.is_rigid ? Verdict::Pass : Verdict::Fail;
    r.rank = verdict.rank;
    r.target = verdict.target_rank;
    r.seed = s;
    r.elapsed_ms = timer.elapsed_ms();
    report.records.push_back(std::move(r));
  }
  return report;
}

Report verify_negative_control(const SimplicialComplex& gamma, int d,
                               int trials, Seed seed, const std::string& name) {
  Report report;
  const Face facet = gamma.facets().front();
  const Vertex apex = gamma.max_vertex() + 1;
  const SimplicialComplex stacked = stack_over_facet(gamma, facet, apex);
  const Graph g = graph_of(stacked);
  for (std::size_t i = 0; i < facet.size(); ++i) {
    Timer timer;
    const Edge e(facet[i], apex);
    const Seed s = mix_seed(seed, i);
    const auto verdict = decide_rigidity(remove_edge(g, e), d, trials, s);
    CheckRecord r;
    r.check = "negative_control";
    r.instance = name + "+stack e=" + edge_name(e);
    r.verdict = (!verdict.is_rigid && verdict.rank == verdict.target_rank - 1)
                    ? Verdict::Pass
                    : Verdict::Fail;
    r.rank = verdict.rank;
    r.target = verdict.target_rank;
    r.seed = s;
    r.detail = "expected deficit 1, got " +
               std::to_string(verdict.target_rank - verdict.rank);
    r.elapsed_ms = timer.elapsed_ms();
    report.records.push_back(std::move(r));
  }
  return report;
}

Report verify_missing_face_lemma(const SimplicialComplex& complex, int d,
                                 int trials, Seed seed, const std::string& name) {
  const std::string check_name = "missing_face_lemma";
  Report report;
  if (d < 4) {
    report.records.push_back(skip(check_name, name, seed, "needs d >= 4"));
    return report;
  }
  const Graph g = graph_of(complex);
  std::size_t stream = 0;
  for (const Face& sigma : missing_faces(complex)) {
    if (sigma.dim() < 2 || sigma.dim() > d - 2) continue;
    for (const Face& pair : sigma.subsets(2)) {
      Timer timer;
      const Edge e(pair[0], pair[1]);
      const Seed s = mix_seed(seed, stream++);
      const auto verdict = decide_rigidity(remove_edge(g, e), d, trials, s);
      const auto cert = certify_missing_face_edge(complex, sigma, e, d);
      const auto checked = check(cert, trials, s);
      CheckRecord r;
      r.check = check_name;
      r.instance = name + " σ=" + sigma.to_string() + " e=" + edge_name(e);
      r.verdict = verdict.is_rigid && checked.ok() ? Verdict::Pass : Verdict::Fail;
      r.rank = verdict.rank;
      r.target = verdict.target_rank;
      r.seed = s;
      r.detail = checked.ok() ? "certificate ok"
                              : "certificate: " + checked.path + " " + checked.reason;
      r.elapsed_ms = timer.elapsed_ms();
      report.records.push_back(std::move(r));
    }
  }
  if (report.records.empty()) {
    CheckRecord r;
    r.check = check_name;
    r.instance = name;
    r.seed = seed;
    r.detail = "vacuous: no missing k-face with 2 <= k <= d - 2";
    report.records.push_back(std::move(r));
  }
  return report;
}

Report verify_contraction_reduction(const SimplicialComplex& complex,
                                    const Edge& e, int trials, Seed seed,
                                    const std::string& name) {
  const std::string instance = name + " e=" + edge_name(e);
  Report report;
  auto skipped = [&](std::string why) {
    report.records.push_back(skip("contraction_degenerate", instance, seed, why));
    report.records.push_back(skip("contraction_generic", instance, seed, std::move(why)));
    return report;
  };
  constexpr int d = 4;
  if (!is_pure_of_dim(complex, d)) return skipped("needs a pure 3-dimensional complex");
  if (!is_prime(complex, d)) return skipped("not prime");
  const Face ef = e.as_face();
  if (!complex.has_face(ef)) return skipped("not an edge of the complex");
  const SimplicialComplex lk = link(complex, ef);
  if (lk.num_vertices() < 4) return skipped("link of e has fewer than 4 vertices");
  if (lk != intersection(link(complex, Face{e.first}), link(complex, Face{e.second})))
    return skipped("link condition fails");

  Timer timer;
  const Vertex merged = complex.max_vertex() + 1;
  const SimplicialComplex contracted = contract_edge(complex, ef, merged);
  const Graph gc = graph_of(contracted);
  const Graph minus = remove_edge(graph_of(complex), e);

  // ψ' generic on the contraction; ψ places a and b at ψ'(merged).
  const Seed s = mix_seed(seed, 0);
  const auto psi_c = random_embedding(gc, d, s);
  Embedding<Fp61> psi(d, minus.vertices());
  for (Vertex v : minus.vertices()) {
    const Vertex src = (v == e.first || v == e.second) ? merged : v;
    psi.point(v) = psi_c.point(src);
  }
  const long lhs = rank(rigidity_matrix(minus, psi));
  const long rc = rank(rigidity_matrix(gc, psi_c));
  const long target_c = rigidity_target_rank(static_cast<long>(gc.num_vertices()), d);
  CheckRecord degenerate;
  degenerate.check = "contraction_degenerate";
  degenerate.instance = instance;
  degenerate.rank = lhs;
  degenerate.target = rc + 4;
  degenerate.seed = s;
  degenerate.verdict = lhs == rc + 4 && rc == target_c ? Verdict::Pass : Verdict::Fail;
  degenerate.detail = "rank(contraction) = " + std::to_string(rc) + " of " +
                      std::to_string(target_c);
  degenerate.elapsed_ms = timer.elapsed_ms();
  report.records.push_back(std::move(degenerate));

  Timer generic_timer;
  const Seed s2 = mix_seed(seed, 1);
  const auto verdict = decide_rigidity(minus, d, trials, s2);
  CheckRecord generic;
  generic.check = "contraction_generic";
  generic.instance = instance;
  generic.rank = verdict.rank;
  generic.target = verdict.target_rank;
  generic.seed = s2;
  generic.verdict = verdict.is_rigid && verdict.rank == lhs ? Verdict::Pass : Verdict::Fail;
  generic.detail = "degenerate rank " + std::to_string(lhs);
  generic.elapsed_ms = generic_timer.elapsed_ms();
  report.records.push_back(std::move(generic));
  return report;
}

Report verify_star_rigidity(const SimplicialComplex& complex, int d, int trials,
                            Seed seed, const std::string& name) {
  Report report;
  std::size_t stream = 0;
  for (int k = 0; k <= d - 3; ++k) {
    for (const Face& sigma : complex.faces_of_size(static_cast<std::size_t>(k))) {
      Timer timer;
      const Seed s = mix_seed(seed, stream++);
      const auto cert = certify_star_rigidity(complex, sigma, d);
      const auto checked = check(cert, trials, s);
      const auto verdict = decide_rigidity(cert.graph, d, trials, s);
      // The certificate's claim must be the graph of the star.
      const bool claim_ok = cert.graph == graph_of(star(complex, sigma));
      CheckRecord r;
      r.check = "star_rigidity";
      r.instance = name + " σ=" + sigma.to_string();
      r.verdict = checked.ok() && verdict.is_rigid && claim_ok ? Verdict::Pass
                                                                : Verdict::Fail;
      r.rank = verdict.rank;
      r.target = verdict.target_rank;
      r.seed = s;
      r.detail = checked.ok() ? "certificate ok"
                              : "certificate: " + checked.path + " " + checked.reason;
      r.elapsed_ms = timer.elapsed_ms();
      report.records.push_back(std::move(r));
    }
  }
  return report;
}

Report verify_g2_stress(const SimplicialComplex& complex, int d, int trials,
                        Seed seed, const std::string& name) {
  Timer timer;
  const Graph g = graph_of(complex);
  const auto verdict = decide_rigidity(g, d, trials, seed);
  const long expected = g2(complex, d);
  CheckRecord r;
  r.check = "g2_stress";
  r.instance = name;
  r.rank = verdict.rank;
  r.target = verdict.target_rank;
  r.seed = seed;
  r.verdict = verdict.is_rigid && verdict.stress_dim == expected ? Verdict::Pass
                                                                  : Verdict::Fail;
  r.detail = "stress " + std::to_string(verdict.stress_dim) + ", g2 " +
             std::to_string(expected);
  r.elapsed_ms = timer.elapsed_ms();
  Report report;
  report.records.push_back(std::move(r));
  return report;
}

const std::vector<std::string>& known_families() {
  static const std::vector<std::string> names{
      "simplex", "cross-polytope", "joins",   "cyclic",
      "flip-walks", "stacked",     "negative-control"};
  return names;
}

void validate(const SuiteConfig& config) {
  const auto& known = known_families();
  for (const auto& f : config.families)
    if (std::find(known.begin(), known.end(), f) == known.end())
      throw InvalidInput("unknown family '" + f + "'");
  if (config.d_min < 3 || config.d_max < config.d_min || config.d_max > 8)
    throw InvalidInput("dims must satisfy 3 <= min <= max <= 8");
  if (config.trials < 1) throw InvalidInput("trials must be at least 1");
}

namespace {

bool wants(const SuiteConfig& config, std::string_view family) {
  return std::find(config.families.begin(), config.families.end(), family) !=
         config.families.end();
}

std::string named(std::string_view family, std::initializer_list<int> args) {
  std::string s(family);
  s += '(';
  bool first = true;
  for (int a : args) {
    if (!first) s += ',';
    s += std::to_string(a);
    first = false;
  }
  return s + ')';
}

}  // namespace

std::vector<CorpusEntry> build_corpus(const SuiteConfig& config) {
  validate(config);
  std::vector<CorpusEntry> corpus;
  for (int d = config.d_min; d <= config.d_max; ++d) {
    if (wants(config, "simplex"))
      corpus.push_back(make_entry(named("boundary_simplex", {d}),
                                  boundary_simplex(d), d, {true, 0, true}));
    if (wants(config, "cross-polytope"))
      corpus.push_back(make_entry(named("cross_polytope", {d}), cross_polytope(d),
                                  d, {true, d * (d - 3L) / 2, false}));
    if (wants(config, "joins")) {
      for (int p = 2; 2 * p <= d; ++p)
        if (d - p >= 2)
          corpus.push_back(make_entry(named("join_spheres", {p, d - p}),
                                      join_spheres(p, d - p), d, {true, 1, false}));
      if (d >= 4)
        for (int k = 4; k <= (d == 4 ? 7 : 5); ++k)
          corpus.push_back(make_entry(named("join_simplex_cycle", {d, k}),
                                      join_simplex_cycle(d, k), d, {true, 1, false}));
    }
    if (wants(config, "cyclic"))
      for (int n = d + 2; n <= d + 4; ++n)
        corpus.push_back(make_entry(named("cyclic_polytope_boundary", {n, d}),
                                    cyclic_polytope_boundary(n, d), d));
    if (wants(config, "stacked")) {
      const auto s = boundary_simplex(d);
      const auto once = stack_over_facet(s, s.facets().front(), s.max_vertex() + 1);
      corpus.push_back(make_entry(named("stacked_simplex", {d, 1}), once, d,
                                  {false, 0, true}));
      const auto c = cross_polytope(d);
      corpus.push_back(make_entry(
          named("cross_polytope_sum_simplex", {d}),
          connected_sum(c, c.facets().front(), s, s.facets().front()), d,
          {false, d * (d - 3L) / 2, false}));
    }
    if (wants(config, "flip-walks")) {
      FlipWalkOptions options;
      options.keep_prime = true;
      const auto walk = random_flip_walk(cross_polytope(d), config.flip_steps,
                                         mix_seed(config.seed, 1000 + d), options);
      std::vector<SimplicialComplex> distinct;
      for (const auto& c : walk) {
        if (distinct.size() >= config.flip_count) break;
        if (std::find(distinct.begin(), distinct.end(), c) == distinct.end())
          distinct.push_back(c);
      }
      for (std::size_t i = 0; i < distinct.size(); ++i)
        corpus.push_back(make_entry(
            "flip_walk(" + std::to_string(d) + ",#" + std::to_string(i) + ")",
            distinct[i], d, {true, std::nullopt, false}));
    }
  }
  return corpus;
}

Report run_suite(const SuiteConfig& config) {
  validate(config);
  const auto corpus = build_corpus(config);
  Report report;
  std::size_t stream = 0;
  for (const auto& entry : corpus) {
    const Seed s = mix_seed(config.seed, stream++);
    report.append(verify_g2_stress(entry.complex, entry.d, config.trials, s, entry.name));
    report.append(verify_minus_edge(entry, config.trials, mix_seed(s, 1)));
    report.append(verify_missing_face_lemma(entry.complex, entry.d, config.trials,
                                            mix_seed(s, 2), entry.name));
    report.append(verify_star_rigidity(entry.complex, entry.d, config.trials,
                                       mix_seed(s, 3), entry.name));
    if (entry.d == 4) {
      const Graph g = graph_of(entry.complex);
      for (std::size_t i = 0; i < g.num_edges(); ++i)
        report.append(verify_contraction_reduction(
            entry.complex, g.edges()[i], config.trials, mix_seed(s, 100 + i),
            entry.name));
    }
  }
  if (wants(config, "negative-control")) {
    for (int d = config.d_min; d <= config.d_max; ++d) {
      const Seed s = mix_seed(config.seed, stream++);
      report.append(verify_negative_control(boundary_simplex(d), d, config.trials, s,
                                            named("boundary_simplex", {d})));
      report.append(verify_negative_control(cross_polytope(d), d, config.trials,
                                            mix_seed(s, 1), named("cross_polytope", {d})));
    }
  }
  return report;
}

}  // namespace genrig
