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
#include <optional>
#include <string>
#include <vector>

#include "genrig/complex.hpp"
#include "genrig/graph.hpp"
#include "genrig/random.hpp"

namespace genrig {

enum class Verdict { Pass, Fail, Skip };
std::string_view verdict_name(Verdict v);

struct CheckRecord {
  std::string check;
  std::string instance;
  Verdict verdict = Verdict::Pass;
  long rank = -1;
  long target = -1;
  Seed seed = 0;
  double elapsed_ms = 0.0;
  std::string detail;
};

struct Report {
  std::vector<CheckRecord> records;

  std::size_t count(Verdict v) const;
  std::size_t passed() const { return count(Verdict::Pass); }
  std::size_t failed() const { return count(Verdict::Fail); }
  std::size_t skipped() const { return count(Verdict::Skip); }
  std::size_t total() const { return records.size(); }
  bool ok() const { return failed() == 0; }

  void append(const Report& other);
};

/// One tab-separated line per record: check, instance, verdict, rank, target,
/// seed. Timing is left out so equal inputs give byte-identical output.
std::string machine_format(const Report& report);
/// Aligned table with timing and details, followed by summary counts.
std::string human_format(const Report& report);

struct Expectation {
  std::optional<bool> prime;
  std::optional<long> g2;
  std::optional<bool> stacked;
};

struct CorpusEntry {
  std::string name;
  SimplicialComplex complex;
  int d = 0;
  Expectation expected;
};

/// Recomputes primeness, g2 and stackedness; throws InvalidInput if any
/// provided expectation disagrees or the complex is not a (d-1)-pseudomanifold.
CorpusEntry make_entry(std::string name, SimplicialComplex complex, int d,
                       Expectation expected = {});

/// G(Δ) - e is d-rigid for every edge; gated on d >= 4, primeness, g2 > 0.
Report verify_minus_edge(const CorpusEntry& entry, int trials, Seed seed);
Report verify_minus_edge(const SimplicialComplex& complex, int d, int trials,
                         Seed seed, const std::string& name = "complex");

/// Stacks Γ over its first facet; every new edge e has
/// rank(G(Δ) - e) = target - 1.
Report verify_negative_control(const SimplicialComplex& gamma, int d,
                               int trials, Seed seed,
                               const std::string& name = "complex");

/// Missing k-faces with 2 <= k <= d - 2: engine and certificate for each
/// edge of the face.
Report verify_missing_face_lemma(const SimplicialComplex& complex, int d,
                                 int trials, Seed seed,
                                 const std::string& name = "complex");

/// rank(Rig(G(Δ) - e, ψ)) = rank(Rig(G(Δ^{↓e}), ψ')) + 4 with both endpoints
/// of e placed at the merged vertex, plus the rank of G(Δ) - e at a generic
/// point. Skips when the preconditions of the reduction fail.
Report verify_contraction_reduction(const SimplicialComplex& complex,
                                    const Edge& e, int trials, Seed seed,
                                    const std::string& name = "complex");

/// Stars of all faces with |σ| <= d - 3, by certificate and by rank.
Report verify_star_rigidity(const SimplicialComplex& complex, int d,
                            int trials, Seed seed,
                            const std::string& name = "complex");

/// stress_space_dim(G(Δ), d) == g2(Δ) and G(Δ) is rigid.
Report verify_g2_stress(const SimplicialComplex& complex, int d, int trials,
                        Seed seed, const std::string& name = "complex");

struct SuiteConfig {
  std::vector<std::string> families{"simplex", "cross-polytope", "joins",
                                    "cyclic", "flip-walks"};
  int d_min = 4;
  int d_max = 6;
  int trials = 3;
  Seed seed = 0;
  std::size_t flip_count = 4;
  std::size_t flip_steps = 30;
};

/// Known family names, in canonical order.
const std::vector<std::string>& known_families();

/// Flat key=value text: families, dims (e.g. "4-6" or "4,5"), trials, seed,
/// flip_count, flip_steps. '#' lines are comments.
SuiteConfig parse_config(std::istream& in, Seed default_seed);
SuiteConfig read_config_file(const std::string& path, Seed default_seed);
/// Throws InvalidInput on unknown families or bad ranges.
void validate(const SuiteConfig& config);

/// $GENRIG_SEED when set, otherwise a fixed constant.
Seed default_seed();

std::vector<CorpusEntry> build_corpus(const SuiteConfig& config);

/// Every verify_* check over the configured corpus.
Report run_suite(const SuiteConfig& config);

}  // namespace genrig
