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

#include "genrig/complex_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "genrig/detail/text.hpp"

namespace genrig {

SimplicialComplex read_facet_list(std::istream& in) {
  std::vector<Face> facets;
  for (auto& row : detail::read_label_rows(in, "facet list"))
    facets.emplace_back(std::move(row));
  if (facets.empty()) throw InvalidInput("facet list: no facets");
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex read_facet_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_facet_list(in);
}

SimplicialComplex parse_facet_list(const std::string& text) {
  std::istringstream in(text);
  return read_facet_list(in);
}

void write_facet_list(std::ostream& out, const SimplicialComplex& complex) {
  for (const Face& f : complex.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
}

std::string to_facet_list(const SimplicialComplex& complex) {
  std::ostringstream out;
  write_facet_list(out, complex);
  return out.str();
}

}  // namespace genrig
