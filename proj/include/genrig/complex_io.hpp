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

#include <iosfwd>
#include <string>

#include "genrig/complex.hpp"

namespace genrig {

// Facet-list text format: one facet per line as whitespace-separated vertex
// labels. Lines starting with '#' and blank lines are ignored.

SimplicialComplex read_facet_list(std::istream& in);
SimplicialComplex read_facet_list_file(const std::string& path);
SimplicialComplex parse_facet_list(const std::string& text);

void write_facet_list(std::ostream& out, const SimplicialComplex& complex);
std::string to_facet_list(const SimplicialComplex& complex);

}  // namespace genrig
