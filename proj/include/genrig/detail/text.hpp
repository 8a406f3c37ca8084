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

#include <charconv>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "genrig/face.hpp"

namespace genrig::detail {

/// Reads rows of non-negative integer labels, skipping '#' comments and
/// blank lines.
inline std::vector<std::vector<Vertex>> read_label_rows(std::istream& in,
                                                        std::string_view what) {
  std::vector<std::vector<Vertex>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::vector<Vertex> row;
    while (pos < line.size()) {
      const std::size_t end = line.find_first_of(" \t\r", pos);
      const std::string_view tok(line.data() + pos,
                                 (end == std::string::npos ? line.size() : end) - pos);
      Vertex v{};
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0)
        throw InvalidInput(std::string(what) + ": line " +
                           std::to_string(lineno) + ": bad vertex label '" +
                           std::string(tok) + "'");
      row.push_back(v);
      pos = end == std::string::npos ? line.size()
                                     : line.find_first_not_of(" \t\r", end);
      if (pos == std::string::npos) pos = line.size();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace genrig::detail
