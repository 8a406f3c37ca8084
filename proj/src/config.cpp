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

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "genrig/harness.hpp"

namespace genrig {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("config: " + key + " expects an integer, got '" + value + "'");
  }
}

Seed parse_seed(const std::string& value) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(value, &used, 0);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("config: bad seed '" + value + "'");
  }
}

}  // namespace

SuiteConfig parse_config(std::istream& in, Seed default_seed) {
  SuiteConfig config;
  config.seed = default_seed;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidInput("config: line " + std::to_string(lineno) + " is not key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "families") {
      config.families.clear();
      std::istringstream items(value);
      std::string item;
      while (std::getline(items, item, ','))
        if (!trim(item).empty()) config.families.push_back(trim(item));
    } else if (key == "dims") {
      const auto dash = value.find('-');
      if (dash != std::string::npos) {
        config.d_min = static_cast<int>(parse_number(key, trim(value.substr(0, dash))));
        config.d_max = static_cast<int>(parse_number(key, trim(value.substr(dash + 1))));
      } else if (value.find(',') != std::string::npos) {
        std::istringstream items(value);
        std::string item;
        int lo = 1 << 20, hi = -1;
        while (std::getline(items, item, ',')) {
          const int v = static_cast<int>(parse_number(key, trim(item)));
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        config.d_min = lo;
        config.d_max = hi;
      } else {
        config.d_min = config.d_max = static_cast<int>(parse_number(key, value));
      }
    } else if (key == "trials") {
      config.trials = static_cast<int>(parse_number(key, value));
    } else if (key == "seed") {
      config.seed = parse_seed(value);
    } else if (key == "flip_count") {
      config.flip_count = static_cast<std::size_t>(parse_number(key, value));
    } else if (key == "flip_steps") {
      config.flip_steps = static_cast<std::size_t>(parse_number(key, value));
    } else {
      throw InvalidInput("config: unknown key '" + key + "'");
    }
  }
  validate(config);
  return config;
}

SuiteConfig read_config_file(const std::string& path, Seed default_seed) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read config " + path);
  return parse_config(in, default_seed);
}

Seed default_seed() {
  if (const char* env = std::getenv("GENRIG_SEED"); env && *env) {
    try {
      return std::stoull(env, nullptr, 0);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("GENRIG_SEED is not an integer: ") + env);
    }
  }
  return 20181103;
}

}  // namespace genrig
