// Copyright 2026 The vcsc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vcsc/generators.h"

#include <charconv>
#include <cmath>
#include <set>
#include <vector>

#include "vcsc/errors.h"
#include "vcsc/rng.h"

namespace vcsc {
namespace {

long GetInt(const GeneratorSpec& spec, const std::string& key,
            std::optional<long> fallback = std::nullopt) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    if (fallback) return *fallback;
    throw ConfigError(spec.kind + ": missing parameter '" + key + "'");
  }
  long value = 0;
  const std::string& text = it->second;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ConfigError(spec.kind + ": parameter '" + key +
                      "' is not an integer: '" + text + "'");
  }
  return value;
}

void Require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

void CheckKeys(const GeneratorSpec& spec,
               std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : spec.params) {
    bool found = false;
    for (std::string_view a : allowed) found = found || key == a;
    if (!found) {
      throw ConfigError(spec.kind + ": unknown parameter '" + key + "'");
    }
  }
}

}  // namespace

std::string GeneratorSpec::ToString() const {
  std::string out = kind;
  char sep = ':';
  for (const auto& [key, value] : params) {
    out += sep;
    out += key + "=" + value;
    sep = ',';
  }
  if (seed != 0) {
    out += sep;
    out += "seed=" + std::to_string(seed);
  }
  return out;
}

GeneratorSpec ParseGeneratorSpec(std::string_view text) {
  GeneratorSpec spec;
  const std::size_t colon = text.find(':');
  spec.kind = std::string(text.substr(0, colon));
  if (spec.kind.empty()) throw ConfigError("empty generator kind");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ConfigError("generator parameter '" + std::string(item) +
                        "' is not key=value");
    }
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    if (key == "seed") {
      auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(),
                                       spec.seed);
      if (ec != std::errc() || end != value.data() + value.size()) {
        throw ConfigError("generator seed is not an unsigned integer: '" +
                          value + "'");
      }
    } else if (!spec.params.emplace(key, value).second) {
      throw ConfigError("generator parameter '" + key + "' given twice");
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return spec;
}

ConceptClass Intervals(int n) {
  Require(n >= 1 && n <= 4096, "intervals: n must be in [1, 4096]");
  std::vector<BitRow> rows;
  rows.emplace_back(n);
  for (int a = 0; a < n; ++a) {
    BitRow row(n);
    for (int b = a; b < n; ++b) {
      row.Set(b, true);
      rows.push_back(row);
    }
  }
  return ConceptClass::Create(n, std::move(rows));
}

ConceptClass IntervalUnions(int n, int k) {
  Require(n >= 1 && n <= 20, "k_interval_unions: n must be in [1, 20]");
  Require(k >= 0, "k_interval_unions: k must be >= 0");
  std::vector<BitRow> rows;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    // Blocks of ones start where a one follows a zero (or the left edge).
    const int blocks = std::popcount(mask & ~(mask << 1));
    if (blocks > k) continue;
    BitRow row(n);
    for (int i = 0; i < n; ++i) row.Set(i, (mask >> i) & 1u);
    rows.push_back(std::move(row));
  }
  return ConceptClass::Create(n, std::move(rows));
}

ConceptClass HalfspacesGrid(int side, int dimension, int samples,
                            std::uint64_t seed) {
  Require(side >= 1, "halfspaces_grid: side must be >= 1");
  Require(dimension >= 1 && dimension <= 4,
          "halfspaces_grid: r must be in [1, 4]");
  Require(samples >= 1, "halfspaces_grid: samples must be >= 1");
  long n = 1;
  for (int i = 0; i < dimension; ++i) {
    n *= side;
    Require(n <= 4096, "halfspaces_grid: side^r must be <= 4096");
  }
  // Grid points centered at the origin; point x gets coordinates (x, 1).
  std::vector<std::vector<double>> points(n, std::vector<double>(dimension));
  double radius = 0.0;
  for (long x = 0; x < n; ++x) {
    long rest = x;
    double norm2 = 0.0;
    for (int i = 0; i < dimension; ++i) {
      points[x][i] = static_cast<double>(rest % side) - (side - 1) / 2.0;
      rest /= side;
      norm2 += points[x][i] * points[x][i];
    }
    radius = std::max(radius, std::sqrt(norm2));
  }
  Rng rng(seed);
  std::set<BitRow> patterns;
  std::vector<double> w(dimension);
  for (int s = 0; s < samples; ++s) {
    // Random direction and an offset spanning the grid, so every threshold
    // position is reachable.
    double norm2 = 0.0;
    for (double& wi : w) {
      wi = rng.Gaussian();
      norm2 += wi * wi;
    }
    const double scale = norm2 > 0 ? 1.0 / std::sqrt(norm2) : 0.0;
    const double bias = (2.0 * rng.UniformDouble() - 1.0) * (radius + 1.0);
    BitRow row(static_cast<int>(n));
    for (long x = 0; x < n; ++x) {
      double dot = bias;
      for (int i = 0; i < dimension; ++i) dot += scale * w[i] * points[x][i];
      if (dot > 0) row.Set(static_cast<int>(x), true);
    }
    patterns.insert(std::move(row));
  }
  return ConceptClass::Create(
      static_cast<int>(n), std::vector<BitRow>(patterns.begin(), patterns.end()));
}

ConceptClass FullCube(int n) {
  Require(n >= 1 && n <= 16, "full_cube: n must be in [1, 16]");
  std::vector<BitRow> rows;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    BitRow row(n);
    for (int i = 0; i < n; ++i) row.Set(i, (mask >> i) & 1u);
    rows.push_back(std::move(row));
  }
  return ConceptClass::Create(n, std::move(rows));
}

ConceptClass RandomVcCapped(int n, int m, int cap, std::uint64_t seed) {
  Require(n >= 1 && n <= 12, "random_vc_capped: n must be in [1, 12]");
  Require(m >= 1, "random_vc_capped: m must be >= 1");
  Require(cap >= 0, "random_vc_capped: cap must be >= 0");
  Rng rng(seed);
  std::set<BitRow> kept;
  const long attempts = 64L * m;
  for (long a = 0; a < attempts && static_cast<int>(kept.size()) < m; ++a) {
    BitRow row(n);
    for (int i = 0; i < n; ++i) row.Set(i, rng.Next() & 1u);
    if (kept.count(row)) continue;
    std::vector<BitRow> candidate(kept.begin(), kept.end());
    candidate.push_back(row);
    if (VcDimension(ConceptClass::Create(n, std::move(candidate))) <= cap) {
      kept.insert(std::move(row));
    }
  }
  return ConceptClass::Create(n,
                              std::vector<BitRow>(kept.begin(), kept.end()));
}

ConceptClass Generate(const GeneratorSpec& spec) {
  const std::string& kind = spec.kind;
  if (kind == "intervals") {
    CheckKeys(spec, {"n"});
    return Intervals(static_cast<int>(GetInt(spec, "n")));
  }
  if (kind == "k_interval_unions") {
    CheckKeys(spec, {"n", "k"});
    return IntervalUnions(static_cast<int>(GetInt(spec, "n")),
                          static_cast<int>(GetInt(spec, "k")));
  }
  if (kind == "halfspaces_grid") {
    CheckKeys(spec, {"side", "r", "samples"});
    return HalfspacesGrid(static_cast<int>(GetInt(spec, "side")),
                          static_cast<int>(GetInt(spec, "r")),
                          static_cast<int>(GetInt(spec, "samples", 20000)),
                          spec.seed);
  }
  if (kind == "full_cube") {
    CheckKeys(spec, {"n"});
    return FullCube(static_cast<int>(GetInt(spec, "n")));
  }
  if (kind == "random_vc_capped") {
    CheckKeys(spec, {"n", "m", "cap"});
    return RandomVcCapped(static_cast<int>(GetInt(spec, "n")),
                          static_cast<int>(GetInt(spec, "m")),
                          static_cast<int>(GetInt(spec, "cap")), spec.seed);
  }
  if (kind == "from_file") {
    CheckKeys(spec, {"path"});
    auto it = spec.params.find("path");
    if (it == spec.params.end()) throw ConfigError("from_file: missing 'path'");
    return ReadConceptClassFile(it->second);
  }
  throw ConfigError("unknown generator kind '" + kind + "'");
}

}  // namespace vcsc
