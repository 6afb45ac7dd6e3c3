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

#include <bit>
#include <algorithm>
#include <cmath>

#include "vcsc/kernels.h"

namespace vcsc::kernels {

bool IsShattered(const ConceptClass& concept_class, std::span<const int> set) {
  const int k = static_cast<int>(set.size());
  if (k >= 31 || (std::int64_t{1} << k) > concept_class.size()) return false;
  const std::size_t patterns = std::size_t{1} << k;
  std::vector<std::uint8_t> seen(patterns, 0);
  std::size_t found = 0;
  for (int c = 0; c < concept_class.size(); ++c) {
    const BitRow& row = concept_class.row(c);
    std::size_t pattern = 0;
    for (int i = 0; i < k; ++i) {
      pattern |= static_cast<std::size_t>(row.Get(set[i])) << i;
    }
    if (!seen[pattern]) {
      seen[pattern] = 1;
      if (++found == patterns) return true;
    }
  }
  return false;
}

bool SplitsAll(const std::vector<BitRow>& classes, const BitRow& column) {
  const std::vector<std::uint64_t>& col = column.words();
  for (const BitRow& group : classes) {
    const std::vector<std::uint64_t>& g = group.words();
    std::uint64_t inside = 0;
    std::uint64_t outside = 0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      inside |= g[k] & col[k];
      outside |= g[k] & ~col[k];
    }
    if (inside == 0 || outside == 0) return false;
  }
  return true;
}

double TestDeviation(const BitRow& test, std::span<const double> mass,
                     std::span<const int> counts, long total) {
  double covered = 0.0;
  long hits = 0;
  const auto& words = test.words();
  for (std::size_t k = 0; k < words.size(); ++k) {
    std::uint64_t w = words[k];
    while (w != 0) {
      const std::size_t x = k * 64 + std::countr_zero(w);
      covered += mass[x];
      hits += counts[x];
      w &= w - 1;
    }
  }
  return std::fabs(covered - static_cast<double>(hits) /
                                 static_cast<double>(total));
}

namespace serial {

std::vector<std::uint8_t> ShatterFlags(
    const ConceptClass& concept_class,
    const std::vector<std::vector<int>>& candidates) {
  std::vector<std::uint8_t> flags(candidates.size(), 0);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    flags[i] = IsShattered(concept_class, candidates[i]) ? 1 : 0;
  }
  return flags;
}

std::vector<std::uint8_t> ExtensionFlags(const ConceptClass& concept_class,
                                         const std::vector<BitRow>& classes,
                                         int start) {
  const int n = concept_class.domain_size();
  std::vector<std::uint8_t> flags(std::max(0, n - start), 0);
  for (int x = start; x < n; ++x) {
    flags[x - start] = SplitsAll(classes, concept_class.column(x)) ? 1 : 0;
  }
  return flags;
}

Deviation MaxDeviation(const ConceptClass& tests, std::span<const double> mass,
                       std::span<const int> counts, long total) {
  Deviation out;
  for (int c = 0; c < tests.size(); ++c) {
    const double d = TestDeviation(tests.row(c), mass, counts, total);
    if (out.argmax < 0 || d > out.max) {
      out.max = d;
      out.argmax = c;
    }
  }
  return out;
}

void RowPayoffs(const MatrixView& m, std::span<const double> q,
                std::span<double> out) {
  for (int r = 0; r < m.rows; ++r) {
    double acc = 0.0;
    for (int c = 0; c < m.cols; ++c) {
      if (m.At(r, c)) acc += q[c];
    }
    out[r] = acc;
  }
}

void ColPayoffs(const MatrixView& m, std::span<const double> p,
                std::span<double> out) {
  for (int c = 0; c < m.cols; ++c) out[c] = 0.0;
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) {
      if (m.At(r, c)) out[c] += p[r];
    }
  }
}

std::vector<std::uint8_t> AgreementMatrix(const ConceptClass& concept_class,
                                          std::span<const int> hypotheses,
                                          std::span<const int> points,
                                          std::span<const std::uint8_t> labels) {
  const std::size_t width = points.size();
  std::vector<std::uint8_t> entries(hypotheses.size() * width);
  for (std::size_t h = 0; h < hypotheses.size(); ++h) {
    const BitRow& row = concept_class.row(hypotheses[h]);
    for (std::size_t i = 0; i < width; ++i) {
      entries[h * width + i] = row.Get(points[i]) == (labels[i] != 0);
    }
  }
  return entries;
}

}  // namespace serial
}  // namespace vcsc::kernels
