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

#include <algorithm>

#include "vcsc/kernels.h"

namespace vcsc::kernels::parallel {

namespace {
// Below these sizes a parallel region costs more than it saves.
constexpr std::size_t kMinShatterCandidates = 64;
constexpr int kMinDeviationTests = 256;
constexpr std::size_t kMinMatrixEntries = 1 << 14;
constexpr long kMinExtensionWork = 1 << 14;
}  // namespace

std::vector<std::uint8_t> ShatterFlags(
    const ConceptClass& concept_class,
    const std::vector<std::vector<int>>& candidates) {
  const long count = static_cast<long>(candidates.size());
  std::vector<std::uint8_t> flags(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic, 16) \
    if (candidates.size() >= kMinShatterCandidates)
  for (long i = 0; i < count; ++i) {
    flags[i] = IsShattered(concept_class, candidates[i]) ? 1 : 0;
  }
  return flags;
}

std::vector<std::uint8_t> ExtensionFlags(const ConceptClass& concept_class,
                                         const std::vector<BitRow>& classes,
                                         int start) {
  const int n = concept_class.domain_size();
  std::vector<std::uint8_t> flags(std::max(0, n - start), 0);
  const long work = static_cast<long>(n - start) * classes.size() *
                    (concept_class.size() / 64 + 1);
#pragma omp parallel for schedule(static) if (work >= kMinExtensionWork)
  for (int x = start; x < n; ++x) {
    flags[x - start] = SplitsAll(classes, concept_class.column(x)) ? 1 : 0;
  }
  return flags;
}

Deviation MaxDeviation(const ConceptClass& tests, std::span<const double> mass,
                       std::span<const int> counts, long total) {
  const int n = tests.size();
  std::vector<double> deviations(n);
#pragma omp parallel for schedule(static) if (n >= kMinDeviationTests)
  for (int c = 0; c < n; ++c) {
    deviations[c] = TestDeviation(tests.row(c), mass, counts, total);
  }
  Deviation out;
  for (int c = 0; c < n; ++c) {
    if (out.argmax < 0 || deviations[c] > out.max) {
      out.max = deviations[c];
      out.argmax = c;
    }
  }
  return out;
}

void RowPayoffs(const MatrixView& m, std::span<const double> q,
                std::span<double> out) {
  const std::size_t work = static_cast<std::size_t>(m.rows) * m.cols;
#pragma omp parallel for schedule(static) if (work >= kMinMatrixEntries)
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
  const std::size_t work = static_cast<std::size_t>(m.rows) * m.cols;
#pragma omp parallel for schedule(static) if (work >= kMinMatrixEntries)
  for (int c = 0; c < m.cols; ++c) {
    double acc = 0.0;
    for (int r = 0; r < m.rows; ++r) {
      if (m.At(r, c)) acc += p[r];
    }
    out[c] = acc;
  }
}

std::vector<std::uint8_t> AgreementMatrix(const ConceptClass& concept_class,
                                          std::span<const int> hypotheses,
                                          std::span<const int> points,
                                          std::span<const std::uint8_t> labels) {
  const std::size_t width = points.size();
  const long height = static_cast<long>(hypotheses.size());
  std::vector<std::uint8_t> entries(hypotheses.size() * width);
#pragma omp parallel for schedule(static) \
    if (hypotheses.size() * width >= kMinMatrixEntries)
  for (long h = 0; h < height; ++h) {
    const BitRow& row = concept_class.row(hypotheses[h]);
    for (std::size_t i = 0; i < width; ++i) {
      entries[h * width + i] = row.Get(points[i]) == (labels[i] != 0);
    }
  }
  return entries;
}

}  // namespace vcsc::kernels::parallel
