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

#ifndef VCSC_KERNELS_H_
#define VCSC_KERNELS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "vcsc/concept_class.h"

// Data-parallel inner loops. Every kernel exists twice: a plain serial
// reference and an OpenMP version. Both compute each output element in the
// same order, so their results are bit-identical; tests hold them to that.
namespace vcsc::kernels {

// Row-major binary matrix view.
struct MatrixView {
  int rows = 0;
  int cols = 0;
  std::span<const std::uint8_t> entries;
  std::uint8_t At(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }
};

struct Deviation {
  double max = 0.0;
  int argmax = -1;
};

namespace serial {

// flags[i] = 1 iff candidates[i] is shattered by the class.
std::vector<std::uint8_t> ShatterFlags(
    const ConceptClass& concept_class,
    const std::vector<std::vector<int>>& candidates);

// `classes` groups the concepts by their labels on some point set S (one
// bitset over concepts per labeling of S, all nonempty iff S is shattered).
// flags[x - start] = 1 iff every group has concepts on both sides of point
// x, i.e. S + {x} is shattered, for x in [start, domain_size).
std::vector<std::uint8_t> ExtensionFlags(const ConceptClass& concept_class,
                                         const std::vector<BitRow>& classes,
                                         int start);

// For every concept c of `tests`: |sum_{x : c(x)=1} mass[x] - hits(c)/total|
// where hits(c) = sum_{x : c(x)=1} counts[x]. Returns the maximum and the
// lowest concept index attaining it.
Deviation MaxDeviation(const ConceptClass& tests, std::span<const double> mass,
                       std::span<const int> counts, long total);

// out[r] = sum_c M(r, c) q[c].
void RowPayoffs(const MatrixView& m, std::span<const double> q,
                std::span<double> out);
// out[c] = sum_r p[r] M(r, c).
void ColPayoffs(const MatrixView& m, std::span<const double> p,
                std::span<double> out);

// entries[h * points.size() + i] = 1 iff hypothesis h agrees with labels[i]
// at points[i].
std::vector<std::uint8_t> AgreementMatrix(const ConceptClass& concept_class,
                                          std::span<const int> hypotheses,
                                          std::span<const int> points,
                                          std::span<const std::uint8_t> labels);

}  // namespace serial

namespace parallel {

std::vector<std::uint8_t> ShatterFlags(
    const ConceptClass& concept_class,
    const std::vector<std::vector<int>>& candidates);
std::vector<std::uint8_t> ExtensionFlags(const ConceptClass& concept_class,
                                         const std::vector<BitRow>& classes,
                                         int start);
Deviation MaxDeviation(const ConceptClass& tests, std::span<const double> mass,
                       std::span<const int> counts, long total);
void RowPayoffs(const MatrixView& m, std::span<const double> q,
                std::span<double> out);
void ColPayoffs(const MatrixView& m, std::span<const double> p,
                std::span<double> out);
std::vector<std::uint8_t> AgreementMatrix(const ConceptClass& concept_class,
                                          std::span<const int> hypotheses,
                                          std::span<const int> points,
                                          std::span<const std::uint8_t> labels);

}  // namespace parallel

// Shared per-element helpers, used by both variants.
bool IsShattered(const ConceptClass& concept_class, std::span<const int> set);
bool SplitsAll(const std::vector<BitRow>& classes, const BitRow& column);
double TestDeviation(const BitRow& test, std::span<const double> mass,
                     std::span<const int> counts, long total);

}  // namespace vcsc::kernels

#endif  // VCSC_KERNELS_H_
