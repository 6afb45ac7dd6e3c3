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

#ifndef VCSC_TESTS_ORACLES_H_
#define VCSC_TESTS_ORACLES_H_

// Deliberately naive reimplementations used to check the library.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "vcsc/concept_class.h"

namespace vcsc::oracle {

// Label pattern of concept c on `set`, as a string.
inline std::string Pattern(const ConceptClass& cls, int c,
                           const std::vector<int>& set) {
  std::string out;
  for (int x : set) out += cls.Value(c, x) ? '1' : '0';
  return out;
}

inline bool Shattered(const ConceptClass& cls, const std::vector<int>& set) {
  std::set<std::string> patterns;
  for (int c = 0; c < cls.size(); ++c) patterns.insert(Pattern(cls, c, set));
  return patterns.size() == (std::size_t{1} << set.size());
}

// Largest shattered subset over all 2^n subsets of at most max_size points,
// no early exit.
inline int VcDimension(const ConceptClass& cls, int max_size = 32) {
  const int n = cls.domain_size();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > max_size) continue;
    std::vector<int> set;
    for (int x = 0; x < n; ++x) {
      if ((mask >> x) & 1u) set.push_back(x);
    }
    if (Shattered(cls, set)) best = std::max(best, static_cast<int>(set.size()));
  }
  return best;
}

// Transpose, keep distinct columns as strings.
inline std::set<std::string> DualRows(const ConceptClass& cls) {
  std::set<std::string> out;
  for (int x = 0; x < cls.domain_size(); ++x) {
    std::string column;
    for (int c = 0; c < cls.size(); ++c) column += cls.Value(c, x) ? '1' : '0';
    out.insert(column);
  }
  return out;
}

inline std::vector<int> Consistent(const ConceptClass& cls,
                                   const std::vector<std::pair<int, bool>>& s) {
  std::vector<int> out;
  for (int c = 0; c < cls.size(); ++c) {
    bool ok = true;
    for (const auto& [x, label] : s) ok = ok && cls.Value(c, x) == label;
    if (ok) out.push_back(c);
  }
  return out;
}

// max over concepts of |mu(c) - frequency of c on the multiset|.
inline double Deviation(const ConceptClass& cls, const std::vector<double>& mu,
                        const std::vector<int>& multiset) {
  double worst = 0.0;
  for (int c = 0; c < cls.size(); ++c) {
    double mass = 0.0;
    for (int x = 0; x < cls.domain_size(); ++x) {
      if (cls.Value(c, x)) mass += mu[x];
    }
    double hits = 0.0;
    for (int x : multiset) hits += cls.Value(c, x);
    worst = std::max(worst, std::abs(mass - hits / multiset.size()));
  }
  return worst;
}

// min over columns of p^T M and max over rows of M q.
inline double RowGuarantee(const std::vector<std::vector<int>>& m,
                           const std::vector<double>& p) {
  double worst = 1e300;
  for (std::size_t c = 0; c < m[0].size(); ++c) {
    double v = 0.0;
    for (std::size_t r = 0; r < m.size(); ++r) v += p[r] * m[r][c];
    worst = std::min(worst, v);
  }
  return worst;
}
inline double ColGuarantee(const std::vector<std::vector<int>>& m,
                           const std::vector<double>& q) {
  double worst = -1e300;
  for (std::size_t r = 0; r < m.size(); ++r) {
    double v = 0.0;
    for (std::size_t c = 0; c < m[0].size(); ++c) v += q[c] * m[r][c];
    worst = std::max(worst, v);
  }
  return worst;
}

}  // namespace vcsc::oracle

#endif  // VCSC_TESTS_ORACLES_H_
