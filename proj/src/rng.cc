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

#include "vcsc/rng.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vcsc {

std::uint64_t Rng::UniformInt(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return x % bound;
}

double Rng::Gaussian() {
  double u1 = UniformDouble();
  while (u1 <= 0.0) u1 = UniformDouble();
  const double u2 = UniformDouble();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

int Rng::Categorical(std::span<const double> prefix_sums) {
  const double total = prefix_sums.back();
  const double u = UniformDouble() * total;
  auto it = std::upper_bound(prefix_sums.begin(), prefix_sums.end(), u);
  if (it != prefix_sums.end()) {
    return static_cast<int>(it - prefix_sums.begin());
  }
  // u rounded up to the total: take the last entry with positive weight.
  int index = static_cast<int>(prefix_sums.size()) - 1;
  while (index > 0 && prefix_sums[index] == prefix_sums[index - 1]) --index;
  return index;
}

}  // namespace vcsc
