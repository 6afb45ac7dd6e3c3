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

#ifndef VCSC_RNG_H_
#define VCSC_RNG_H_

#include <cstdint>
#include <span>

namespace vcsc {

// Counter-based generator: the i-th output is a SplitMix64 finalization of
// key + i * gamma. Outputs are a pure function of (key, counter), so streams
// are reproducible across platforms and cheap to split.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(Mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  std::uint64_t Next() {
    return Mix(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL);
  }

  // Independent child stream; does not advance this generator.
  Rng Split(std::uint64_t stream) const {
    Rng child(0);
    child.key_ = Mix(key_ ^ Mix(stream + 0xbb67ae8584caa73bULL));
    return child;
  }

  // Uniform in [0, 1) with 53 bits of resolution.
  double UniformDouble() { return (Next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound). Rejection sampling keeps it unbiased.
  std::uint64_t UniformInt(std::uint64_t bound);

  // Standard normal via Box-Muller.
  double Gaussian();

  // Index drawn with probability proportional to weights (all >= 0, sum > 0),
  // given their inclusive prefix sums.
  int Categorical(std::span<const double> prefix_sums);

  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace vcsc

#endif  // VCSC_RNG_H_
