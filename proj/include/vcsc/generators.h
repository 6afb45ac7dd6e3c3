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

#ifndef VCSC_GENERATORS_H_
#define VCSC_GENERATORS_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "vcsc/concept_class.h"

namespace vcsc {

// Text form: "kind" or "kind:key=value,key=value", e.g. "intervals:n=10",
// "halfspaces_grid:side=5,r=2", "from_file:path=classes/c.txt".
//
//   intervals          n in [1, 4096]            [a, b] plus the empty set
//   k_interval_unions  n in [1, 20], k >= 0       at most k blocks of ones
//   halfspaces_grid    side >= 1, r in [1, 4],    sign(<w, x> + b) > 0 over
//                      side^r <= 4096,            the centered grid
//                      samples >= 1 (20000)
//   full_cube          n in [1, 16]               all 2^n labelings
//   random_vc_capped   n in [1, 12], m >= 1,      random rows kept while the
//                      cap >= 0                   VC dimension stays <= cap
//   from_file          path                       class file
//
// Every generator is deterministic given the seed; only halfspaces_grid and
// random_vc_capped consume it.
struct GeneratorSpec {
  std::string kind;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;

  std::string ToString() const;
};

// Throws ConfigError on a malformed string. A "seed" key sets the seed.
GeneratorSpec ParseGeneratorSpec(std::string_view text);

// Throws ConfigError on an unknown kind or out-of-range parameters.
ConceptClass Generate(const GeneratorSpec& spec);

ConceptClass Intervals(int n);
ConceptClass IntervalUnions(int n, int k);
ConceptClass HalfspacesGrid(int side, int dimension, int samples,
                            std::uint64_t seed);
ConceptClass FullCube(int n);
ConceptClass RandomVcCapped(int n, int m, int cap, std::uint64_t seed);

}  // namespace vcsc

#endif  // VCSC_GENERATORS_H_
