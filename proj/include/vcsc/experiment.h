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

#ifndef VCSC_EXPERIMENT_H_
#define VCSC_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "vcsc/approx.h"
#include "vcsc/concept_class.h"
#include "vcsc/scheme.h"

namespace vcsc {

// ceil(8 (k log2(2/epsilon) + log2(1/delta)) / epsilon).
long RequiredSampleSize(double scheme_size, double epsilon, double delta);

struct ExperimentConfig {
  std::optional<int> target;  // concept index; a fresh random one per trial if unset
  std::vector<double> distribution;  // over the domain; empty means uniform
  double epsilon = 1.0 / 3.0;
  double delta = 1.0 / 3.0;
  int trials = 200;
  std::uint64_t seed = 0;
  // Compressions run before the trials to measure the scheme size.
  int pilot_runs = 16;
  // Allowed excess of the failure fraction over delta.
  double slack = 0.1;
  SchemeOptions scheme;
};

struct ExperimentResult {
  // Largest kernel_size + info_bits seen in the pilot runs, and its parts.
  long measured_scheme_size = 0;
  long measured_kernel = 0;
  long measured_info_bits = 0;
  long scheme_size_ceiling = 0;
  long sample_size = 0;              // from measured_scheme_size
  long sample_size_kernel_only = 0;  // same formula with the kernel alone
  int trials = 0;
  int failures = 0;  // trials with true error > epsilon
  double failure_fraction = 0.0;
  double bound = 0.0;  // delta + slack
  double mean_error = 0.0;
  double max_error = 0.0;
  std::vector<double> errors;  // per trial
  bool pass = false;
};

// Each trial labels d i.i.d. draws from the distribution with the target,
// compresses, reconstructs, and measures the exact error of the hypothesis
// under the distribution. The compressor only sees the distinct labeled
// points, so the draws stop once every point of the support is hit.
// Throws ConfigError on a bad configuration.
ExperimentResult RunGeneralizationExperiment(const ConceptClass& concept_class,
                                             const ExperimentConfig& config);

}  // namespace vcsc

#endif  // VCSC_EXPERIMENT_H_
