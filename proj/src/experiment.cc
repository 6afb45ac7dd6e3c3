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

#include "vcsc/experiment.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vcsc/errors.h"
#include "vcsc/rng.h"

namespace vcsc {

long RequiredSampleSize(double scheme_size, double epsilon, double delta) {
  if (!(epsilon > 0 && epsilon < 1) || !(delta > 0 && delta < 1)) {
    throw ConfigError("epsilon and delta must lie in (0, 1)");
  }
  if (scheme_size < 0) throw ConfigError("scheme size must be >= 0");
  const double d =
      8.0 * (scheme_size * std::log2(2.0 / epsilon) + std::log2(1.0 / delta)) /
      epsilon;
  return static_cast<long>(std::ceil(d - 1e-9));
}

namespace {

class PointSampler {
 public:
  explicit PointSampler(const std::vector<double>& weights) {
    double total = 0.0;
    for (std::size_t x = 0; x < weights.size(); ++x) {
      total += weights[x];
      prefix_.push_back(total);
      if (weights[x] > 0) ++support_;
    }
  }

  // Distinct points among `draws` i.i.d. draws.
  std::vector<int> Draw(long draws, Rng& rng) const {
    std::vector<std::uint8_t> hit(prefix_.size(), 0);
    int distinct = 0;
    for (long i = 0; i < draws && distinct < support_; ++i) {
      const int x = rng.Categorical(prefix_);
      if (!hit[x]) {
        hit[x] = 1;
        ++distinct;
      }
    }
    std::vector<int> out;
    for (std::size_t x = 0; x < hit.size(); ++x) {
      if (hit[x]) out.push_back(static_cast<int>(x));
    }
    return out;
  }

 private:
  std::vector<double> prefix_;
  int support_ = 0;
};

LabeledSample Label(const ConceptClass& concept_class, int target,
                    const std::vector<int>& points) {
  LabeledSample sample;
  for (int x : points) sample.Add(x, concept_class.Value(target, x));
  return sample;
}

}  // namespace

ExperimentResult RunGeneralizationExperiment(const ConceptClass& concept_class,
                                             const ExperimentConfig& config) {
  const int n = concept_class.domain_size();
  if (concept_class.empty()) throw ConfigError("the class has no concepts");
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  if (config.pilot_runs < 0) throw ConfigError("pilot_runs must be >= 0");
  if (config.target &&
      (*config.target < 0 || *config.target >= concept_class.size())) {
    throw ConfigError("target concept index out of range");
  }
  std::vector<double> mu = config.distribution;
  if (mu.empty()) mu.assign(n, 1.0 / n);
  if (static_cast<int>(mu.size()) != n) {
    throw ConfigError("distribution has " + std::to_string(mu.size()) +
                      " entries for a domain of size " + std::to_string(n));
  }
  try {
    ProbabilityVector::Create(mu);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("distribution: ") + e.what());
  }

  SchemeOptions options = config.scheme;
  if (!options.vc_dimension) options.vc_dimension = VcDimension(concept_class);
  if (!options.dual_vc_dimension) {
    options.dual_vc_dimension = VcDimension(DualClass(concept_class));
  }
  const PointSampler sampler(mu);
  const Rng root(config.seed);
  auto pick_target = [&](Rng& rng) {
    return config.target ? *config.target
                         : static_cast<int>(rng.UniformInt(concept_class.size()));
  };

  ExperimentResult result;
  // Pilot: samples of a few sizes plus the whole support, all targets random.
  {
    Rng rng = root.Split(1);
    for (int i = 0; i <= config.pilot_runs; ++i) {
      const int target = pick_target(rng);
      const long draws = i == config.pilot_runs
                             ? std::numeric_limits<long>::max()
                             : static_cast<long>(n) << (2 * (i % 3));
      const LabeledSample sample =
          Label(concept_class, target, sampler.Draw(draws, rng));
      const SchemeReport report =
          Compress(concept_class, sample, rng.Next(), options).second;
      if (report.scheme_size > result.measured_scheme_size) {
        result.measured_scheme_size = report.scheme_size;
      }
      result.measured_kernel =
          std::max<long>(result.measured_kernel, report.kernel_size);
      result.measured_info_bits =
          std::max(result.measured_info_bits, report.info_bits);
      result.scheme_size_ceiling =
          std::max(result.scheme_size_ceiling, report.scheme_size_ceiling);
    }
  }
  result.sample_size = RequiredSampleSize(
      static_cast<double>(result.measured_scheme_size), config.epsilon,
      config.delta);
  result.sample_size_kernel_only = RequiredSampleSize(
      static_cast<double>(result.measured_kernel), config.epsilon,
      config.delta);

  Rng rng = root.Split(2);
  result.trials = config.trials;
  result.bound = config.delta + config.slack;
  for (int trial = 0; trial < config.trials; ++trial) {
    const int target = pick_target(rng);
    const LabeledSample sample =
        Label(concept_class, target, sampler.Draw(result.sample_size, rng));
    const CompressedSample compressed =
        Compress(concept_class, sample, rng.Next(), options).first;
    const BitRow h = Reconstruct(concept_class, compressed);
    double error = 0.0;
    for (int x = 0; x < n; ++x) {
      if (h.Get(x) != concept_class.Value(target, x)) error += mu[x];
    }
    result.errors.push_back(error);
    result.mean_error += error / config.trials;
    result.max_error = std::max(result.max_error, error);
    if (error > config.epsilon) ++result.failures;
  }
  result.failure_fraction =
      static_cast<double>(result.failures) / config.trials;
  result.pass = result.failure_fraction <= result.bound;
  return result;
}

}  // namespace vcsc
