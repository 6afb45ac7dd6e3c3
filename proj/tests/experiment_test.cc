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

#include <cmath>

#include "doctest.h"
#include "vcsc/errors.h"
#include "vcsc/generators.h"

namespace vcsc {
namespace {

TEST_CASE("Required sample size") {
  CHECK(RequiredSampleSize(5, 1.0 / 3, 1.0 / 3) == 349);
  // Direct evaluation of the formula.
  for (double k : {1.0, 7.0, 40.0}) {
    for (double eps : {0.5, 0.1}) {
      const double raw =
          8.0 * (k * std::log2(2.0 / eps) + std::log2(1.0 / 0.05)) / eps;
      CHECK(RequiredSampleSize(k, eps, 0.05) == std::ceil(raw - 1e-9));
    }
  }
}

TEST_CASE("Singleton class never errs") {
  const ConceptClass single = ConceptClass::FromStrings({"011010"});
  ExperimentConfig config;
  config.trials = 20;
  config.seed = 3;
  const ExperimentResult r = RunGeneralizationExperiment(single, config);
  CHECK(r.trials == 20);
  CHECK(r.failures == 0);
  CHECK(r.max_error == 0.0);
  CHECK(r.pass);
}

TEST_CASE("Intervals meet the bound") {
  const ConceptClass c = Intervals(10);
  ExperimentConfig config;
  config.trials = 200;
  config.seed = 1;
  const ExperimentResult r = RunGeneralizationExperiment(c, config);
  CHECK(r.sample_size ==
        RequiredSampleSize(r.measured_scheme_size, config.epsilon, config.delta));
  CHECK(r.errors.size() == 200);
  CHECK(r.failure_fraction <= config.delta + config.slack);
  CHECK(r.pass);
  CHECK(r.measured_scheme_size <= r.scheme_size_ceiling);
}

TEST_CASE("Skewed distribution and fixed target") {
  const ConceptClass c = IntervalUnions(8, 2);
  ExperimentConfig config;
  config.trials = 30;
  config.seed = 2;
  config.target = 5;
  config.distribution = {0.3, 0.2, 0.1, 0.1, 0.1, 0.1, 0.05, 0.05};
  const ExperimentResult r = RunGeneralizationExperiment(c, config);
  CHECK(r.pass);
  for (double e : r.errors) CHECK(e <= 1.0);
}

TEST_CASE("Bad configurations are refused") {
  const ConceptClass c = Intervals(5);
  ExperimentConfig config;
  config.epsilon = 0.0;
  CHECK_THROWS_AS(RunGeneralizationExperiment(c, config), ConfigError);
  config = ExperimentConfig();
  config.distribution = {0.5, 0.5};
  CHECK_THROWS_AS(RunGeneralizationExperiment(c, config), ConfigError);
  config = ExperimentConfig();
  config.target = 99;
  CHECK_THROWS_AS(RunGeneralizationExperiment(c, config), ConfigError);
  config = ExperimentConfig();
  config.trials = 0;
  CHECK_THROWS_AS(RunGeneralizationExperiment(c, config), ConfigError);
}

}  // namespace
}  // namespace vcsc
