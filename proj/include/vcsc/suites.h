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

#ifndef VCSC_SUITES_H_
#define VCSC_SUITES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vcsc/report.h"

namespace vcsc {

inline constexpr int kCriterionCount = 9;

// Suite configuration. Either a JSON object or flat "key = value" lines
// ('#' starts a comment). Keys:
//   profile            "full" (default) or "singleton"
//   criteria           list of criterion ids; default all that the profile runs
//   seed               unsigned integer, default 1
//   class_file         extra class added to the class-driven criteria
//   random_samples     per-class random samples in criterion 1 (1000)
//   codec_trials       randomized codec round trips in criterion 9 (10000)
//   experiment_trials  trials of the generalization experiment (200)
struct SuiteConfig {
  std::string profile = "full";
  std::vector<int> criteria;
  std::uint64_t seed = 1;
  std::optional<std::string> class_file;
  int random_samples = 1000;
  int codec_trials = 10000;
  int experiment_trials = 200;
};

// Throws ConfigError naming `origin` and the offending line.
SuiteConfig ParseSuiteConfig(std::string_view text, const std::string& origin);
SuiteConfig LoadSuiteConfig(const std::string& path);

const char* CriterionName(int id);

// Criteria the profile runs when none are listed.
std::vector<int> DefaultCriteria(const std::string& profile);

struct CriterionResult {
  int id = 0;
  bool pass = false;
  std::string summary;
  Json details;
  double seconds = 0.0;
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;  // ascending id
  bool pass = false;
};

// Loads the class file first, so a broken file fails before any work.
// Throws ConfigError or ParseError on bad configuration input.
SuiteResult RunSuite(const SuiteConfig& config);

CriterionResult RunCriterion(int id, const SuiteConfig& config);

// Everything except wall-clock times goes under "criteria"; the times sit
// under "timing" when requested.
Json SuiteReport(const SuiteConfig& config, const SuiteResult& result,
                 bool include_timing);

}  // namespace vcsc

#endif  // VCSC_SUITES_H_
