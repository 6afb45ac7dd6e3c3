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

#include "vcsc/suites.h"

#include <chrono>
#include <string>

#include "doctest.h"
#include "vcsc/errors.h"

namespace vcsc {
namespace {

const std::string kData = VCSC_TEST_DATA_DIR;

int ErrorLine(const std::string& text) {
  try {
    ParseSuiteConfig(text, "cfg");
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    return std::stoi(what.substr(4));  // "cfg:<line>: ..."
  }
  return -1;
}

TEST_CASE("Key-value configuration") {
  const SuiteConfig c = ParseSuiteConfig(
      "# comment\nprofile = singleton\n\ncriteria = 1, 3,7\nseed=42 # trailing\n"
      "random_samples = 5\ncodec_trials = 9\nexperiment_trials = 11\n",
      "cfg");
  CHECK(c.profile == "singleton");
  CHECK(c.criteria == std::vector<int>{1, 3, 7});
  CHECK(c.seed == 42);
  CHECK(c.random_samples == 5);
  CHECK(c.codec_trials == 9);
  CHECK(c.experiment_trials == 11);
  CHECK_FALSE(c.class_file.has_value());

  CHECK(ErrorLine("seed = 1\n\nnonsense\n") == 3);
  CHECK(ErrorLine("colour = blue\n") == 1);
  CHECK(ErrorLine("seed = 1\nseed = -4\n") == 2);
  CHECK(ErrorLine("seed = 1\ncriteria = 1,x\n") == 2);
  CHECK_THROWS_AS(ParseSuiteConfig("criteria = 10\n", "cfg"), ConfigError);
  CHECK_THROWS_AS(ParseSuiteConfig("profile = tiny\n", "cfg"), ConfigError);
  CHECK_THROWS_AS(ParseSuiteConfig("codec_trials = 0\n", "cfg"), ConfigError);
}

TEST_CASE("JSON configuration") {
  const SuiteConfig c = ParseSuiteConfig(
      R"({"profile": "full", "criteria": [2, 9], "seed": 5,
          "class_file": "x.txt"})",
      "cfg");
  CHECK(c.criteria == std::vector<int>{2, 9});
  CHECK(c.seed == 5);
  CHECK(c.class_file == "x.txt");
  CHECK_THROWS_AS(ParseSuiteConfig("{\"seed\": ", "cfg"), ConfigError);
  CHECK_THROWS_AS(ParseSuiteConfig(R"({"seed": 1.5})", "cfg"), ConfigError);
  CHECK_THROWS_AS(ParseSuiteConfig(R"({"criteria": ["a"]})", "cfg"), ConfigError);
  CHECK_THROWS_AS(ParseSuiteConfig(R"({"extra": "1"})", "cfg"), ConfigError);
}

TEST_CASE("Configuration files") {
  const SuiteConfig a = LoadSuiteConfig(kData + "/singleton.conf");
  const SuiteConfig b = LoadSuiteConfig(kData + "/singleton.json");
  CHECK(a.profile == b.profile);
  CHECK(a.seed == b.seed);
  CHECK_THROWS_AS(LoadSuiteConfig(kData + "/bad_key.conf"), ConfigError);
  CHECK_THROWS_AS(LoadSuiteConfig(kData + "/missing.conf"), ConfigError);
}

TEST_CASE("Singleton profile passes quickly") {
  const SuiteConfig config = LoadSuiteConfig(kData + "/singleton.conf");
  const auto start = std::chrono::steady_clock::now();
  const SuiteResult result = RunSuite(config);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  CHECK(result.pass);
  CHECK(result.criteria.size() == DefaultCriteria("singleton").size());
  for (const CriterionResult& r : result.criteria) {
    CHECK_MESSAGE(r.pass, r.summary);
  }
  CHECK(seconds < 1.0);
}

TEST_CASE("Reports are reproducible apart from timing") {
  SuiteConfig config;
  config.criteria = {2, 6};
  config.seed = 3;
  const std::string a = SuiteReport(config, RunSuite(config), false).dump();
  const std::string b = SuiteReport(config, RunSuite(config), false).dump();
  CHECK(a == b);
  const Json timed = SuiteReport(config, RunSuite(config), true);
  CHECK(timed.contains("timing"));
  CHECK_FALSE(Json::parse(a).contains("timing"));

  config = SuiteConfig();
  config.profile = "singleton";
  CHECK(SuiteReport(config, RunSuite(config), false).dump() ==
        SuiteReport(config, RunSuite(config), false).dump());
}

TEST_CASE("A corrupted class file stops the suite") {
  SuiteConfig config;
  config.profile = "singleton";
  config.class_file = kData + "/corrupted_class.txt";
  try {
    RunSuite(config);
    FAIL("suite accepted a corrupted class file");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("An extra class file joins the criteria") {
  SuiteConfig config;
  config.profile = "singleton";
  config.criteria = {3, 7};
  config.class_file = kData + "/intervals6.txt";
  const SuiteResult result = RunSuite(config);
  CHECK(result.pass);
  const std::string report = SuiteReport(config, result, false).dump();
  CHECK(report.find("intervals6.txt") != std::string::npos);
}

TEST_CASE("Unknown criteria are configuration errors") {
  SuiteConfig config;
  CHECK_THROWS_AS(RunCriterion(0, config), ConfigError);
  CHECK(std::string(CriterionName(9)) == "codec");
}

}  // namespace
}  // namespace vcsc
