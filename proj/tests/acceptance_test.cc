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

// Runs the nine acceptance criteria with the default configuration and
// prints one PASS/FAIL line per criterion. Criteria with a runtime budget
// fail when they exceed it. Optional arguments restrict the run to the
// listed criterion ids.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <vector>

#include "vcsc/suites.h"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) ids = vcsc::DefaultCriteria("full");

  const std::map<int, double> budget_seconds = {{1, 300.0}, {5, 60.0},
                                                {8, 120.0}};
  const vcsc::SuiteConfig config;
  int failed = 0;
  for (int id : ids) {
    vcsc::CriterionResult result;
    try {
      result = vcsc::RunCriterion(id, config);
    } catch (const std::exception& e) {
      result.id = id;
      result.pass = false;
      result.summary = std::string("error: ") + e.what();
    }
    bool pass = result.pass;
    std::string summary = result.summary;
    if (auto it = budget_seconds.find(id);
        it != budget_seconds.end() && result.seconds > it->second) {
      pass = false;
      summary += " [over the " + std::to_string(static_cast<int>(it->second)) +
                 "s budget]";
    }
    if (!pass) ++failed;
    std::printf("%s criterion %d %s: %s (%.2fs)\n", pass ? "PASS" : "FAIL", id,
                vcsc::CriterionName(id), summary.c_str(), result.seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(ids.size()) - failed, ids.size());
  return failed == 0 ? 0 : 1;
}
