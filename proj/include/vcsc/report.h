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

#ifndef VCSC_REPORT_H_
#define VCSC_REPORT_H_

#include <string>

#include "json.hpp"
#include "vcsc/approx.h"
#include "vcsc/concept_class.h"
#include "vcsc/experiment.h"
#include "vcsc/game.h"
#include "vcsc/scheme.h"

namespace vcsc {

using Json = nlohmann::json;

// Shortest decimal string that parses back to exactly `value`.
std::string ExactDecimal(double value);

Json ToJson(const ShatterWitness& witness);
Json ToJson(const ProbabilityVector& p);
Json ToJson(const ApproximationCertificate& certificate);
Json ToJson(const GameSolution& solution);
Json ToJson(const SparseEquilibrium& equilibrium);
Json ToJson(const SchemeReport& report);
Json ToJson(const ExperimentResult& result);

// Two-space indented JSON with a trailing newline.
std::string DumpJson(const Json& document);

// Writes to `path`, or to stdout when the path is empty. Throws ConfigError
// when the file cannot be written.
void WriteText(const std::string& text, const std::string& path);

}  // namespace vcsc

#endif  // VCSC_REPORT_H_
