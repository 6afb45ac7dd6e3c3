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

#include "vcsc/report.h"

#include <charconv>
#include <fstream>
#include <iostream>

#include "vcsc/errors.h"

namespace vcsc {

std::string ExactDecimal(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

Json ToJson(const ShatterWitness& witness) {
  return {{"set", witness.set}, {"witness_concepts", witness.witness_concepts}};
}

Json ToJson(const ProbabilityVector& p) {
  Json out = Json::array();
  for (double w : p.weights()) out.push_back(ExactDecimal(w));
  return out;
}

Json ToJson(const ApproximationCertificate& certificate) {
  return {{"multiset", certificate.multiset},
          {"size", certificate.size()},
          {"max_deviation", ExactDecimal(certificate.max_deviation)},
          {"epsilon", ExactDecimal(certificate.epsilon)},
          {"vc_dimension", certificate.vc_dimension},
          {"size_ceiling", certificate.size_ceiling},
          {"draw_size", certificate.draw_size},
          {"attempts", certificate.attempts},
          {"doubled", certificate.doubled}};
}

Json ToJson(const GameSolution& solution) {
  return {{"row_strategy", ToJson(solution.row_strategy)},
          {"col_strategy", ToJson(solution.col_strategy)},
          {"value", ExactDecimal(solution.value_estimate)},
          {"exploitability", ExactDecimal(solution.exploitability)},
          {"iterations", solution.iterations}};
}

Json ToJson(const SparseEquilibrium& equilibrium) {
  return {{"row_multiset", equilibrium.row_multiset},
          {"col_multiset", equilibrium.col_multiset},
          {"epsilon", ExactDecimal(equilibrium.epsilon)},
          {"certified_exploitability",
           ExactDecimal(equilibrium.certified_exploitability)},
          {"value_lower", ExactDecimal(equilibrium.value_lower)},
          {"value_upper", ExactDecimal(equilibrium.value_upper)},
          {"rows_vc", equilibrium.rows_vc},
          {"columns_vc", equilibrium.columns_vc},
          {"row_certificate", ToJson(equilibrium.row_certificate)},
          {"col_certificate", ToJson(equilibrium.col_certificate)}};
}

Json ToJson(const SchemeReport& report) {
  return {{"kernel_size", report.kernel_size},
          {"info_bits", report.info_bits},
          {"subset_count", report.subset_count},
          {"subset_budget", report.subset_budget},
          {"scheme_size", report.scheme_size},
          {"sample_size", report.sample_size},
          {"distinct_points", report.distinct_points},
          {"vc_dimension", report.vc_dimension},
          {"dual_vc_dimension", report.dual_vc_dimension},
          {"c_apx", report.c_apx},
          {"mode", report.mode},
          {"hypotheses", report.hypotheses},
          {"escalations", report.escalations},
          {"weak_min_agreement", ExactDecimal(report.weak_min_agreement)},
          {"sparsify_deviation", ExactDecimal(report.sparsify_deviation)},
          {"min_agreeing_votes", report.min_agreeing_votes},
          {"majority_ok", report.majority_ok},
          {"margin_ok", report.margin_ok},
          {"ceilings",
           {{"subset_count", report.subset_count_ceiling},
            {"kernel", report.kernel_ceiling},
            {"info_bits", report.info_bits_ceiling},
            {"scheme_size", report.scheme_size_ceiling}}}};
}

Json ToJson(const ExperimentResult& result) {
  Json errors = Json::array();
  for (double e : result.errors) errors.push_back(ExactDecimal(e));
  return {{"measured_scheme_size", result.measured_scheme_size},
          {"measured_kernel", result.measured_kernel},
          {"measured_info_bits", result.measured_info_bits},
          {"scheme_size_ceiling", result.scheme_size_ceiling},
          {"sample_size", result.sample_size},
          {"sample_size_kernel_only", result.sample_size_kernel_only},
          {"trials", result.trials},
          {"failures", result.failures},
          {"failure_fraction", result.failure_fraction},
          {"bound", result.bound},
          {"mean_error", result.mean_error},
          {"max_error", result.max_error},
          {"errors", errors},
          {"pass", result.pass}};
}

std::string DumpJson(const Json& document) { return document.dump(2) + "\n"; }

void WriteText(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw ConfigError("cannot write " + path);
}

}  // namespace vcsc
