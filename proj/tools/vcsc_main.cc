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

// Command-line front end for the vcsc library.
//
// Exit codes: 0 pass, 1 verdict failure, 2 configuration or I/O error.

#include <bit>
#include <charconv>
#include <functional>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vcsc/approx.h"
#include "vcsc/concept_class.h"
#include "vcsc/errors.h"
#include "vcsc/experiment.h"
#include "vcsc/game.h"
#include "vcsc/generators.h"
#include "vcsc/learner.h"
#include "vcsc/report.h"
#include "vcsc/rng.h"
#include "vcsc/scheme.h"
#include "vcsc/suites.h"

namespace vcsc {
namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitConfig = 2;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string class_file;
  std::string class_spec;
  std::string out;
};

ConceptClass LoadClass(const GlobalOptions& g) {
  if (!g.class_file.empty() && !g.class_spec.empty()) {
    throw ConfigError("give either --class-file or --class, not both");
  }
  if (!g.class_file.empty()) return ReadConceptClassFile(g.class_file);
  if (!g.class_spec.empty()) {
    GeneratorSpec spec = ParseGeneratorSpec(g.class_spec);
    if (spec.seed == 0) spec.seed = g.seed;
    return Generate(spec);
  }
  throw ConfigError("a class is required: --class-file PATH or --class SPEC");
}

// "point label" per line; '#' starts a comment.
LabeledSample ReadSampleFile(const std::string& path) {
  const std::string text = ReadTextFile(path);
  std::istringstream in(text);
  std::string line;
  LabeledSample sample;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    long point = 0;
    int label = 0;
    if (!(fields >> point)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError(line_number, path + ": expected 'point label'");
    }
    std::string rest;
    if (!(fields >> label) || (label != 0 && label != 1) || (fields >> rest)) {
      throw ParseError(line_number, path + ": expected 'point label' with label 0 or 1");
    }
    if (point < 0 || point > INT32_MAX) {
      throw ParseError(line_number, path + ": point index out of range");
    }
    try {
      sample.Add(static_cast<int>(point), label == 1);
    } catch (const DomainError& e) {
      throw ParseError(line_number, path + ": " + e.what());
    }
  }
  return sample;
}

std::vector<std::uint8_t> ReadBinaryFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

void WriteBinaryFile(const std::vector<std::uint8_t>& bytes,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw ConfigError("cannot write " + path);
}

ProbabilityVector ParseDistribution(const std::string& text, int size) {
  if (text.empty() || text == "uniform") return ProbabilityVector::Uniform(size);
  std::vector<double> weights;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    double w = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), w);
    if (ec != std::errc() || end != item.data() + item.size()) {
      throw ConfigError("distribution entry '" + item + "' is not a number");
    }
    weights.push_back(w);
  }
  if (static_cast<int>(weights.size()) != size) {
    throw ConfigError("distribution has " + std::to_string(weights.size()) +
                      " entries, expected " + std::to_string(size));
  }
  try {
    return ProbabilityVector::Create(std::move(weights));
  } catch (const DomainError& e) {
    throw ConfigError(std::string("distribution: ") + e.what());
  }
}

HypothesisMode ParseMode(const std::string& text) {
  if (text == "auto") return HypothesisMode::kAuto;
  if (text == "exhaustive") return HypothesisMode::kExhaustive;
  if (text == "double_oracle") return HypothesisMode::kDoubleOracle;
  throw ConfigError("mode must be auto, exhaustive or double_oracle");
}

void Emit(const Json& doc, const GlobalOptions& g) { WriteText(DumpJson(doc), g.out); }

int Run(int argc, char** argv) {
  CLI::App app{"Sample compression schemes for finite concept classes."};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--seed", g.seed, "Seed for every randomized step (default 0)");
  app.add_option("--class-file", g.class_file,
                 "Concept class file: header 'n m', then m rows of n bits");
  app.add_option("--class", g.class_spec,
                 "Generated class, e.g. intervals:n=10 or halfspaces_grid:side=5,r=2");
  app.add_option("--out", g.out, "Output path (default stdout)");

  auto* vc = app.add_subcommand("vc", "VC dimension with a shattering witness");

  auto* dual = app.add_subcommand(
      "dual", "Dual class in class-file format (rows are domain points)");
  bool dual_summary = false;
  dual->add_flag("--summary", dual_summary,
                 "Print dimensions and the point-to-row map as JSON instead");

  auto* approx = app.add_subcommand("approx", "Certified epsilon-approximation");
  double approx_epsilon = 0;
  std::string approx_distribution = "uniform";
  ApproxOptions approx_options;
  approx->add_option("--epsilon", approx_epsilon, "Accuracy in (0, 1)")->required();
  approx->add_option("--distribution", approx_distribution,
                     "'uniform' or comma-separated weights over the domain");
  approx->add_option("--c-apx", approx_options.c_apx, "Size constant (default 16)");
  approx->add_option("--retries", approx_options.retries,
                     "Draws at the base size before doubling (default 64)");

  auto* game = app.add_subcommand("game", "Solve a binary zero-sum game");
  std::string game_matrix;
  std::string game_method = "exact";
  double game_target = 0.01;
  game->add_option("--matrix-file", game_matrix,
                   "Payoff matrix file (class-file format, repeated rows allowed); "
                   "defaults to --class-file");
  game->add_option("--method", game_method, "exact, mw or reduced (default exact)");
  game->add_option("--target", game_target,
                   "Exploitability target for mw and reduced (default 0.01)");

  auto* nash = app.add_subcommand("nash", "Sparse epsilon-Nash equilibrium");
  std::string nash_matrix;
  double nash_epsilon = 0.125;
  nash->add_option("--matrix-file", nash_matrix,
                   "Payoff matrix file; defaults to --class-file");
  nash->add_option("--epsilon", nash_epsilon, "Accuracy in (0, 1) (default 1/8)");

  SchemeOptions scheme_options;
  std::string mode = "auto";
  auto* compress = app.add_subcommand(
      "compress", "Compress a labeled sample; the binary goes to --out");
  std::string compress_sample;
  std::string compress_report;
  compress->add_option("--sample-file", compress_sample,
                       "Sample file: one 'point label' pair per line")
      ->required();
  compress->add_option("--report", compress_report,
                       "Write the JSON report here (default stdout)");
  compress->add_option("--mode", mode, "auto, exhaustive or double_oracle");
  compress->add_option("--c-apx", scheme_options.c_apx, "Size constant (default 16)");

  auto* reconstruct = app.add_subcommand(
      "reconstruct", "Hypothesis on the whole domain from a compressed sample");
  std::string reconstruct_in;
  reconstruct->add_option("--in", reconstruct_in, "Compressed sample file")
      ->required();

  auto* verify = app.add_subcommand(
      "verify", "Round trip compress/serialize/reconstruct and compare labels");
  std::string verify_sample;
  int verify_exhaustive = -1;
  int verify_random = 0;
  int verify_max_size = 100;
  verify->add_option("--sample-file", verify_sample, "Verify this sample");
  verify->add_option("--exhaustive", verify_exhaustive,
                     "Every realizable sample on at most this many points");
  verify->add_option("--random", verify_random,
                     "This many random samples with random targets");
  verify->add_option("--max-size", verify_max_size,
                     "Largest random sample size (default 100)");
  verify->add_option("--mode", mode, "auto, exhaustive or double_oracle");

  auto* experiment = app.add_subcommand(
      "experiment", "Generalization experiment with the measured scheme size");
  ExperimentConfig experiment_config;
  std::string experiment_distribution = "uniform";
  int experiment_target = -1;
  experiment->add_option("--epsilon", experiment_config.epsilon, "Default 1/3");
  experiment->add_option("--delta", experiment_config.delta, "Default 1/3");
  experiment->add_option("--trials", experiment_config.trials, "Default 200");
  experiment->add_option("--target", experiment_target,
                         "Target concept index (default: random per trial)");
  experiment->add_option("--distribution", experiment_distribution,
                         "'uniform' or comma-separated weights");
  experiment->add_option("--pilot-runs", experiment_config.pilot_runs,
                         "Compressions used to measure the scheme size (default 16)");
  experiment->add_option("--slack", experiment_config.slack,
                         "Allowed excess over delta (default 0.1)");

  auto* suite = app.add_subcommand("suite", "Run the verification suites");
  std::string suite_config;
  std::string suite_profile;
  std::vector<int> suite_criteria;
  bool suite_no_timing = false;
  suite->add_option("--config", suite_config,
                    "Config file: JSON object or 'key = value' lines");
  suite->add_option("--profile", suite_profile, "full or singleton");
  suite->add_option("--criteria", suite_criteria, "Criterion ids to run")
      ->delimiter(',');
  suite->add_flag("--no-timing", suite_no_timing,
                  "Leave wall-clock times out of the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  if (*vc) {
    const ConceptClass c = LoadClass(g);
    const int d = VcDimension(c);
    Json doc = {{"domain_size", c.domain_size()},
                {"concepts", c.size()},
                {"vc_dimension", d}};
    std::vector<int> set;
    // Lexicographically first shattered set of size d.
    std::function<bool(int)> search = [&](int next) -> bool {
      if (static_cast<int>(set.size()) == d) return true;
      for (int x = next; x < c.domain_size(); ++x) {
        set.push_back(x);
        if (Shatters(c, set) && search(x + 1)) return true;
        set.pop_back();
      }
      return false;
    };
    search(0);
    if (auto witness = Shatters(c, set)) doc["witness"] = ToJson(*witness);
    Emit(doc, g);
    return kExitPass;
  }
  if (*dual) {
    const ConceptClass c = LoadClass(g);
    const DualMapping mapping = DualClassWithMapping(c);
    if (dual_summary) {
      Emit({{"domain_size", mapping.dual.domain_size()},
            {"concepts", mapping.dual.size()},
            {"vc_dimension", VcDimension(c)},
            {"dual_vc_dimension", VcDimension(mapping.dual)},
            {"point_to_dual", mapping.point_to_dual}},
           g);
    } else {
      WriteText(FormatConceptClass(mapping.dual), g.out);
    }
    return kExitPass;
  }
  if (*approx) {
    const ConceptClass c = LoadClass(g);
    const ProbabilityVector mu =
        ParseDistribution(approx_distribution, c.domain_size());
    if (!(approx_epsilon > 0 && approx_epsilon < 1)) {
      throw ConfigError("--epsilon must lie in (0, 1)");
    }
    const ApproximationCertificate cert =
        EpsilonApproximation(c, mu, approx_epsilon, g.seed, approx_options);
    Emit(ToJson(cert), g);
    return kExitPass;
  }
  if (*game || *nash) {
    std::string path = *game ? game_matrix : nash_matrix;
    if (path.empty()) path = g.class_file;
    if (path.empty()) throw ConfigError("--matrix-file is required");
    const PayoffMatrix m = ParsePayoffMatrix(ReadTextFile(path));
    if (*game) {
      GameSolution solution;
      if (game_method == "exact") {
        solution = SolveExact(m);
      } else if (game_method == "mw") {
        solution = SolveMw(m, game_target);
      } else if (game_method == "reduced") {
        solution = SolveReduced(m, game_target);
      } else {
        throw ConfigError("--method must be exact, mw or reduced");
      }
      Emit(ToJson(solution), g);
      return kExitPass;
    }
    if (!(nash_epsilon > 0 && nash_epsilon < 1)) {
      throw ConfigError("--epsilon must lie in (0, 1)");
    }
    const SparseEquilibrium eq = SparseEpsilonNash(m, nash_epsilon, g.seed);
    Emit(ToJson(eq), g);
    return eq.certified_exploitability <= nash_epsilon ? kExitPass : kExitVerdict;
  }
  if (*compress) {
    const ConceptClass c = LoadClass(g);
    if (g.out.empty()) throw ConfigError("compress needs --out for the binary");
    scheme_options.mode = ParseMode(mode);
    const LabeledSample sample = ReadSampleFile(compress_sample);
    CheckSampleInDomain(c, sample);
    if (!IsRealizable(c, sample)) {
      throw ConfigError(compress_sample + ": sample is not realizable by the class");
    }
    const auto [compressed, report] = Compress(c, sample, g.seed, scheme_options);
    WriteBinaryFile(SerializeCompressed(compressed), g.out);
    Json doc = ToJson(report);
    doc["output"] = g.out;
    doc["bytes"] = SerializeCompressed(compressed).size();
    WriteText(DumpJson(doc), compress_report);
    return report.majority_ok ? kExitPass : kExitVerdict;
  }
  if (*reconstruct) {
    const ConceptClass c = LoadClass(g);
    const CompressedSample compressed =
        DeserializeCompressed(ReadBinaryFile(reconstruct_in));
    const ReconstructionTrace trace = ReconstructDetailed(c, compressed);
    Emit({{"hypothesis", trace.hypothesis.ToString()},
          {"concept_index", c.IndexOf(trace.hypothesis)},
          {"subset_count", trace.votes.size()},
          {"kernel_size", compressed.kernel_points.size()}},
         g);
    return kExitPass;
  }
  if (*verify) {
    const ConceptClass c = LoadClass(g);
    scheme_options.mode = ParseMode(mode);
    scheme_options.vc_dimension = VcDimension(c);
    scheme_options.dual_vc_dimension = VcDimension(DualClass(c));
    std::vector<LabeledSample> samples;
    if (!verify_sample.empty()) samples.push_back(ReadSampleFile(verify_sample));
    if (verify_exhaustive >= 0) {
      if (c.domain_size() > 20) throw ConfigError("--exhaustive needs domain <= 20");
      for (std::uint32_t mask = 0; mask < (1u << c.domain_size()); ++mask) {
        if (std::popcount(mask) > verify_exhaustive) continue;
        std::set<std::string> seen;
        for (int i = 0; i < c.size(); ++i) {
          LabeledSample s;
          std::string key;
          for (int x = 0; x < c.domain_size(); ++x) {
            if ((mask >> x) & 1u) {
              s.Add(x, c.Value(i, x));
              key += c.Value(i, x) ? '1' : '0';
            }
          }
          if (seen.insert(key).second) samples.push_back(std::move(s));
        }
      }
    }
    if (verify_random > 0) {
      Rng rng(g.seed);
      for (int k = 0; k < verify_random; ++k) {
        const int target = static_cast<int>(rng.UniformInt(c.size()));
        const int m = 1 + static_cast<int>(rng.UniformInt(std::max(1, verify_max_size)));
        LabeledSample s;
        for (int j = 0; j < m; ++j) {
          const int x = static_cast<int>(rng.UniformInt(c.domain_size()));
          s.Add(x, c.Value(target, x));
        }
        samples.push_back(std::move(s));
      }
    }
    if (samples.empty()) {
      throw ConfigError("verify needs --sample-file, --exhaustive or --random");
    }
    int failures = 0;
    Json failed = Json::array();
    long max_kernel = 0;
    long max_info_bits = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      CheckSampleInDomain(c, samples[i]);
      const RoundTripVerdict v =
          VerifyRoundTrip(c, samples[i], g.seed + i, scheme_options);
      max_kernel = std::max<long>(max_kernel, v.report.kernel_size);
      max_info_bits = std::max(max_info_bits, v.report.info_bits);
      if (!v.pass) {
        ++failures;
        if (failed.size() < 10) failed.push_back({{"index", i}, {"failure", v.failure}});
      }
    }
    Emit({{"samples", samples.size()},
          {"failures", failures},
          {"failed", failed},
          {"max_kernel", max_kernel},
          {"max_info_bits", max_info_bits},
          {"pass", failures == 0}},
         g);
    return failures == 0 ? kExitPass : kExitVerdict;
  }
  if (*experiment) {
    const ConceptClass c = LoadClass(g);
    experiment_config.seed = g.seed;
    if (experiment_target >= 0) experiment_config.target = experiment_target;
    experiment_config.distribution =
        ParseDistribution(experiment_distribution, c.domain_size()).weights();
    const ExperimentResult r = RunGeneralizationExperiment(c, experiment_config);
    Emit(ToJson(r), g);
    return r.pass ? kExitPass : kExitVerdict;
  }
  if (*suite) {
    SuiteConfig config =
        suite_config.empty() ? SuiteConfig{} : LoadSuiteConfig(suite_config);
    if (!suite_profile.empty()) config.profile = suite_profile;
    if (!suite_criteria.empty()) config.criteria = suite_criteria;
    if (!g.class_file.empty()) config.class_file = g.class_file;
    if (app.count("--seed")) config.seed = g.seed;
    if (config.profile != "full" && config.profile != "singleton") {
      throw ConfigError("--profile must be full or singleton");
    }
    for (int id : config.criteria) {
      if (id < 1 || id > kCriterionCount) {
        throw ConfigError("unknown criterion " + std::to_string(id));
      }
    }
    const SuiteResult result = RunSuite(config);
    for (const CriterionResult& r : result.criteria) {
      std::cerr << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " "
                << CriterionName(r.id) << ": " << r.summary << "\n";
    }
    Emit(SuiteReport(config, result, !suite_no_timing), g);
    return result.pass ? kExitPass : kExitVerdict;
  }
  return kExitConfig;
}

}  // namespace
}  // namespace vcsc

int main(int argc, char** argv) {
  try {
    return vcsc::Run(argc, argv);
  } catch (const vcsc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return vcsc::kExitConfig;
  } catch (const vcsc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return vcsc::kExitConfig;
  } catch (const vcsc::DecodeError& e) {
    std::cerr << "decode error: " << e.what() << "\n";
    return vcsc::kExitConfig;
  } catch (const vcsc::IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return vcsc::kExitConfig;
  } catch (const vcsc::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return vcsc::kExitConfig;
  } catch (const vcsc::Error& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return vcsc::kExitVerdict;
  }
}
