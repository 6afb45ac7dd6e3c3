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

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "vcsc/approx.h"
#include "vcsc/codec.h"
#include "vcsc/errors.h"
#include "vcsc/experiment.h"
#include "vcsc/game.h"
#include "vcsc/generators.h"
#include "vcsc/learner.h"
#include "vcsc/rng.h"
#include "vcsc/scheme.h"

namespace vcsc {
namespace {

// ---------------------------------------------------------------------------
// Configuration parsing.

std::string Trim(std::string_view s) {
  const std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T ParseNumber(const std::string& text, const std::string& where) {
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ConfigError(where + ": '" + text + "' is not a valid number");
  }
  return value;
}

std::vector<int> ParseCriteriaList(const std::string& text,
                                   const std::string& where) {
  std::vector<int> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    out.push_back(ParseNumber<int>(Trim(item), where));
  }
  return out;
}

void Validate(const SuiteConfig& config, const std::string& origin) {
  if (config.profile != "full" && config.profile != "singleton") {
    throw ConfigError(origin + ": profile must be 'full' or 'singleton'");
  }
  for (int id : config.criteria) {
    if (id < 1 || id > kCriterionCount) {
      throw ConfigError(origin + ": unknown criterion " + std::to_string(id));
    }
  }
  if (config.random_samples < 0 || config.codec_trials < 1 ||
      config.experiment_trials < 1) {
    throw ConfigError(origin + ": sample and trial counts must be positive");
  }
}

void SetKey(SuiteConfig& config, const std::string& key,
            const std::string& value, const std::string& where) {
  if (key == "profile") {
    config.profile = value;
  } else if (key == "criteria") {
    config.criteria = ParseCriteriaList(value, where);
  } else if (key == "seed") {
    config.seed = ParseNumber<std::uint64_t>(value, where);
  } else if (key == "class_file") {
    config.class_file = value;
  } else if (key == "random_samples") {
    config.random_samples = ParseNumber<int>(value, where);
  } else if (key == "codec_trials") {
    config.codec_trials = ParseNumber<int>(value, where);
  } else if (key == "experiment_trials") {
    config.experiment_trials = ParseNumber<int>(value, where);
  } else {
    throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

SuiteConfig ParseJsonConfig(std::string_view text, const std::string& origin) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(origin + ": expected a JSON object");
  SuiteConfig config;
  for (const auto& [key, value] : doc.items()) {
    const std::string where = origin + ": key '" + key + "'";
    if (key == "criteria" && value.is_array()) {
      config.criteria.clear();
      for (const Json& id : value) {
        if (!id.is_number_integer()) throw ConfigError(where + ": not an integer");
        config.criteria.push_back(id.get<int>());
      }
    } else if (value.is_string()) {
      SetKey(config, key, value.get<std::string>(), where);
    } else if (value.is_number_unsigned() || value.is_number_integer()) {
      SetKey(config, key, value.dump(), where);
    } else {
      throw ConfigError(where + ": unsupported value " + value.dump());
    }
  }
  Validate(config, origin);
  return config;
}

// ---------------------------------------------------------------------------
// Shared helpers.

std::uint64_t CaseSeed(std::uint64_t seed, int criterion, std::uint64_t index) {
  return Rng(seed).Split(static_cast<std::uint64_t>(criterion)).Split(index).Next();
}

struct NamedClass {
  std::string name;
  ConceptClass concepts;
};

NamedClass Make(const std::string& spec) {
  return {spec, Generate(ParseGeneratorSpec(spec))};
}

std::vector<NamedClass> SingletonClasses() {
  std::vector<NamedClass> out;
  for (int n = 1; n <= 5; ++n) {
    out.push_back(Make("random_vc_capped:n=" + std::to_string(n) +
                       ",m=1,cap=0,seed=" + std::to_string(n)));
  }
  return out;
}

bool IsSingletonProfile(const SuiteConfig& config) {
  return config.profile == "singleton";
}

std::optional<NamedClass> ExtraClass(const SuiteConfig& config) {
  if (!config.class_file) return std::nullopt;
  return NamedClass{"from_file:path=" + *config.class_file,
                    ReadConceptClassFile(*config.class_file)};
}

SchemeOptions OptionsFor(const ConceptClass& c) {
  SchemeOptions options;
  options.vc_dimension = VcDimension(c);
  options.dual_vc_dimension = VcDimension(DualClass(c));
  return options;
}

// Every realizable labeling of every subset of at most `max_points` points,
// the empty sample included.
std::vector<LabeledSample> ExhaustiveSamples(const ConceptClass& c,
                                             int max_points) {
  std::vector<LabeledSample> out;
  const int n = c.domain_size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > max_points) continue;
    std::vector<int> points;
    for (int x = 0; x < n; ++x) {
      if ((mask >> x) & 1u) points.push_back(x);
    }
    std::set<std::vector<std::uint8_t>> labelings;
    for (int i = 0; i < c.size(); ++i) {
      std::vector<std::uint8_t> labels;
      for (int x : points) labels.push_back(c.Value(i, x) ? 1 : 0);
      labelings.insert(std::move(labels));
    }
    for (const std::vector<std::uint8_t>& labels : labelings) {
      LabeledSample sample;
      for (std::size_t j = 0; j < points.size(); ++j) {
        sample.Add(points[j], labels[j] != 0);
      }
      out.push_back(std::move(sample));
    }
  }
  return out;
}

// `count` samples of m uniform points (m uniform in [1, max_size]) labeled
// by a uniformly random concept.
std::vector<LabeledSample> RandomSamples(const ConceptClass& c, int count,
                                         int max_size, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<LabeledSample> out;
  for (int i = 0; i < count; ++i) {
    const int target = static_cast<int>(rng.UniformInt(c.size()));
    const int m = 1 + static_cast<int>(rng.UniformInt(max_size));
    LabeledSample sample;
    for (int j = 0; j < m; ++j) {
      const int x = static_cast<int>(rng.UniformInt(c.domain_size()));
      sample.Add(x, c.Value(target, x));
    }
    out.push_back(std::move(sample));
  }
  return out;
}

std::string Describe(const LabeledSample& sample) {
  std::string out = "{";
  for (const auto& [x, label] : sample.labels()) {
    if (out.size() > 1) out += ",";
    out += std::to_string(x) + ":" + (label ? "1" : "0");
  }
  return out + "}";
}

struct BatchOutcome {
  int runs = 0;
  int failures = 0;
  std::vector<std::string> examples;  // first few failures
  int max_kernel = 0;
  long max_info_bits = 0;
  int max_subset_count = 0;
  int max_budget = 0;
  std::vector<SchemeReport> reports;  // per sample, in order
};

BatchOutcome VerifyBatch(const ConceptClass& c,
                         const std::vector<LabeledSample>& samples,
                         std::uint64_t seed, int criterion,
                         const SchemeOptions& options) {
  std::vector<RoundTripVerdict> verdicts(samples.size());
  const long count = static_cast<long>(samples.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < count; ++i) {
    verdicts[i] =
        VerifyRoundTrip(c, samples[i], CaseSeed(seed, criterion, i), options);
  }
  BatchOutcome out;
  out.runs = static_cast<int>(samples.size());
  for (long i = 0; i < count; ++i) {
    const RoundTripVerdict& v = verdicts[i];
    if (!v.pass) {
      ++out.failures;
      if (out.examples.size() < 5) {
        out.examples.push_back(Describe(samples[i]) + ": " + v.failure);
      }
    }
    out.max_kernel = std::max(out.max_kernel, v.report.kernel_size);
    out.max_info_bits = std::max(out.max_info_bits, v.report.info_bits);
    out.max_subset_count = std::max(out.max_subset_count, v.report.subset_count);
    out.max_budget = std::max(out.max_budget, v.report.subset_budget);
    out.reports.push_back(v.report);
  }
  return out;
}

Json BatchJson(const BatchOutcome& b) {
  return {{"runs", b.runs},
          {"failures", b.failures},
          {"failure_examples", b.examples},
          {"max_kernel", b.max_kernel},
          {"max_info_bits", b.max_info_bits},
          {"max_subset_count", b.max_subset_count},
          {"max_subset_budget", b.max_budget}};
}

// Plain enumeration over all subsets; domains of at most 16 points.
int NaiveVcDimension(const ConceptClass& c) {
  const int n = c.domain_size();
  std::vector<std::uint64_t> rows;
  for (const BitRow& r : c.rows()) rows.push_back(r.words()[0]);
  int best = 0;
  std::vector<std::uint8_t> seen(std::size_t{1} << n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const int k = std::popcount(mask);
    if (k <= best || (std::uint64_t{1} << k) > rows.size()) continue;
    std::fill(seen.begin(), seen.end(), 0);
    std::uint64_t distinct = 0;
    for (std::uint64_t r : rows) {
      const std::uint64_t pattern = r & mask;
      if (!seen[pattern]) {
        seen[pattern] = 1;
        ++distinct;
      }
    }
    if (distinct == (std::uint64_t{1} << k)) best = k;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Criteria.

CriterionResult RoundTripCriterion(const SuiteConfig& config) {
  CriterionResult result;
  std::vector<NamedClass> classes;
  if (IsSingletonProfile(config)) {
    classes = SingletonClasses();
  } else {
    for (int n = 1; n <= 8; ++n) {
      classes.push_back(Make("intervals:n=" + std::to_string(n)));
    }
    classes.push_back(Make("k_interval_unions:k=2,n=4"));
    classes.push_back(Make("k_interval_unions:k=2,n=5"));
    for (int n = 1; n <= 5; ++n) {
      classes.push_back(Make("full_cube:n=" + std::to_string(n)));
    }
    classes.push_back(Make("halfspaces_grid:r=1,side=5"));
    classes.push_back(Make("halfspaces_grid:r=1,side=8"));
    classes.push_back(Make("halfspaces_grid:r=2,side=2"));
    for (int cap = 1; cap <= 3; ++cap) {
      classes.push_back(Make("random_vc_capped:cap=" + std::to_string(cap) +
                             ",m=40,n=8,seed=" + std::to_string(10 + cap)));
    }
    classes.push_back(Make("random_vc_capped:cap=2,m=20,n=6,seed=7"));
  }
  if (auto extra = ExtraClass(config)) classes.push_back(std::move(*extra));

  Json per_class = Json::array();
  int total_runs = 0;
  int total_failures = 0;
  int skipped = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const NamedClass& nc = classes[i];
    const ConceptClass& c = nc.concepts;
    if (c.domain_size() > 8 || c.size() > 40) {
      per_class.push_back({{"class", nc.name},
                           {"skipped", "domain > 8 or more than 40 concepts"}});
      ++skipped;
      continue;
    }
    const SchemeOptions options = OptionsFor(c);
    const BatchOutcome b = VerifyBatch(c, ExhaustiveSamples(c, 5),
                                       CaseSeed(config.seed, 1, i), 1, options);
    Json entry = BatchJson(b);
    entry["class"] = nc.name;
    entry["concepts"] = c.size();
    entry["domain"] = c.domain_size();
    entry["vc"] = *options.vc_dimension;
    entry["dual_vc"] = *options.dual_vc_dimension;
    per_class.push_back(std::move(entry));
    total_runs += b.runs;
    total_failures += b.failures;
  }

  Json random = Json::array();
  if (!IsSingletonProfile(config)) {
    const std::vector<NamedClass> large = {
        Make("intervals:n=10"), Make("halfspaces_grid:r=2,side=5")};
    for (std::size_t i = 0; i < large.size(); ++i) {
      const ConceptClass& c = large[i].concepts;
      const SchemeOptions options = OptionsFor(c);
      const std::uint64_t seed = CaseSeed(config.seed, 1, 1000 + i);
      const BatchOutcome b =
          VerifyBatch(c, RandomSamples(c, config.random_samples, 500, seed),
                      seed, 1, options);
      Json entry = BatchJson(b);
      entry["class"] = large[i].name;
      entry["concepts"] = c.size();
      entry["vc"] = *options.vc_dimension;
      entry["dual_vc"] = *options.dual_vc_dimension;
      random.push_back(std::move(entry));
      total_runs += b.runs;
      total_failures += b.failures;
    }
  }
  result.pass = total_failures == 0;
  result.summary = std::to_string(total_runs - total_failures) + "/" +
                   std::to_string(total_runs) + " round trips exact";
  result.details = {{"exhaustive", per_class},
                    {"random", random},
                    {"runs", total_runs},
                    {"failures", total_failures},
                    {"classes_skipped", skipped}};
  return result;
}

CriterionResult KernelIndependenceCriterion(const SuiteConfig& config) {
  CriterionResult result;
  const NamedClass nc = IsSingletonProfile(config)
                            ? SingletonClasses().back()
                            : Make("intervals:n=10");
  const ConceptClass& c = nc.concepts;
  const SchemeOptions options = OptionsFor(c);
  const int sizes[] = {10, 100, 1000};
  Json tiers = Json::array();
  std::set<std::vector<long>> ceilings;
  bool within = true;
  int failures = 0;
  for (int tier = 0; tier < 3; ++tier) {
    const std::uint64_t seed = CaseSeed(config.seed, 2, tier);
    Rng rng(seed);
    std::vector<LabeledSample> samples;
    for (int i = 0; i < 100; ++i) {
      const int target = static_cast<int>(rng.UniformInt(c.size()));
      LabeledSample sample;
      for (int j = 0; j < sizes[tier]; ++j) {
        const int x = static_cast<int>(rng.UniformInt(c.domain_size()));
        sample.Add(x, c.Value(target, x));
      }
      samples.push_back(std::move(sample));
    }
    const BatchOutcome b = VerifyBatch(c, samples, seed, 2, options);
    failures += b.failures;
    long kernel_ceiling = 0;
    long info_ceiling = 0;
    long scheme_ceiling = 0;
    for (const SchemeReport& r : b.reports) {
      kernel_ceiling = std::max(kernel_ceiling, r.kernel_ceiling);
      info_ceiling = std::max(info_ceiling, r.info_bits_ceiling);
      scheme_ceiling = std::max(scheme_ceiling, r.scheme_size_ceiling);
      within = within && r.kernel_size <= r.kernel_ceiling &&
               r.info_bits <= r.info_bits_ceiling;
    }
    ceilings.insert({kernel_ceiling, info_ceiling, scheme_ceiling});
    Json entry = BatchJson(b);
    entry["m"] = sizes[tier];
    entry["kernel_ceiling"] = kernel_ceiling;
    entry["info_bits_ceiling"] = info_ceiling;
    entry["scheme_size_ceiling"] = scheme_ceiling;
    tiers.push_back(std::move(entry));
  }
  const bool equal = ceilings.size() == 1;
  result.pass = equal && within && failures == 0;
  result.summary = std::string("ceilings ") +
                   (equal ? "equal" : "differ") + " across tiers, measured " +
                   (within ? "within" : "above") + " ceilings";
  result.details = {{"class", nc.name},
                    {"tiers", tiers},
                    {"ceilings_equal", equal},
                    {"measured_within_ceilings", within},
                    {"round_trip_failures", failures}};
  return result;
}

CriterionResult DualBoundCriterion(const SuiteConfig& config) {
  CriterionResult result;
  std::vector<NamedClass> classes;
  if (IsSingletonProfile(config)) {
    classes = SingletonClasses();
  } else {
    for (int n = 1; n <= 12; ++n) {
      classes.push_back(Make("intervals:n=" + std::to_string(n)));
    }
    for (int n = 8; n <= 12; n += 2) {
      for (int k = 1; k <= 3; ++k) {
        classes.push_back(Make("k_interval_unions:k=" + std::to_string(k) +
                               ",n=" + std::to_string(n)));
      }
    }
    for (int n = 1; n <= 8; ++n) {
      classes.push_back(Make("full_cube:n=" + std::to_string(n)));
    }
    for (int side = 2; side <= 12; side += 2) {
      classes.push_back(Make("halfspaces_grid:r=1,side=" + std::to_string(side)));
    }
    classes.push_back(Make("halfspaces_grid:r=2,side=2"));
    classes.push_back(Make("halfspaces_grid:r=2,side=3"));
    classes.push_back(Make("halfspaces_grid:r=3,side=2"));
    for (int cap = 1; cap <= 3; ++cap) {
      for (int n : {10, 12}) {
        classes.push_back(Make("random_vc_capped:cap=" + std::to_string(cap) +
                               ",m=60,n=" + std::to_string(n) +
                               ",seed=" + std::to_string(100 + cap)));
      }
    }
  }
  if (auto extra = ExtraClass(config)) classes.push_back(std::move(*extra));

  Json entries = Json::array();
  int checked = 0;
  int violations = 0;
  for (const NamedClass& nc : classes) {
    const ConceptClass& c = nc.concepts;
    if (c.domain_size() > 12) {
      entries.push_back({{"class", nc.name}, {"skipped", "domain > 12"}});
      continue;
    }
    const int d = NaiveVcDimension(c);
    const int d_levelwise = VcDimension(c);
    const ConceptClass dual = DualClass(c);
    const int d_star = VcDimension(dual);
    // The dual dimension is confirmed by a witness of that size, found by a
    // depth-first search over shattered sets and checked by direct lookup.
    bool witnessed = d_star == 0;
    std::vector<int> current;
    std::function<bool(int)> search = [&](int next) -> bool {
      if (static_cast<int>(current.size()) == d_star) {
        auto w = Shatters(dual, current);
        return w && VerifyWitness(dual, *w);
      }
      for (int x = next; x < dual.domain_size(); ++x) {
        current.push_back(x);
        if (Shatters(dual, current) && search(x + 1)) return true;
        current.pop_back();
      }
      return false;
    };
    if (!witnessed) witnessed = search(0);
    const bool ok = d == d_levelwise && witnessed &&
                    static_cast<long>(d_star) < (2L << d);
    ++checked;
    if (!ok) ++violations;
    entries.push_back({{"class", nc.name},
                       {"domain", c.domain_size()},
                       {"concepts", c.size()},
                       {"vc", d},
                       {"vc_levelwise", d_levelwise},
                       {"dual_vc", d_star},
                       {"bound", 2L << d},
                       {"ok", ok}});
  }
  result.pass = violations == 0;
  result.summary = std::to_string(checked - violations) + "/" +
                   std::to_string(checked) + " classes satisfy d* < 2^(d+1)";
  result.details = {{"classes", entries}, {"violations", violations}};
  return result;
}

CriterionResult ApproximationCriterion(const SuiteConfig& config) {
  CriterionResult result;
  std::vector<NamedClass> classes;
  if (IsSingletonProfile(config)) {
    classes = SingletonClasses();
  } else {
    classes.push_back(Make("intervals:n=10"));
    classes.push_back(Make("halfspaces_grid:r=2,side=5"));
    classes.push_back(Make("full_cube:n=3"));
    classes.push_back(Make("k_interval_unions:k=1,n=12"));
    classes.push_back(Make("random_vc_capped:cap=3,m=60,n=10,seed=5"));
    classes.push_back(Make("random_vc_capped:cap=1,m=30,n=10,seed=6"));
  }
  const int inverse_epsilons[] = {4, 8};
  Json runs = Json::array();
  int total = 0;
  int failures = 0;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const ConceptClass& c = classes[ci].concepts;
    const int n = c.domain_size();
    const int d = VcDimension(c);
    if (d > 3) continue;
    Rng rng(CaseSeed(config.seed, 4, ci));
    std::vector<std::pair<std::string, ProbabilityVector>> distributions;
    distributions.emplace_back("uniform", ProbabilityVector::Uniform(n));
    distributions.emplace_back("point_mass", ProbabilityVector::PointMass(n, n / 2));
    for (int k = 0; k < 3; ++k) {
      std::vector<double> w(n);
      double total_w = 0;
      for (double& wi : w) {
        wi = -std::log(1.0 - rng.UniformDouble());
        total_w += wi;
      }
      for (double& wi : w) wi /= total_w;
      // Renormalize residual rounding into the largest entry.
      double sum = 0;
      for (double wi : w) sum += wi;
      *std::max_element(w.begin(), w.end()) += 1.0 - sum;
      distributions.emplace_back("random_" + std::to_string(k),
                                 ProbabilityVector::Create(std::move(w)));
    }
    for (const auto& [name, mu] : distributions) {
      for (int q : inverse_epsilons) {
        const double epsilon = 1.0 / q;
        const long ceiling = 16L * (d + 1) * q * q;
        Json entry = {{"class", classes[ci].name},
                      {"distribution", name},
                      {"epsilon", ExactDecimal(epsilon)},
                      {"size_bound", ceiling}};
        bool ok = false;
        try {
          const ApproximationCertificate cert =
              EpsilonApproximation(c, mu, epsilon, rng.Next());
          const double recomputed = DeviationOverConcepts(c, mu, cert.multiset);
          ok = recomputed <= epsilon && cert.size() <= ceiling;
          entry["certificate"] = ToJson(cert);
          entry["recomputed_deviation"] = ExactDecimal(recomputed);
        } catch (const ApproximationBudgetExceeded& e) {
          entry["error"] = e.what();
        }
        entry["ok"] = ok;
        ++total;
        if (!ok) ++failures;
        runs.push_back(std::move(entry));
      }
    }
  }
  result.pass = failures == 0 && total > 0;
  result.summary = std::to_string(total - failures) + "/" +
                   std::to_string(total) + " certificates re-verified";
  result.details = {{"runs", runs}, {"failures", failures}};
  return result;
}

PayoffMatrix RandomMatrix(int rows, int cols, double density, Rng& rng) {
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(rows) * cols);
  for (auto& e : entries) e = rng.UniformDouble() < density ? 1 : 0;
  return PayoffMatrix(rows, cols, std::move(entries));
}

CriterionResult GameCriterion(const SuiteConfig& config) {
  CriterionResult result;
  constexpr double kTarget = 0.01;
  Rng rng(CaseSeed(config.seed, 5, 0));
  Json games = Json::array();
  int failures = 0;
  double worst_gap = 0.0;
  double worst_exploitability = 0.0;
  for (int g = 0; g < 50; ++g) {
    const int rows = g == 49 ? 50 : 2 + static_cast<int>(rng.UniformInt(49));
    const int cols = g == 49 ? 50 : 2 + static_cast<int>(rng.UniformInt(49));
    const double density = 0.2 + 0.6 * rng.UniformDouble();
    const PayoffMatrix m = RandomMatrix(rows, cols, density, rng);
    const GameSolution exact = SolveExact(m);
    Json entry = {{"rows", rows}, {"cols", cols}};
    bool ok = false;
    try {
      const GameSolution mw = SolveMw(m, kTarget);
      const StrategyEvaluation eval = EvaluateStrategies(
          m, mw.row_strategy.weights(), mw.col_strategy.weights());
      const double gap = std::abs(mw.value_estimate - exact.value_estimate);
      ok = gap <= kTarget && eval.exploitability <= kTarget &&
           exact.exploitability <= 1e-9;
      worst_gap = std::max(worst_gap, gap);
      worst_exploitability = std::max(worst_exploitability, eval.exploitability);
      entry["exact_value"] = ExactDecimal(exact.value_estimate);
      entry["mw_value"] = ExactDecimal(mw.value_estimate);
      entry["mw_exploitability"] = ExactDecimal(eval.exploitability);
      entry["mw_iterations"] = mw.iterations;
    } catch (const ConvergenceError& e) {
      entry["error"] = e.what();
    }
    entry["ok"] = ok;
    if (!ok) ++failures;
    games.push_back(std::move(entry));
  }
  const PayoffMatrix cyclic(3, 3, {1, 1, 0, 0, 1, 1, 1, 0, 1});
  const GameSolution cyclic_solution = SolveExact(cyclic);
  const bool cyclic_ok =
      std::abs(cyclic_solution.value_estimate - 2.0 / 3.0) <= 1e-9;
  result.pass = failures == 0 && cyclic_ok;
  result.summary = std::to_string(50 - failures) +
                   "/50 games agree within 0.01, cyclic value " +
                   ExactDecimal(cyclic_solution.value_estimate);
  result.details = {{"games", games},
                    {"worst_value_gap", ExactDecimal(worst_gap)},
                    {"worst_exploitability", ExactDecimal(worst_exploitability)},
                    {"cyclic", ToJson(cyclic_solution)},
                    {"cyclic_ok", cyclic_ok}};
  return result;
}

PayoffMatrix Pad(const PayoffMatrix& m, int factor) {
  const int rows = m.rows() * factor;
  const int cols = m.cols() * factor;
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      entries[static_cast<std::size_t>(r) * cols + c] =
          static_cast<std::uint8_t>(m.At(r % m.rows(), c % m.cols()));
    }
  }
  return PayoffMatrix(rows, cols, std::move(entries));
}

// min over columns of the R-average and max over rows of the J-average,
// enumerated from the multisets alone.
std::pair<double, double> SparseGuarantees(const PayoffMatrix& m,
                                           const SparseEquilibrium& eq) {
  double row_min = 1.0;
  for (int c = 0; c < m.cols(); ++c) {
    long wins = 0;
    for (int r : eq.row_multiset) wins += m.At(r, c);
    row_min = std::min(row_min,
                       static_cast<double>(wins) / eq.row_multiset.size());
  }
  double col_max = 0.0;
  for (int r = 0; r < m.rows(); ++r) {
    long wins = 0;
    for (int c : eq.col_multiset) wins += m.At(r, c);
    col_max = std::max(col_max,
                       static_cast<double>(wins) / eq.col_multiset.size());
  }
  return {row_min, col_max};
}

CriterionResult SparseNashCriterion(const SuiteConfig& config) {
  CriterionResult result;
  constexpr double kEpsilon = 1.0 / 8.0;
  std::vector<NamedClass> classes;
  int samples_per_class = 4;
  if (IsSingletonProfile(config)) {
    classes = SingletonClasses();
    samples_per_class = 1;
  } else {
    classes.push_back(Make("intervals:n=10"));
    classes.push_back(Make("halfspaces_grid:r=2,side=4"));
    classes.push_back(Make("k_interval_unions:k=2,n=8"));
    classes.push_back(Make("random_vc_capped:cap=2,m=40,n=10,seed=3"));
  }
  Json runs = Json::array();
  int total = 0;
  int failures = 0;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const ConceptClass& c = classes[ci].concepts;
    const LearningMap map = InitialLearningMap(c);
    const std::uint64_t seed = CaseSeed(config.seed, 6, ci);
    const std::vector<LabeledSample> samples =
        RandomSamples(c, samples_per_class, 3 * c.domain_size(), seed);
    for (std::size_t si = 0; si < samples.size(); ++si) {
      const WeakLearnerResult weak = BuildHypothesisSet(
          map, samples[si], HypothesisMode::kAuto, CaseSeed(seed, 6, si));
      const PayoffMatrix& base = weak.agreement;
      const PayoffMatrix padded = Pad(base, 10);
      Json entry = {{"class", classes[ci].name},
                    {"rows", base.rows()},
                    {"cols", base.cols()}};
      bool ok = true;
      long sizes[2][2] = {};
      long ceilings[2][2] = {};
      const PayoffMatrix* matrices[2] = {&base, &padded};
      for (int k = 0; k < 2; ++k) {
        try {
          const SparseEquilibrium eq =
              SparseEpsilonNash(*matrices[k], kEpsilon, CaseSeed(seed, 60, si));
          const auto [row_min, col_max] = SparseGuarantees(*matrices[k], eq);
          const double certified = std::max(eq.value_upper - row_min,
                                             col_max - eq.value_lower);
          sizes[k][0] = static_cast<long>(eq.row_multiset.size());
          sizes[k][1] = static_cast<long>(eq.col_multiset.size());
          ceilings[k][0] =
              ApproximationSizeCeiling(eq.columns_vc, kEpsilon, 16.0);
          ceilings[k][1] = ApproximationSizeCeiling(eq.rows_vc, kEpsilon, 16.0);
          ok = ok && certified <= kEpsilon &&
               eq.certified_exploitability <= kEpsilon &&
               sizes[k][0] <= ceilings[k][0] && sizes[k][1] <= ceilings[k][1];
          entry[k == 0 ? "base" : "padded"] = {
              {"row_support", sizes[k][0]},
              {"col_support", sizes[k][1]},
              {"row_ceiling", ceilings[k][0]},
              {"col_ceiling", ceilings[k][1]},
              {"rows_vc", eq.rows_vc},
              {"columns_vc", eq.columns_vc},
              {"certified_exploitability",
               ExactDecimal(eq.certified_exploitability)},
              {"recomputed", ExactDecimal(certified)}};
        } catch (const Error& e) {
          ok = false;
          entry[k == 0 ? "base" : "padded"] = {{"error", e.what()}};
        }
      }
      ok = ok && ceilings[1][0] == ceilings[0][0] &&
           ceilings[1][1] == ceilings[0][1] && sizes[1][0] <= ceilings[0][0] &&
           sizes[1][1] <= ceilings[0][1];
      entry["ok"] = ok;
      ++total;
      if (!ok) ++failures;
      runs.push_back(std::move(entry));
    }
  }
  result.pass = failures == 0 && total > 0;
  result.summary = std::to_string(total - failures) + "/" +
                   std::to_string(total) +
                   " sparse equilibria within ceilings and epsilon";
  result.details = {{"runs", runs}, {"failures", failures}};
  return result;
}

CriterionResult MarginCriterion(const SuiteConfig& config) {
  CriterionResult result;
  std::vector<NamedClass> classes;
  int per_class = 2;
  if (IsSingletonProfile(config)) {
    classes = SingletonClasses();
  } else {
    classes.push_back(Make("intervals:n=10"));
    classes.push_back(Make("halfspaces_grid:r=2,side=5"));
    classes.push_back(Make("k_interval_unions:k=2,n=10"));
    classes.push_back(Make("full_cube:n=4"));
    classes.push_back(Make("random_vc_capped:cap=3,m=60,n=10,seed=9"));
    per_class = 60;
  }
  if (auto extra = ExtraClass(config)) classes.push_back(std::move(*extra));
  Json entries = Json::array();
  long runs = 0;
  long failures = 0;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const ConceptClass& c = classes[ci].concepts;
    const SchemeOptions options = OptionsFor(c);
    const std::uint64_t seed = CaseSeed(config.seed, 7, ci);
    const std::vector<LabeledSample> samples =
        RandomSamples(c, per_class, 4 * c.domain_size(), seed);
    long class_failures = 0;
    int worst_slack = INT32_MAX;
    for (std::size_t si = 0; si < samples.size(); ++si) {
      const CompressionResult run =
          CompressDetailed(c, samples[si], CaseSeed(seed, 7, si), options);
      const long votes_total = static_cast<long>(run.trace.votes.size());
      // Recount from the vote list itself.
      bool ok = true;
      for (const auto& [x, label] : samples[si].labels()) {
        long agreeing = 0;
        for (int f : run.trace.votes) agreeing += c.Value(f, x) == label;
        ok = ok && 2 * agreeing > votes_total;
        worst_slack =
            std::min<long>(worst_slack, 2 * agreeing - votes_total);
      }
      ok = ok && run.report.majority_ok;
      ++runs;
      if (!ok) ++class_failures;
    }
    failures += class_failures;
    entries.push_back({{"class", classes[ci].name},
                       {"runs", samples.size()},
                       {"failures", class_failures},
                       {"min_2agree_minus_T", worst_slack}});
  }
  result.pass = failures == 0;
  result.summary = std::to_string(runs - failures) + "/" +
                   std::to_string(runs) + " compressions with strict majority";
  result.details = {{"classes", entries}, {"failures", failures}};
  return result;
}

CriterionResult ExperimentCriterion(const SuiteConfig& config) {
  CriterionResult result;
  const NamedClass nc = IsSingletonProfile(config)
                            ? SingletonClasses().back()
                            : Make("intervals:n=10");
  ExperimentConfig experiment;
  experiment.epsilon = 1.0 / 3.0;
  experiment.delta = 1.0 / 3.0;
  experiment.trials = config.experiment_trials;
  experiment.seed = CaseSeed(config.seed, 8, 0);
  const ExperimentResult r = RunGeneralizationExperiment(nc.concepts, experiment);
  const long reference = RequiredSampleSize(5, 1.0 / 3.0, 1.0 / 3.0);
  result.pass = r.pass && reference == 349;
  result.summary = std::to_string(r.failures) + "/" + std::to_string(r.trials) +
                   " trials above epsilon at d = " +
                   std::to_string(r.sample_size) + ", bound " +
                   ExactDecimal(r.bound);
  result.details = ToJson(r);
  result.details["class"] = nc.name;
  result.details["required_size_k5"] = reference;
  return result;
}

CriterionResult CodecCriterion(const SuiteConfig& config) {
  CriterionResult result;
  Rng rng(CaseSeed(config.seed, 9, 0));
  long round_trips = 0;
  long round_trip_failures = 0;
  long mutations = 0;
  long undetected = 0;
  std::vector<std::string> examples;
  for (int trial = 0; trial < config.codec_trials; ++trial) {
    const int kernel = 1 + static_cast<int>(rng.UniformInt(
                               trial % 10 == 0 ? 300 : 32));
    const int count = 1 + static_cast<int>(rng.UniformInt(8));
    std::vector<std::vector<int>> subsets(count);
    for (auto& subset : subsets) {
      for (int x = 0; x < kernel; ++x) {
        if (rng.UniformInt(kernel) < 3) subset.push_back(x);
      }
    }
    const std::vector<std::uint8_t> bytes = EncodeInfo(subsets);
    ++round_trips;
    try {
      if (DecodeInfo(bytes, kernel) != subsets) ++round_trip_failures;
    } catch (const DecodeError&) {
      ++round_trip_failures;
    }
    // The bulk sweep uses the status-returning decoder; every 100th trial
    // also goes through the throwing one.
    const bool via_exceptions = trial % 100 == 0;
    std::vector<std::vector<int>> scratch;
    auto expect_rejected = [&](std::span<const std::uint8_t> mutated,
                               const std::string& what) {
      ++mutations;
      bool rejected = !TryDecodeInfo(mutated, kernel, scratch).ok();
      if (via_exceptions) {
        try {
          DecodeInfo(mutated, kernel);
          rejected = false;
        } catch (const DecodeError&) {
        }
      }
      if (!rejected) {
        ++undetected;
        if (examples.size() < 5) examples.push_back(what);
      }
    };
    for (std::size_t length = 0; length < bytes.size(); ++length) {
      expect_rejected(std::span(bytes).first(length),
                      "truncation to " + std::to_string(length));
    }
    std::vector<std::uint8_t> mutated = bytes;
    for (std::size_t at = 0; at < bytes.size(); ++at) {
      for (int delta = 1; delta < 256; ++delta) {
        mutated[at] = static_cast<std::uint8_t>(bytes[at] ^ delta);
        expect_rejected(mutated, "corruption at " + std::to_string(at));
      }
      mutated[at] = bytes[at];
    }
  }
  result.pass = round_trip_failures == 0 && undetected == 0;
  result.summary = std::to_string(round_trips - round_trip_failures) + "/" +
                   std::to_string(round_trips) + " round trips exact, " +
                   std::to_string(mutations - undetected) + "/" +
                   std::to_string(mutations) + " mutations rejected";
  result.details = {{"round_trips", round_trips},
                    {"round_trip_failures", round_trip_failures},
                    {"mutations", mutations},
                    {"undetected", undetected},
                    {"undetected_examples", examples}};
  return result;
}

}  // namespace

SuiteConfig ParseSuiteConfig(std::string_view text, const std::string& origin) {
  const std::string trimmed = Trim(text.substr(0, std::min<std::size_t>(
                                                     text.size(), 4096)));
  if (trimmed.starts_with("{")) return ParseJsonConfig(text, origin);
  SuiteConfig config;
  int line_number = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    ++line_number;
    std::string_view line = text.substr(begin, end - begin);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::string where = origin + ":" + std::to_string(line_number);
    if (!Trim(line).empty()) {
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError(where + ": expected key = value");
      }
      SetKey(config, Trim(line.substr(0, eq)), Trim(line.substr(eq + 1)), where);
    }
    begin = end + 1;
  }
  Validate(config, origin);
  return config;
}

SuiteConfig LoadSuiteConfig(const std::string& path) {
  return ParseSuiteConfig(ReadTextFile(path), path);
}

const char* CriterionName(int id) {
  switch (id) {
    case 1: return "round_trip_exactness";
    case 2: return "kernel_size_independence";
    case 3: return "dual_vc_bound";
    case 4: return "approximation_certificates";
    case 5: return "game_solver_agreement";
    case 6: return "sparse_nash";
    case 7: return "majority_margin";
    case 8: return "generalization_experiment";
    case 9: return "codec";
  }
  return "unknown";
}

std::vector<int> DefaultCriteria(const std::string& profile) {
  if (profile == "singleton") return {1, 2, 3, 4, 6, 7, 8};
  return {1, 2, 3, 4, 5, 6, 7, 8, 9};
}

CriterionResult RunCriterion(int id, const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result;
  switch (id) {
    case 1: result = RoundTripCriterion(config); break;
    case 2: result = KernelIndependenceCriterion(config); break;
    case 3: result = DualBoundCriterion(config); break;
    case 4: result = ApproximationCriterion(config); break;
    case 5: result = GameCriterion(config); break;
    case 6: result = SparseNashCriterion(config); break;
    case 7: result = MarginCriterion(config); break;
    case 8: result = ExperimentCriterion(config); break;
    case 9: result = CodecCriterion(config); break;
    default: throw ConfigError("unknown criterion " + std::to_string(id));
  }
  result.id = id;
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

SuiteResult RunSuite(const SuiteConfig& config) {
  if (config.class_file) ReadConceptClassFile(*config.class_file);
  std::vector<int> ids =
      config.criteria.empty() ? DefaultCriteria(config.profile) : config.criteria;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  SuiteResult result;
  result.pass = true;
  for (int id : ids) {
    CriterionResult r;
    try {
      r = RunCriterion(id, config);
    } catch (const ConfigError&) {
      throw;
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      r.id = id;
      r.pass = false;
      r.summary = std::string("error: ") + e.what();
    }
    result.pass = result.pass && r.pass;
    result.criteria.push_back(std::move(r));
  }
  return result;
}

Json SuiteReport(const SuiteConfig& config, const SuiteResult& result,
                 bool include_timing) {
  Json criteria = Json::object();
  Json timing = Json::object();
  for (const CriterionResult& r : result.criteria) {
    const std::string key = std::to_string(r.id);
    criteria[key] = {{"name", CriterionName(r.id)},
                     {"pass", r.pass},
                     {"summary", r.summary},
                     {"details", r.details}};
    timing[key] = r.seconds;
  }
  Json out = {{"config",
               {{"profile", config.profile},
                {"seed", config.seed},
                {"random_samples", config.random_samples},
                {"codec_trials", config.codec_trials},
                {"experiment_trials", config.experiment_trials}}},
              {"criteria", criteria},
              {"pass", result.pass}};
  if (config.class_file) out["config"]["class_file"] = *config.class_file;
  if (include_timing) out["timing"] = timing;
  return out;
}

}  // namespace vcsc
