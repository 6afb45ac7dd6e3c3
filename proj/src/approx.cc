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

#include "vcsc/approx.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "vcsc/errors.h"
#include "vcsc/kernels.h"
#include "vcsc/rng.h"

namespace vcsc {

ProbabilityVector ProbabilityVector::Create(std::vector<double> weights) {
  if (weights.empty()) throw DomainError("empty probability vector");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw DomainError("negative or NaN probability");
    total += w;
  }
  if (std::fabs(total - 1.0) > kProbabilityTolerance) {
    throw DomainError("probabilities sum to " + std::to_string(total));
  }
  ProbabilityVector out;
  out.weights_ = std::move(weights);
  return out;
}

ProbabilityVector ProbabilityVector::Uniform(int size) {
  if (size <= 0) throw DomainError("uniform vector needs positive size");
  ProbabilityVector out;
  out.weights_.assign(size, 1.0 / size);
  return out;
}

ProbabilityVector ProbabilityVector::PointMass(int size, int index) {
  if (index < 0 || index >= size) throw DomainError("point mass out of range");
  ProbabilityVector out;
  out.weights_.assign(size, 0.0);
  out.weights_[index] = 1.0;
  return out;
}

ProbabilityVector ProbabilityVector::Empirical(int size,
                                               std::span<const int> multiset) {
  if (multiset.empty()) throw DomainError("empirical vector of empty multiset");
  ProbabilityVector out;
  out.weights_.assign(size, 0.0);
  std::vector<long> counts(size, 0);
  for (int i : multiset) {
    if (i < 0 || i >= size) throw DomainError("multiset index out of range");
    ++counts[i];
  }
  for (int i = 0; i < size; ++i) {
    out.weights_[i] = static_cast<double>(counts[i]) /
                      static_cast<double>(multiset.size());
  }
  return out;
}

int ApproximationSizeCeiling(int d, double epsilon, double c_apx) {
  const double raw = c_apx * (d + 1) / (epsilon * epsilon);
  return static_cast<int>(std::ceil(raw - 1e-9));
}

namespace {

std::vector<int> CountsOf(int size, std::span<const int> multiset) {
  std::vector<int> counts(size, 0);
  for (int i : multiset) {
    if (i < 0 || i >= size) throw DomainError("multiset index out of range");
    ++counts[i];
  }
  return counts;
}

std::vector<int> ExpandCounts(const std::vector<int>& counts) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(counts.size()); ++i) {
    out.insert(out.end(), counts[i], i);
  }
  return out;
}

void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw DomainError("epsilon must lie in (0, 1]");
  }
}

// Draws multisets over [0, mass.size()) from `mass` until one is within the
// acceptance threshold on every test row.
ApproximationCertificate Approximate(const ConceptClass& tests,
                                     std::span<const double> mass,
                                     double epsilon, int d, std::uint64_t seed,
                                     const ApproxOptions& options) {
  const double acceptance = options.acceptance.value_or(epsilon);
  ApproximationCertificate cert;
  cert.epsilon = epsilon;
  cert.vc_dimension = d;
  cert.size_ceiling = ApproximationSizeCeiling(d, epsilon, options.c_apx);

  std::vector<double> prefix(mass.size());
  std::partial_sum(mass.begin(), mass.end(), prefix.begin());

  Rng rng(seed);
  double best = 1.0;
  for (int phase = 0; phase < 2; ++phase) {
    const int draw_size = cert.size_ceiling * (phase + 1);
    for (int attempt = 0; attempt < options.retries; ++attempt) {
      ++cert.attempts;
      std::vector<int> counts(mass.size(), 0);
      for (int i = 0; i < draw_size; ++i) ++counts[rng.Categorical(prefix)];
      const double deviation =
          kernels::parallel::MaxDeviation(tests, mass, counts, draw_size).max;
      best = std::min(best, deviation);
      if (deviation > acceptance) continue;

      int g = 0;
      for (int c : counts) g = std::gcd(g, c);
      long total = 0;
      for (int& c : counts) {
        c /= g;
        total += c;
      }
      cert.multiset = ExpandCounts(counts);
      cert.max_deviation =
          kernels::parallel::MaxDeviation(tests, mass, counts, total).max;
      cert.draw_size = draw_size;
      cert.doubled = phase > 0;
      return cert;
    }
  }
  throw ApproximationBudgetExceeded(
      "approximation budget exceeded: best deviation " + std::to_string(best) +
          " > " + std::to_string(acceptance) + " after " +
          std::to_string(cert.attempts) + " draws",
      best);
}

}  // namespace

ApproximationCertificate EpsilonApproximation(const ConceptClass& concept_class,
                                              const ProbabilityVector& mu,
                                              double epsilon,
                                              std::uint64_t seed,
                                              const ApproxOptions& options) {
  CheckEpsilon(epsilon);
  if (mu.size() != concept_class.domain_size()) {
    throw DomainError("distribution size does not match the domain");
  }
  return Approximate(concept_class, mu.weights(), epsilon,
                     VcDimension(concept_class), seed, options);
}

ApproximationCertificate SparsifyMixture(const ConceptClass& concept_class,
                                         const ProbabilityVector& p,
                                         double epsilon, std::uint64_t seed,
                                         const ApproxOptions& options) {
  CheckEpsilon(epsilon);
  if (p.size() != concept_class.size()) {
    throw DomainError("mixture size does not match the concept count");
  }
  const ConceptClass dual = DualClass(concept_class);
  ApproximationCertificate cert = Approximate(
      dual, p.weights(), epsilon, VcDimension(dual), seed, options);
  // Every domain point is one dual concept, so this equals the dual maximum.
  cert.max_deviation = DeviationOverPoints(concept_class, p, cert.multiset);
  return cert;
}

double DeviationOverConcepts(const ConceptClass& concept_class,
                             const ProbabilityVector& mu,
                             std::span<const int> multiset) {
  const std::vector<int> counts = CountsOf(mu.size(), multiset);
  return kernels::serial::MaxDeviation(concept_class, mu.weights(), counts,
                                       static_cast<long>(multiset.size()))
      .max;
}

double DeviationOverPoints(const ConceptClass& concept_class,
                           const ProbabilityVector& p,
                           std::span<const int> multiset) {
  const std::vector<int> counts = CountsOf(p.size(), multiset);
  double worst = 0.0;
  for (int x = 0; x < concept_class.domain_size(); ++x) {
    worst = std::max(worst, kernels::TestDeviation(
                                concept_class.column(x), p.weights(), counts,
                                static_cast<long>(multiset.size())));
  }
  return worst;
}

}  // namespace vcsc
