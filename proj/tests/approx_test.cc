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
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "vcsc/errors.h"
#include "vcsc/game.h"
#include "vcsc/generators.h"
#include "vcsc/rng.h"

namespace vcsc {
namespace {

ProbabilityVector RandomDistribution(Rng& rng, int n) {
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) total += (x = -std::log(1.0 - rng.UniformDouble()));
  for (double& x : w) x /= total;
  return ProbabilityVector::Create(std::move(w));
}

// Per-point deviation of the uniform average over `multiset` from p.
double PointDeviation(const ConceptClass& c, const ProbabilityVector& p,
                      const std::vector<int>& multiset) {
  double worst = 0.0;
  for (int x = 0; x < c.domain_size(); ++x) {
    double mass = 0.0, hits = 0.0;
    for (int i = 0; i < c.size(); ++i) mass += p[i] * c.Value(i, x);
    for (int i : multiset) hits += c.Value(i, x);
    worst = std::max(worst, std::abs(mass - hits / multiset.size()));
  }
  return worst;
}

TEST_CASE("Probability vectors validate their entries") {
  CHECK_THROWS_AS(ProbabilityVector::Create({0.5, 0.6}), DomainError);
  CHECK_THROWS_AS(ProbabilityVector::Create({1.5, -0.5}), DomainError);
  CHECK(ProbabilityVector::Uniform(4)[2] == 0.25);
  const std::vector<int> multiset = {1, 1, 3, 0};
  const ProbabilityVector e = ProbabilityVector::Empirical(4, multiset);
  CHECK(e[1] == 0.5);
  CHECK(e[2] == 0.0);
}

TEST_CASE("Size ceiling") {
  CHECK(ApproximationSizeCeiling(2, 0.2, 16.0) == 1200);
  CHECK(ApproximationSizeCeiling(0, 0.5, 16.0) == 64);
  CHECK(ApproximationSizeCeiling(3, 1.0 / 8, 16.0) == 4096);
}

TEST_CASE("Point mass approximates exactly") {
  const ConceptClass c = Intervals(10);
  const auto cert = EpsilonApproximation(
      c, ProbabilityVector::PointMass(10, 4), 0.25, 1);
  CHECK(cert.multiset == std::vector<int>{4});
  CHECK(cert.max_deviation == 0.0);
}

TEST_CASE("Epsilon one accepts a single point") {
  const ConceptClass c = FullCube(3);
  const auto cert =
      EpsilonApproximation(c, ProbabilityVector::Uniform(3), 1.0, 3);
  CHECK(cert.max_deviation <= 1.0);
  CHECK(oracle::Deviation(c, ProbabilityVector::Uniform(3).weights(),
                          std::vector<int>{0}) <= 1.0);
  CHECK_THROWS_AS(EpsilonApproximation(c, ProbabilityVector::Uniform(3), 0.0, 3),
                  DomainError);
  CHECK_THROWS_AS(EpsilonApproximation(c, ProbabilityVector::Uniform(4), 0.5, 3),
                  DomainError);
}

TEST_CASE("Intervals at epsilon 0.2") {
  const ConceptClass c = Intervals(10);
  const ProbabilityVector mu = ProbabilityVector::Uniform(10);
  const auto cert = EpsilonApproximation(c, mu, 0.2, 17);
  CHECK(cert.size() <= 16 * 3 / 0.04 + 1e-9);
  CHECK(cert.vc_dimension == 2);
  CHECK(std::is_sorted(cert.multiset.begin(), cert.multiset.end()));
  const double recomputed = oracle::Deviation(c, mu.weights(), cert.multiset);
  CHECK(recomputed <= 0.2);
  CHECK(std::abs(recomputed - cert.max_deviation) < 1e-12);
}

TEST_CASE("Certificates re-verify on random instances") {
  Rng rng(99);
  const std::vector<ConceptClass> classes = {
      Intervals(12), IntervalUnions(8, 2), HalfspacesGrid(4, 2, 500, 2),
      RandomVcCapped(9, 40, 2, 4)};
  for (const ConceptClass& c : classes) {
    for (double eps : {0.5, 0.25}) {
      const ProbabilityVector mu = RandomDistribution(rng, c.domain_size());
      const auto cert = EpsilonApproximation(c, mu, eps, rng.Next());
      CHECK(cert.size() <= 2 * cert.size_ceiling);
      CHECK(oracle::Deviation(c, mu.weights(), cert.multiset) <= eps + 1e-12);
      CHECK(DeviationOverConcepts(c, mu, cert.multiset) ==
            doctest::Approx(cert.max_deviation).epsilon(1e-12));
    }
  }
}

TEST_CASE("Approximation is deterministic in the seed") {
  const ConceptClass c = IntervalUnions(9, 2);
  const ProbabilityVector mu = ProbabilityVector::Uniform(9);
  const auto a = EpsilonApproximation(c, mu, 0.25, 5);
  const auto b = EpsilonApproximation(c, mu, 0.25, 5);
  CHECK(a.multiset == b.multiset);
  CHECK(a.max_deviation == b.max_deviation);
}

TEST_CASE("Exhausted retries raise an explicit error") {
  const ConceptClass c = Intervals(10);
  ApproxOptions options;
  options.acceptance = 0.0;  // uniform mass cannot be met exactly by one point
  options.retries = 2;
  options.c_apx = 1e-3;
  CHECK_THROWS_AS(
      EpsilonApproximation(c, ProbabilityVector::Uniform(10), 0.5, 1, options),
      ApproximationBudgetExceeded);
}

TEST_CASE("Sparsify a point mass") {
  const ConceptClass c = Intervals(6);
  const auto cert =
      SparsifyMixture(c, ProbabilityVector::PointMass(c.size(), 7), 0.25, 2);
  CHECK(cert.multiset == std::vector<int>{7});
  CHECK(cert.max_deviation == 0.0);
}

TEST_CASE("Concepts agreeing at a point keep its mass exactly") {
  // Canonical order is 00, 10, 11; concepts 1 and 2 agree at point 0.
  const ConceptClass c = ConceptClass::FromStrings({"10", "11", "00"});
  const ProbabilityVector p = ProbabilityVector::Create({0.5, 0.5, 0.0});
  const ProbabilityVector q = ProbabilityVector::Create({0.0, 0.5, 0.5});
  const auto cert = SparsifyMixture(c, q, 0.5, 4);
  double hits = 0.0;
  for (int i : cert.multiset) hits += c.Value(i, 0);
  CHECK(hits / cert.size() == 1.0);
  CHECK(PointDeviation(c, p, SparsifyMixture(c, p, 0.5, 4).multiset) <= 0.5);
}

TEST_CASE("Sparsify the minimax strategy of the intervals game") {
  const ConceptClass c = Intervals(10);
  const PayoffMatrix m = PayoffMatrix::FromRows(c.rows());
  const GameSolution solution = SolveExact(m);
  const auto cert = SparsifyMixture(c, solution.row_strategy, 0.125, 8);
  CHECK(PointDeviation(c, solution.row_strategy, cert.multiset) <= 0.125);
  CHECK(cert.vc_dimension == VcDimension(DualClass(c)));
}

TEST_CASE("Larger epsilon never needs a larger ceiling") {
  for (int d = 0; d < 6; ++d) {
    int last = ApproximationSizeCeiling(d, 0.05, 16.0);
    for (double eps = 0.06; eps <= 1.0; eps += 0.01) {
      const int now = ApproximationSizeCeiling(d, eps, 16.0);
      CHECK(now <= last);
      last = now;
    }
  }
}

}  // namespace
}  // namespace vcsc
