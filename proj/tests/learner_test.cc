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

#include "vcsc/learner.h"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "vcsc/errors.h"
#include "vcsc/generators.h"
#include "vcsc/rng.h"

namespace vcsc {
namespace {

LabeledSample LabelBy(const ConceptClass& c, int target,
                      const std::vector<int>& points) {
  LabeledSample s;
  for (int x : points) s.Add(x, c.Value(target, x));
  return s;
}

// Every hypothesis must be what the learner outputs on its provenance.
void CheckProvenance(const ConceptClass& c, const LabeledSample& sample,
                     const WeakLearnerResult& r) {
  const HypothesisSet& set = r.hypothesis_set;
  REQUIRE(set.provenance.size() == set.hypotheses.size());
  for (int i = 0; i < set.size(); ++i) {
    const std::vector<int>& z = set.provenance[i];
    CHECK(static_cast<int>(z.size()) <= r.subset_budget);
    CHECK(std::is_sorted(z.begin(), z.end()));
    std::vector<std::uint8_t> labels;
    for (int x : z) labels.push_back(sample.Label(x));
    CHECK(LowestConsistent(c, z, labels) == set.hypotheses[i]);
  }
}

// Minimum over sample points of the agreeing mass of the mixture.
double ScanAgreement(const ConceptClass& c, const LabeledSample& sample,
                     const WeakLearnerResult& r) {
  double worst = 1.0;
  for (int x : sample.DistinctPoints()) {
    double mass = 0.0;
    for (int i = 0; i < r.hypothesis_set.size(); ++i) {
      if (c.Value(r.hypothesis_set.hypotheses[i], x) == sample.Label(x)) {
        mass += r.solution.row_strategy[i];
      }
    }
    worst = std::min(worst, mass);
  }
  return worst;
}

TEST_CASE("ERM returns the lowest consistent concept") {
  const ConceptClass intervals = Intervals(10);
  const LearningMap map(intervals, 4);
  CHECK(Erm(map, LabeledSample()) == 0);

  const std::vector<std::pair<int, bool>> pairs = {{3, true}, {7, true}};
  const int h = Erm(map, LabeledSample::FromPairs(pairs));
  CHECK(h == oracle::Consistent(intervals, pairs).front());
  CHECK(intervals.Value(h, 3));
  CHECK(intervals.Value(h, 7));

  const ConceptClass single = ConceptClass::FromStrings({"0110"});
  const LearningMap one(single, 4);
  CHECK(Erm(one, LabelBy(single, 0, {0, 1, 2, 3})) == 0);

  const std::vector<std::pair<int, bool>> bad = {{2, true}, {5, false}, {8, true}};
  CHECK_THROWS_AS(Erm(map, LabeledSample::FromPairs(bad)), DomainError);
  CHECK_THROWS_AS(Erm(LearningMap(intervals, 1), LabeledSample::FromPairs(pairs)),
                  DomainError);
  CHECK_THROWS_AS(LearningMap(intervals, 0), DomainError);
}

TEST_CASE("Budget escalation") {
  const ConceptClass c = Intervals(10);
  CHECK(InitialLearningMap(c).subset_budget() == 2);
  CHECK(InitialLearningMap(ConceptClass::FromStrings({"01"})).subset_budget() == 1);
  CHECK(EscalateBudget(LearningMap(c, 2), 100).subset_budget() == 4);
  CHECK(EscalateBudget(LearningMap(c, 8), 10).subset_budget() == 10);
  CHECK(EscalateBudget(LearningMap(c, 3), 0).subset_budget() == 1);
}

TEST_CASE("Subset counting saturates") {
  CHECK(CountSubsets(5, 2) == 1 + 5 + 10);
  CHECK(CountSubsets(3, 7) == 8);
  CHECK(CountSubsets(4000, 40) > kMaxExhaustiveSubsets);
}

TEST_CASE("Singleton class yields one hypothesis") {
  const ConceptClass single = ConceptClass::FromStrings({"10101"});
  const LabeledSample s = LabelBy(single, 0, {0, 1, 3, 4});
  const auto r = BuildHypothesisSet(InitialLearningMap(single), s,
                                    HypothesisMode::kExhaustive, 1);
  CHECK(r.hypothesis_set.size() == 1);
  CHECK(r.solution.row_strategy[0] == 1.0);
  CHECK(r.min_agreement == 1.0);
}

TEST_CASE("Full cube contains the target once the budget covers the sample") {
  const ConceptClass cube = FullCube(3);
  for (int target = 0; target < cube.size(); ++target) {
    const LabeledSample s = LabelBy(cube, target, {0, 1, 2});
    const auto r = BuildHypothesisSet(LearningMap(cube, 3), s,
                                      HypothesisMode::kExhaustive, 1);
    const auto& hyps = r.hypothesis_set.hypotheses;
    CHECK(std::find(hyps.begin(), hyps.end(), target) != hyps.end());
    CHECK(r.min_agreement >= kWeakLearnerMass - kWeakLearnerTolerance);
    CheckProvenance(cube, s, r);
  }
}

TEST_CASE("Intervals labeled by [3,6]") {
  const ConceptClass c = Intervals(10);
  BitRow target(10);
  for (int x = 3; x <= 6; ++x) target.Set(x, true);
  const int t = c.IndexOf(target);
  REQUIRE(t >= 0);
  const LabeledSample s = LabelBy(c, t, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  for (HypothesisMode mode :
       {HypothesisMode::kExhaustive, HypothesisMode::kDoubleOracle,
        HypothesisMode::kAuto}) {
    const auto r = BuildHypothesisSet(InitialLearningMap(c), s, mode, 5);
    CHECK(ScanAgreement(c, s, r) >= kWeakLearnerMass - kWeakLearnerTolerance);
    CHECK(MinAgreement(r.agreement, r.solution.row_strategy) ==
          doctest::Approx(r.min_agreement).epsilon(1e-12));
    CheckProvenance(c, s, r);
  }
}

TEST_CASE("Weak learner certifies on random realizable samples") {
  Rng rng(41);
  const std::vector<ConceptClass> classes = {
      IntervalUnions(10, 2), HalfspacesGrid(4, 2, 1000, 3),
      RandomVcCapped(10, 60, 3, 2)};
  for (const ConceptClass& c : classes) {
    for (int trial = 0; trial < 8; ++trial) {
      const int target = static_cast<int>(rng.UniformInt(c.size()));
      std::vector<int> points;
      for (int i = 0; i < 30; ++i) {
        points.push_back(static_cast<int>(rng.UniformInt(c.domain_size())));
      }
      const LabeledSample s = LabelBy(c, target, points);
      const auto mode = trial % 2 ? HypothesisMode::kDoubleOracle
                                  : HypothesisMode::kExhaustive;
      const auto r = BuildHypothesisSet(InitialLearningMap(c), s, mode,
                                        rng.Next());
      CHECK(ScanAgreement(c, s, r) >= kWeakLearnerMass - kWeakLearnerTolerance);
      CHECK(r.points == s.DistinctPoints());
      CheckProvenance(c, s, r);
    }
  }
}

TEST_CASE("Hypothesis sets are deterministic in the seed") {
  const ConceptClass c = RandomVcCapped(10, 60, 3, 2);
  const LabeledSample s = LabelBy(c, 17, {0, 2, 3, 5, 7, 8, 9});
  const auto a = BuildHypothesisSet(InitialLearningMap(c), s,
                                    HypothesisMode::kDoubleOracle, 9);
  const auto b = BuildHypothesisSet(InitialLearningMap(c), s,
                                    HypothesisMode::kDoubleOracle, 9);
  CHECK(a.hypothesis_set.hypotheses == b.hypothesis_set.hypotheses);
  CHECK(a.solution.row_strategy.weights() == b.solution.row_strategy.weights());
}

}  // namespace
}  // namespace vcsc
