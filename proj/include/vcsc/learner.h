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

#ifndef VCSC_LEARNER_H_
#define VCSC_LEARNER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "vcsc/concept_class.h"
#include "vcsc/game.h"

namespace vcsc {

// Deterministic proper learner: consistent ERM that answers with the lowest
// concept index, on samples of at most `subset_budget` distinct points.
// Holds a non-owning reference; the class must outlive the map.
class LearningMap {
 public:
  // Throws DomainError if subset_budget < 1.
  LearningMap(const ConceptClass& concept_class, int subset_budget);

  const ConceptClass& concept_class() const { return *class_; }
  int subset_budget() const { return subset_budget_; }

 private:
  const ConceptClass* class_;
  int subset_budget_;
};

// Lowest concept index agreeing with the labeled points, or -1.
int LowestConsistent(const ConceptClass& concept_class,
                     std::span<const int> points,
                     std::span<const std::uint8_t> labels);

// Throws DomainError when the sample is unrealizable or has more distinct
// points than the budget.
int Erm(const LearningMap& map, const LabeledSample& sample);

// Starting budget: max(1, VC dimension).
LearningMap InitialLearningMap(const ConceptClass& concept_class);

// Doubles the budget, capped at `distinct_points` (and never below 1).
LearningMap EscalateBudget(const LearningMap& map, int distinct_points);

struct HypothesisSet {
  // Distinct concept indices, in discovery order.
  std::vector<int> hypotheses;
  // provenance[i]: ascending domain points Z with ERM(Z, y|Z) = hypotheses[i],
  // of the smallest size found.
  std::vector<std::vector<int>> provenance;

  int size() const { return static_cast<int>(hypotheses.size()); }
};

enum class HypothesisMode {
  kExhaustive,    // every subset of at most s distinct points
  kDoubleOracle,  // grow the set with best responses to the adversary
  kAuto,          // exhaustive when the subset count is small
};

const char* HypothesisModeName(HypothesisMode mode);

inline constexpr double kWeakLearnerMass = 2.0 / 3.0;
inline constexpr double kWeakLearnerTolerance = 0.01;
inline constexpr double kDoubleOracleMargin = 1.0 / 24.0;
inline constexpr int kDoubleOracleDraws = 32;
inline constexpr int kDoubleOracleStall = 16;
inline constexpr long kAutoExhaustiveSubsets = 20'000;
inline constexpr long kMaxExhaustiveSubsets = 500'000;

struct WeakLearnerResult {
  HypothesisSet hypothesis_set;
  // Agreement game: rows are hypotheses, columns the distinct sample points,
  // entry 1 iff the hypothesis labels the point correctly.
  PayoffMatrix agreement;
  GameSolution solution;
  std::vector<int> points;             // distinct sample points, ascending
  std::vector<std::uint8_t> labels;    // their labels
  int subset_budget = 0;               // final s
  double min_agreement = 0.0;          // min over points of agreeing p-mass
  HypothesisMode mode_used = HypothesisMode::kExhaustive;
  int escalations = 0;
};

// Number of subsets of size at most s drawn from n elements, saturating.
long CountSubsets(int n, int s);

// Finds hypotheses and a mixture p over them with p-mass of agreeing
// hypotheses >= 2/3 - kWeakLearnerTolerance at every distinct sample point.
// Escalates the budget on failure; throws WeakLearningFailed if even the
// full sample does not certify.
WeakLearnerResult BuildHypothesisSet(const LearningMap& map,
                                     const LabeledSample& sample,
                                     HypothesisMode mode, std::uint64_t seed);

// min over columns of the p-mass on ones.
double MinAgreement(const PayoffMatrix& agreement, const ProbabilityVector& p);

}  // namespace vcsc

#endif  // VCSC_LEARNER_H_
