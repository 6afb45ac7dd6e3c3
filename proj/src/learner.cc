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
#include <numeric>
#include <unordered_map>

#include "vcsc/errors.h"
#include "vcsc/kernels.h"
#include "vcsc/rng.h"

namespace vcsc {

LearningMap::LearningMap(const ConceptClass& concept_class, int subset_budget)
    : class_(&concept_class), subset_budget_(subset_budget) {
  if (subset_budget < 1) throw DomainError("subset budget must be >= 1");
}

int LowestConsistent(const ConceptClass& concept_class,
                     std::span<const int> points,
                     std::span<const std::uint8_t> labels) {
  return ConsistentMask(concept_class, points, labels).FindFirst();
}

int Erm(const LearningMap& map, const LabeledSample& sample) {
  const ConceptClass& cls = map.concept_class();
  CheckSampleInDomain(cls, sample);
  if (sample.distinct_size() > map.subset_budget()) {
    throw DomainError("sample has " + std::to_string(sample.distinct_size()) +
                      " distinct points, budget is " +
                      std::to_string(map.subset_budget()));
  }
  const int c = LowestConsistent(cls, sample.DistinctPoints(),
                                 sample.DistinctLabels());
  if (c < 0) throw DomainError("sample is not realizable by the class");
  return c;
}

LearningMap InitialLearningMap(const ConceptClass& concept_class) {
  return LearningMap(concept_class, std::max(1, VcDimension(concept_class)));
}

LearningMap EscalateBudget(const LearningMap& map, int distinct_points) {
  const int doubled = map.subset_budget() * 2;
  return LearningMap(map.concept_class(),
                     std::max(1, std::min(doubled, distinct_points)));
}

const char* HypothesisModeName(HypothesisMode mode) {
  switch (mode) {
    case HypothesisMode::kExhaustive:
      return "exhaustive";
    case HypothesisMode::kDoubleOracle:
      return "double_oracle";
    case HypothesisMode::kAuto:
      return "auto";
  }
  return "unknown";
}

long CountSubsets(int n, int s) {
  constexpr long kSaturate = 1L << 40;
  long total = 0;
  long binom = 1;  // C(n, k)
  for (int k = 0; k <= std::min(n, s); ++k) {
    total += binom;
    if (total >= kSaturate) return kSaturate;
    binom = binom * (n - k) / (k + 1);
  }
  return total;
}

double MinAgreement(const PayoffMatrix& agreement, const ProbabilityVector& p) {
  return ComputeBestResponse(agreement, p.weights(), Side::kColumn).payoff;
}

namespace {

constexpr double kMwTarget = 0.005;
constexpr int kDoubleOracleRoundCap = 2000;

// Growing hypothesis set over a fixed collapsed sample.
class Discovery {
 public:
  Discovery(const ConceptClass& cls, std::vector<int> points,
            std::vector<std::uint8_t> labels)
      : cls_(cls), points_(std::move(points)), labels_(std::move(labels)) {}

  // ERM on the given positions into points_; returns the hypothesis and
  // whether it was new.
  std::pair<int, bool> Learn(const std::vector<int>& positions) {
    scratch_points_.clear();
    scratch_labels_.clear();
    for (int i : positions) {
      scratch_points_.push_back(points_[i]);
      scratch_labels_.push_back(labels_[i]);
    }
    const int h = LowestConsistent(cls_, scratch_points_, scratch_labels_);
    if (h < 0) throw DomainError("sample is not realizable by the class");
    auto [it, inserted] = index_.emplace(h, set_.size());
    if (inserted) {
      set_.hypotheses.push_back(h);
      set_.provenance.push_back(scratch_points_);
    }
    return {h, inserted};
  }

  double Agreement(int h, std::span<const double> q) const {
    double total = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (cls_.Value(h, points_[i]) == (labels_[i] != 0)) total += q[i];
    }
    return total;
  }

  PayoffMatrix AgreementMatrix() const {
    std::vector<std::uint8_t> entries = kernels::parallel::AgreementMatrix(
        cls_, set_.hypotheses, points_, labels_);
    return PayoffMatrix(set_.size(), static_cast<int>(points_.size()),
                        std::move(entries));
  }

  const HypothesisSet& set() const { return set_; }
  int width() const { return static_cast<int>(points_.size()); }

 private:
  const ConceptClass& cls_;
  std::vector<int> points_;
  std::vector<std::uint8_t> labels_;
  HypothesisSet set_;
  std::unordered_map<int, std::size_t> index_;
  std::vector<int> scratch_points_;
  std::vector<std::uint8_t> scratch_labels_;
};

struct Attempt {
  HypothesisSet set;
  PayoffMatrix agreement;
  GameSolution solution;
  double min_agreement = 0.0;
};

Attempt Solve(const Discovery& discovery) {
  Attempt out;
  out.set = discovery.set();
  out.agreement = discovery.AgreementMatrix();
  out.solution = SolveReduced(out.agreement, kMwTarget);
  out.min_agreement = MinAgreement(out.agreement, out.solution.row_strategy);
  return out;
}

bool Certified(const Attempt& attempt) {
  return attempt.min_agreement >= kWeakLearnerMass - kWeakLearnerTolerance;
}

Attempt Exhaustive(const ConceptClass& cls, const std::vector<int>& points,
                   const std::vector<std::uint8_t>& labels, int s) {
  Discovery discovery(cls, points, labels);
  const int n = static_cast<int>(points.size());
  std::vector<int> combo;
  for (int k = 0; k <= std::min(s, n); ++k) {
    combo.resize(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      discovery.Learn(combo);
      int i = k - 1;
      while (i >= 0 && combo[i] == n - k + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return Solve(discovery);
}

Attempt DoubleOracle(const ConceptClass& cls, const std::vector<int>& points,
                     const std::vector<std::uint8_t>& labels, int s,
                     Rng& rng) {
  Discovery discovery(cls, points, labels);
  discovery.Learn({});
  Attempt current = Solve(discovery);
  int stall = 0;
  for (int round = 0; round < kDoubleOracleRoundCap; ++round) {
    if (current.min_agreement >= kWeakLearnerMass + kDoubleOracleMargin) break;
    const std::vector<double>& q = current.solution.col_strategy.weights();
    std::vector<double> prefix(q.size());
    std::partial_sum(q.begin(), q.end(), prefix.begin());
    std::vector<int> best_draw;
    double best_score = -1.0;
    for (int b = 0; b < kDoubleOracleDraws; ++b) {
      std::vector<int> draw;
      for (int i = 0; i < s; ++i) draw.push_back(rng.Categorical(prefix));
      std::sort(draw.begin(), draw.end());
      draw.erase(std::unique(draw.begin(), draw.end()), draw.end());
      std::vector<int> pts;
      std::vector<std::uint8_t> lbl;
      for (int i : draw) {
        pts.push_back(points[i]);
        lbl.push_back(labels[i]);
      }
      const int h = LowestConsistent(cls, pts, lbl);
      const double score = discovery.Agreement(h, q);
      if (score > best_score) {
        best_score = score;
        best_draw = std::move(draw);
      }
    }
    if (discovery.Learn(best_draw).second) {
      stall = 0;
      current = Solve(discovery);
    } else if (++stall >= kDoubleOracleStall) {
      break;
    }
  }
  return current;
}

}  // namespace

WeakLearnerResult BuildHypothesisSet(const LearningMap& map,
                                     const LabeledSample& sample,
                                     HypothesisMode mode, std::uint64_t seed) {
  const ConceptClass& cls = map.concept_class();
  if (sample.empty()) throw DomainError("hypothesis set of an empty sample");
  if (!IsRealizable(cls, sample)) {
    throw DomainError("sample is not realizable by the class");
  }
  const std::vector<int> points = sample.DistinctPoints();
  const std::vector<std::uint8_t> labels = sample.DistinctLabels();
  const int distinct = static_cast<int>(points.size());

  Rng rng(seed);
  LearningMap current(cls, std::min(map.subset_budget(), distinct));
  WeakLearnerResult result;
  while (true) {
    const int s = current.subset_budget();
    const long subsets = CountSubsets(distinct, s);
    HypothesisMode used = mode;
    if (mode == HypothesisMode::kAuto) {
      used = subsets <= kAutoExhaustiveSubsets ? HypothesisMode::kExhaustive
                                               : HypothesisMode::kDoubleOracle;
    }
    if (used == HypothesisMode::kExhaustive && subsets > kMaxExhaustiveSubsets) {
      throw DomainError("exhaustive enumeration of " + std::to_string(subsets) +
                        " subsets exceeds the cap");
    }
    Attempt attempt;
    if (used == HypothesisMode::kExhaustive) {
      attempt = Exhaustive(cls, points, labels, s);
    } else {
      Rng round_rng = rng.Split(static_cast<std::uint64_t>(s));
      attempt = DoubleOracle(cls, points, labels, s, round_rng);
      if (!Certified(attempt) && distinct <= 20 && s <= 4) {
        attempt = Exhaustive(cls, points, labels, s);
        used = HypothesisMode::kExhaustive;
      }
    }
    if (Certified(attempt)) {
      result.hypothesis_set = std::move(attempt.set);
      result.agreement = std::move(attempt.agreement);
      result.solution = std::move(attempt.solution);
      result.points = points;
      result.labels = labels;
      result.subset_budget = s;
      result.min_agreement = attempt.min_agreement;
      result.mode_used = used;
      return result;
    }
    if (s >= distinct) {
      throw WeakLearningFailed(
          "no subset budget up to " + std::to_string(distinct) +
          " certified agreement mass " + std::to_string(kWeakLearnerMass));
    }
    current = EscalateBudget(current, distinct);
    ++result.escalations;
  }
}

}  // namespace vcsc
