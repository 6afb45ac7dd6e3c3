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

#ifndef VCSC_APPROX_H_
#define VCSC_APPROX_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vcsc/concept_class.h"

namespace vcsc {

// Non-negative weights summing to 1 within 1e-9.
class ProbabilityVector {
 public:
  ProbabilityVector() = default;
  // Throws DomainError on a negative entry or a bad total.
  static ProbabilityVector Create(std::vector<double> weights);
  static ProbabilityVector Uniform(int size);
  static ProbabilityVector PointMass(int size, int index);
  // Uniform over a multiset of indices in [0, size).
  static ProbabilityVector Empirical(int size, std::span<const int> multiset);

  int size() const { return static_cast<int>(weights_.size()); }
  double operator[](int i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

inline constexpr double kProbabilityTolerance = 1e-9;

struct ApproxOptions {
  double c_apx = 16.0;
  int retries = 64;
  // Deviation a draw must reach to be accepted; defaults to epsilon. The
  // multiset size is always derived from epsilon.
  std::optional<double> acceptance;
};

struct ApproximationCertificate {
  // Sorted indices, repeated according to multiplicity.
  std::vector<int> multiset;
  double max_deviation = 0.0;
  double epsilon = 1.0;

  // Bookkeeping recorded alongside the certificate.
  int vc_dimension = 0;   // dimension that sized the draw
  int size_ceiling = 0;   // ceil(c_apx * (vc_dimension + 1) / epsilon^2)
  int draw_size = 0;      // size actually drawn (ceiling or twice it)
  int attempts = 0;
  bool doubled = false;

  int size() const { return static_cast<int>(multiset.size()); }
};

// ceil(c_apx * (d + 1) / epsilon^2), robust to rounding in epsilon^2.
int ApproximationSizeCeiling(int d, double epsilon, double c_apx);

// Multiset of domain points whose empirical frequencies match mu on every
// concept of the class within epsilon. Draws i.i.d. multisets of the ceiling
// size, verifies each exhaustively, retries, then doubles the size once.
// Multiplicities are divided by their gcd, which keeps every frequency.
// Throws ApproximationBudgetExceeded when nothing certifies.
ApproximationCertificate EpsilonApproximation(const ConceptClass& concept_class,
                                              const ProbabilityVector& mu,
                                              double epsilon,
                                              std::uint64_t seed,
                                              const ApproxOptions& options = {});

// Multiset of concept indices whose average matches the mixture p at every
// domain point within epsilon: the approximation above run on the dual class.
ApproximationCertificate SparsifyMixture(const ConceptClass& concept_class,
                                         const ProbabilityVector& p,
                                         double epsilon, std::uint64_t seed,
                                         const ApproxOptions& options = {});

// Exhaustive recomputation of the certified deviations.
double DeviationOverConcepts(const ConceptClass& concept_class,
                             const ProbabilityVector& mu,
                             std::span<const int> multiset);
double DeviationOverPoints(const ConceptClass& concept_class,
                           const ProbabilityVector& p,
                           std::span<const int> multiset);

}  // namespace vcsc

#endif  // VCSC_APPROX_H_
