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

#ifndef VCSC_SCHEME_H_
#define VCSC_SCHEME_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vcsc/approx.h"
#include "vcsc/bit_row.h"
#include "vcsc/concept_class.h"
#include "vcsc/learner.h"

namespace vcsc {

// Kernel (Z, z) plus side information i.
struct CompressedSample {
  int domain_size = 0;
  std::vector<int> kernel_points;           // Z, ascending
  std::vector<std::uint8_t> kernel_labels;  // z, aligned with kernel_points
  std::vector<std::uint8_t> side_info;      // EncodeInfo of Z_1..Z_T

  friend bool operator==(const CompressedSample&,
                         const CompressedSample&) = default;
};

inline constexpr double kSparsifyEpsilon = 1.0 / 8.0;
// side_info bits <= kCodecConstant * k * ceil(log2(k + 1)), k = 1 + T * s.
inline constexpr long kCodecConstant = 32;

struct SchemeReport {
  int kernel_size = 0;
  long info_bits = 0;
  int subset_count = 0;   // T
  int subset_budget = 0;  // final s
  long scheme_size = 0;   // kernel_size + info_bits

  int sample_size = 0;
  int distinct_points = 0;
  int vc_dimension = 0;
  int dual_vc_dimension = 0;
  double c_apx = 16.0;
  std::string mode;
  int hypotheses = 0;
  int escalations = 0;
  double weak_min_agreement = 1.0;
  double sparsify_deviation = 0.0;
  // Majority |{t : f_t(x) = y(x)}| > T/2: the smallest agreeing vote count
  // over the sample, and whether it beats T/2 at every point.
  int min_agreeing_votes = 0;
  bool majority_ok = true;
  bool margin_ok = true;  // votes >= ceil(T (2/3 - 1/8 - tol))

  // Ceilings that depend only on (d, d*, s, c_apx), never on the sample.
  long subset_count_ceiling = 0;
  long kernel_ceiling = 0;
  long info_bits_ceiling = 0;
  long scheme_size_ceiling = 0;
};

struct SchemeCeilings {
  long subset_count = 0;
  long kernel = 0;
  long info_bits = 0;
  long scheme_size = 0;
};
SchemeCeilings ComputeCeilings(int dual_vc, int subset_budget, double c_apx);
long InfoBitsBound(long subset_count, int subset_budget);

struct SchemeOptions {
  double c_apx = 16.0;
  HypothesisMode mode = HypothesisMode::kAuto;
  // Precomputed dimensions of the class, to skip recomputation in batches.
  std::optional<int> vc_dimension;
  std::optional<int> dual_vc_dimension;
};

// What the compressor saw: f_1..f_T and their subsets Z_t (domain points).
struct CompressionTrace {
  std::vector<int> votes;
  std::vector<std::vector<int>> subsets;
};

struct CompressionResult {
  CompressedSample compressed;
  SchemeReport report;
  CompressionTrace trace;
};

CompressionResult CompressDetailed(const ConceptClass& concept_class,
                                   const LabeledSample& sample,
                                   std::uint64_t seed,
                                   const SchemeOptions& options = {});

std::pair<CompressedSample, SchemeReport> Compress(
    const ConceptClass& concept_class, const LabeledSample& sample,
    std::uint64_t seed, const SchemeOptions& options = {});

struct ReconstructionTrace {
  std::vector<int> votes;  // h_1..h_T
  BitRow hypothesis;       // majority vote, ties to 0
};

ReconstructionTrace ReconstructDetailed(const ConceptClass& concept_class,
                                        const CompressedSample& compressed);

// Total hypothesis on the whole domain, from (Z, z, i) and the class alone.
BitRow Reconstruct(const ConceptClass& concept_class,
                   const CompressedSample& compressed);

// "MYSCS1", varint domain size, varint |Z|, delta-coded kernel points,
// packed label bits (LSB first), then the side information.
std::vector<std::uint8_t> SerializeCompressed(const CompressedSample& sample);
CompressedSample DeserializeCompressed(std::span<const std::uint8_t> bytes);

struct RoundTripVerdict {
  bool pass = false;
  bool labels_recovered = false;
  bool lists_identical = false;  // f_t(x) == h_t(x) for all t, x in Y
  std::string failure;
  SchemeReport report;
};

// Compress, serialize, deserialize, reconstruct, compare. Failures are
// verdicts; nothing throws for a realizable sample.
RoundTripVerdict VerifyRoundTrip(const ConceptClass& concept_class,
                                 const LabeledSample& sample,
                                 std::uint64_t seed,
                                 const SchemeOptions& options = {});

}  // namespace vcsc

#endif  // VCSC_SCHEME_H_
