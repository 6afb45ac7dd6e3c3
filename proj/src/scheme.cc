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

#include "vcsc/scheme.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "vcsc/codec.h"
#include "vcsc/errors.h"
#include "vcsc/rng.h"

namespace vcsc {

long InfoBitsBound(long subset_count, int subset_budget) {
  const long k = 1 + subset_count * subset_budget;
  return kCodecConstant * k *
         static_cast<long>(std::bit_width(static_cast<unsigned long>(k)));
}

SchemeCeilings ComputeCeilings(int dual_vc, int subset_budget, double c_apx) {
  SchemeCeilings out;
  out.subset_count =
      2L * ApproximationSizeCeiling(dual_vc, kSparsifyEpsilon, c_apx);
  out.kernel = out.subset_count * subset_budget;
  out.info_bits = InfoBitsBound(out.subset_count, subset_budget);
  out.scheme_size = out.kernel + out.info_bits;
  return out;
}

namespace {

constexpr char kMagic[] = "MYSCS1";
constexpr std::size_t kMagicLength = 6;

int MarginThreshold(int subset_count) {
  const double fraction =
      kWeakLearnerMass - kSparsifyEpsilon - kWeakLearnerTolerance;
  return static_cast<int>(std::ceil(subset_count * fraction - 1e-9));
}

}  // namespace

CompressionResult CompressDetailed(const ConceptClass& concept_class,
                                   const LabeledSample& sample,
                                   std::uint64_t seed,
                                   const SchemeOptions& options) {
  CheckSampleInDomain(concept_class, sample);
  if (!IsRealizable(concept_class, sample)) {
    throw DomainError("sample is not realizable by the class");
  }
  CompressionResult result;
  SchemeReport& report = result.report;
  report.vc_dimension =
      options.vc_dimension.value_or(VcDimension(concept_class));
  report.dual_vc_dimension = options.dual_vc_dimension.value_or(
      VcDimension(DualClass(concept_class)));
  report.c_apx = options.c_apx;
  report.sample_size = sample.size();
  report.distinct_points = sample.distinct_size();

  const std::vector<int> points = sample.DistinctPoints();
  const std::vector<std::uint8_t> labels = sample.DistinctLabels();
  CompressionTrace& trace = result.trace;
  Rng rng(seed);

  if (sample.empty()) {
    report.subset_budget = std::max(1, report.vc_dimension);
    report.mode = "empty";
    trace.votes = {LowestConsistent(concept_class, {}, {})};
    trace.subsets = {{}};
  } else {
    const LearningMap map(concept_class, std::max(1, report.vc_dimension));
    const WeakLearnerResult weak =
        BuildHypothesisSet(map, sample, options.mode, rng.Split(1).Next());
    report.subset_budget = weak.subset_budget;
    report.mode = HypothesisModeName(weak.mode_used);
    report.hypotheses = weak.hypothesis_set.size();
    report.escalations = weak.escalations;
    report.weak_min_agreement = weak.min_agreement;

    // The hypotheses restricted to the sample, merged where they coincide.
    const HypothesisSet& hs = weak.hypothesis_set;
    const int width = static_cast<int>(points.size());
    std::vector<BitRow> restricted(hs.size(), BitRow(width));
    for (int i = 0; i < hs.size(); ++i) {
      for (int j = 0; j < width; ++j) {
        if (concept_class.Value(hs.hypotheses[i], points[j])) {
          restricted[i].Set(j, true);
        }
      }
    }
    const ConceptClass on_sample = ConceptClass::Deduplicated(width, restricted);
    std::vector<double> mass(on_sample.size(), 0.0);
    std::vector<int> representative(on_sample.size(), -1);
    for (int i = 0; i < hs.size(); ++i) {
      const int c = on_sample.IndexOf(restricted[i]);
      mass[c] += weak.solution.row_strategy[i];
      const int rep = representative[c];
      if (rep < 0 || hs.provenance[i].size() < hs.provenance[rep].size()) {
        representative[c] = i;
      }
    }
    double total = 0.0;
    for (double m : mass) total += m;
    for (double& m : mass) m /= total;

    ApproxOptions approx;
    approx.c_apx = options.c_apx;
    const ApproximationCertificate cert =
        SparsifyMixture(on_sample, ProbabilityVector::Create(std::move(mass)),
                        kSparsifyEpsilon, rng.Split(2).Next(), approx);
    report.sparsify_deviation = cert.max_deviation;
    for (int c : cert.multiset) {
      trace.votes.push_back(hs.hypotheses[representative[c]]);
      trace.subsets.push_back(hs.provenance[representative[c]]);
    }

    const int subset_count = static_cast<int>(trace.votes.size());
    const int threshold = MarginThreshold(subset_count);
    report.min_agreeing_votes = subset_count;
    for (int j = 0; j < width; ++j) {
      int agreeing = 0;
      for (int f : trace.votes) {
        agreeing += concept_class.Value(f, points[j]) == (labels[j] != 0);
      }
      report.min_agreeing_votes = std::min(report.min_agreeing_votes, agreeing);
    }
    report.majority_ok = 2 * report.min_agreeing_votes > subset_count;
    report.margin_ok = report.min_agreeing_votes >= threshold;
  }

  // Z = union of the Z_t; the side information indexes into sorted Z.
  std::vector<int> kernel;
  for (const std::vector<int>& subset : trace.subsets) {
    kernel.insert(kernel.end(), subset.begin(), subset.end());
  }
  std::sort(kernel.begin(), kernel.end());
  kernel.erase(std::unique(kernel.begin(), kernel.end()), kernel.end());
  std::vector<std::vector<int>> positions;
  positions.reserve(trace.subsets.size());
  for (const std::vector<int>& subset : trace.subsets) {
    std::vector<int> pos;
    for (int x : subset) {
      pos.push_back(static_cast<int>(
          std::lower_bound(kernel.begin(), kernel.end(), x) - kernel.begin()));
    }
    positions.push_back(std::move(pos));
  }

  CompressedSample& out = result.compressed;
  out.domain_size = concept_class.domain_size();
  out.kernel_points = kernel;
  for (int x : kernel) out.kernel_labels.push_back(sample.Label(x) ? 1 : 0);
  out.side_info = EncodeInfo(positions);

  report.kernel_size = static_cast<int>(kernel.size());
  report.info_bits = 8L * static_cast<long>(out.side_info.size());
  report.subset_count = static_cast<int>(trace.subsets.size());
  report.scheme_size = report.kernel_size + report.info_bits;
  const SchemeCeilings ceilings = ComputeCeilings(
      report.dual_vc_dimension, report.subset_budget, options.c_apx);
  report.subset_count_ceiling = ceilings.subset_count;
  report.kernel_ceiling = ceilings.kernel;
  report.info_bits_ceiling = ceilings.info_bits;
  report.scheme_size_ceiling = ceilings.scheme_size;
  return result;
}

std::pair<CompressedSample, SchemeReport> Compress(
    const ConceptClass& concept_class, const LabeledSample& sample,
    std::uint64_t seed, const SchemeOptions& options) {
  CompressionResult result =
      CompressDetailed(concept_class, sample, seed, options);
  return {std::move(result.compressed), std::move(result.report)};
}

ReconstructionTrace ReconstructDetailed(const ConceptClass& concept_class,
                                        const CompressedSample& compressed) {
  if (compressed.domain_size != concept_class.domain_size()) {
    throw IntegrityError("compressed sample is over a domain of size " +
                         std::to_string(compressed.domain_size) +
                         ", class domain has size " +
                         std::to_string(concept_class.domain_size()));
  }
  const std::vector<int>& kernel = compressed.kernel_points;
  if (compressed.kernel_labels.size() != kernel.size()) {
    throw IntegrityError("kernel labels do not match kernel points");
  }
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    if (kernel[i] < 0 || kernel[i] >= concept_class.domain_size() ||
        (i > 0 && kernel[i] <= kernel[i - 1])) {
      throw IntegrityError("kernel points must be ascending and in the domain");
    }
    if (compressed.kernel_labels[i] > 1) {
      throw IntegrityError("kernel labels must be binary");
    }
  }
  const std::vector<std::vector<int>> subsets = DecodeInfo(
      compressed.side_info, static_cast<int>(kernel.size()));

  std::vector<std::uint8_t> used(kernel.size(), 0);
  std::map<std::vector<int>, int> learned;
  ReconstructionTrace trace;
  trace.votes.reserve(subsets.size());
  std::map<int, int> multiplicity;
  std::vector<int> pts;
  std::vector<std::uint8_t> lbl;
  for (const std::vector<int>& subset : subsets) {
    auto it = learned.find(subset);
    if (it == learned.end()) {
      pts.clear();
      lbl.clear();
      for (int pos : subset) {
        used[pos] = 1;
        pts.push_back(kernel[pos]);
        lbl.push_back(compressed.kernel_labels[pos]);
      }
      const int h = LowestConsistent(concept_class, pts, lbl);
      if (h < 0) throw IntegrityError("a kernel subset is unrealizable");
      it = learned.emplace(subset, h).first;
    }
    trace.votes.push_back(it->second);
    ++multiplicity[it->second];
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) {
    throw IntegrityError("kernel point not covered by any subset");
  }

  const int n = concept_class.domain_size();
  const long subset_count = static_cast<long>(subsets.size());
  std::vector<long> ones(n, 0);
  for (const auto& [h, count] : multiplicity) {
    for (int x = 0; x < n; ++x) {
      if (concept_class.Value(h, x)) ones[x] += count;
    }
  }
  trace.hypothesis = BitRow(n);
  for (int x = 0; x < n; ++x) {
    if (2 * ones[x] > subset_count) trace.hypothesis.Set(x, true);
  }
  return trace;
}

BitRow Reconstruct(const ConceptClass& concept_class,
                   const CompressedSample& compressed) {
  return ReconstructDetailed(concept_class, compressed).hypothesis;
}

std::vector<std::uint8_t> SerializeCompressed(const CompressedSample& sample) {
  std::vector<std::uint8_t> out(kMagic, kMagic + kMagicLength);
  PutVarint(out, static_cast<std::uint64_t>(sample.domain_size));
  PutVarint(out, sample.kernel_points.size());
  for (std::size_t i = 0; i < sample.kernel_points.size(); ++i) {
    const int delta = i == 0 ? sample.kernel_points[0]
                             : sample.kernel_points[i] - sample.kernel_points[i - 1];
    PutVarint(out, static_cast<std::uint64_t>(delta));
  }
  std::vector<std::uint8_t> packed((sample.kernel_labels.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < sample.kernel_labels.size(); ++i) {
    if (sample.kernel_labels[i]) packed[i / 8] |= std::uint8_t{1} << (i % 8);
  }
  out.insert(out.end(), packed.begin(), packed.end());
  out.insert(out.end(), sample.side_info.begin(), sample.side_info.end());
  return out;
}

CompressedSample DeserializeCompressed(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagicLength ||
      !std::equal(bytes.begin(), bytes.begin() + kMagicLength, kMagic)) {
    throw DecodeError(0, "missing MYSCS1 header");
  }
  std::size_t offset = kMagicLength;
  CompressedSample out;
  const std::uint64_t domain = GetVarint(bytes, offset);
  if (domain == 0 || domain > INT32_MAX) {
    throw DecodeError(kMagicLength, "bad domain size");
  }
  out.domain_size = static_cast<int>(domain);
  const std::size_t count_at = offset;
  const std::uint64_t count = GetVarint(bytes, offset);
  if (count > domain || count > bytes.size() - offset) {
    throw DecodeError(count_at, "bad kernel size");
  }
  std::uint64_t point = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::size_t at = offset;
    const std::uint64_t delta = GetVarint(bytes, offset);
    if (i > 0 && delta == 0) throw DecodeError(at, "kernel points repeat");
    point = (i == 0) ? delta : point + delta;
    if (point >= domain) throw DecodeError(at, "kernel point outside domain");
    out.kernel_points.push_back(static_cast<int>(point));
  }
  const std::size_t label_bytes = (count + 7) / 8;
  if (bytes.size() - offset < label_bytes) {
    throw DecodeError(offset, "truncated label bits");
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    out.kernel_labels.push_back((bytes[offset + i / 8] >> (i % 8)) & 1u);
  }
  if (count % 8 != 0 && (bytes[offset + label_bytes - 1] >> (count % 8)) != 0) {
    throw DecodeError(offset + label_bytes - 1, "nonzero label padding");
  }
  offset += label_bytes;
  out.side_info.assign(bytes.begin() + offset, bytes.end());
  try {
    DecodeInfo(out.side_info, static_cast<int>(count));
  } catch (const DecodeError& e) {
    throw DecodeError(offset + e.offset(), "side information: " +
                                               std::string(e.what()));
  }
  return out;
}

RoundTripVerdict VerifyRoundTrip(const ConceptClass& concept_class,
                                 const LabeledSample& sample,
                                 std::uint64_t seed,
                                 const SchemeOptions& options) {
  RoundTripVerdict verdict;
  try {
    const CompressionResult compressed =
        CompressDetailed(concept_class, sample, seed, options);
    verdict.report = compressed.report;
    // Reconstruction sees only the serialized bytes and the class.
    const CompressedSample wire =
        DeserializeCompressed(SerializeCompressed(compressed.compressed));
    const ReconstructionTrace rebuilt = ReconstructDetailed(concept_class, wire);

    verdict.labels_recovered = true;
    for (const auto& [x, label] : sample.labels()) {
      if (rebuilt.hypothesis.Get(x) != label) {
        verdict.labels_recovered = false;
        verdict.failure = "label mismatch at point " + std::to_string(x);
        break;
      }
    }
    verdict.lists_identical =
        rebuilt.votes.size() == compressed.trace.votes.size();
    for (std::size_t t = 0; verdict.lists_identical && t < rebuilt.votes.size();
         ++t) {
      for (const auto& [x, label] : sample.labels()) {
        if (concept_class.Value(rebuilt.votes[t], x) !=
            concept_class.Value(compressed.trace.votes[t], x)) {
          verdict.lists_identical = false;
          break;
        }
      }
    }
    if (!verdict.lists_identical && verdict.failure.empty()) {
      verdict.failure = "reconstructed vote list differs from the compressor's";
    }
    if (!verdict.report.majority_ok && verdict.failure.empty()) {
      verdict.failure = "majority margin violated";
    }
    verdict.pass = verdict.labels_recovered && verdict.lists_identical &&
                   verdict.report.majority_ok;
  } catch (const Error& e) {
    verdict.pass = false;
    verdict.failure = e.what();
  }
  return verdict;
}

}  // namespace vcsc
