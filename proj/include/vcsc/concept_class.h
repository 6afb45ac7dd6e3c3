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

#ifndef VCSC_CONCEPT_CLASS_H_
#define VCSC_CONCEPT_CLASS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vcsc/bit_row.h"

namespace vcsc {

// A finite binary concept class: a set of distinct rows over the domain
// {0, ..., domain_size - 1}. Rows are kept in lexicographic order, so a
// concept index names the same row on every run.
//
// Immutable after construction; safe to share across threads.
class ConceptClass {
 public:
  ConceptClass() = default;

  // Throws DomainError if a row has the wrong length or rows repeat.
  static ConceptClass Create(int domain_size, std::vector<BitRow> rows);
  // Like Create, but silently drops repeated rows.
  static ConceptClass Deduplicated(int domain_size, std::vector<BitRow> rows);
  static ConceptClass FromStrings(const std::vector<std::string>& rows);

  int domain_size() const { return domain_size_; }
  int size() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }

  const BitRow& row(int concept_index) const { return rows_[concept_index]; }
  const std::vector<BitRow>& rows() const { return rows_; }
  bool Value(int concept_index, int point) const {
    return rows_[concept_index].Get(point);
  }
  // Bit c of column(x) is Value(c, x).
  const BitRow& column(int point) const { return columns_[point]; }

  // Concept index of `row`, or -1.
  int IndexOf(const BitRow& row) const;

 private:
  void BuildColumns();

  int domain_size_ = 0;
  std::vector<BitRow> rows_;
  std::vector<BitRow> columns_;
};

// A labeled multiset of domain points. Labels live per distinct point, so a
// point presented twice with different labels is rejected.
class LabeledSample {
 public:
  LabeledSample() = default;
  static LabeledSample FromPairs(
      std::span<const std::pair<int, bool>> labeled_points);

  // Throws DomainError on a negative index or a conflicting label.
  void Add(int point, bool label);

  const std::vector<int>& points() const { return points_; }
  const std::map<int, bool>& labels() const { return labels_; }
  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  int distinct_size() const { return static_cast<int>(labels_.size()); }

  // Ascending distinct points, and their labels in the same order.
  std::vector<int> DistinctPoints() const;
  std::vector<std::uint8_t> DistinctLabels() const;
  bool Label(int point) const { return labels_.at(point); }

  // The sample restricted to a subset of its distinct points.
  LabeledSample Restrict(std::span<const int> subset) const;

 private:
  std::vector<int> points_;
  std::map<int, bool> labels_;
};

struct ShatterWitness {
  std::vector<int> set;
  // witness_concepts[pattern] realizes `pattern`, where bit i of the pattern
  // is the label of set[i].
  std::vector<int> witness_concepts;
};

std::optional<ShatterWitness> Shatters(const ConceptClass& concept_class,
                                       std::span<const int> set);

// True iff `witness` certifies that its set is shattered, by direct lookup.
bool VerifyWitness(const ConceptClass& concept_class,
                   const ShatterWitness& witness);

// Exact VC dimension by depth-first search over shattered sets, extending
// only shattered prefixes and stopping at floor(log2 |C|).
int VcDimension(const ConceptClass& concept_class);

// Dual class: domain = concept indices, concepts = distinct columns.
ConceptClass DualClass(const ConceptClass& concept_class);

struct DualMapping {
  ConceptClass dual;
  // point_to_dual[x] is the dual concept index of column x.
  std::vector<int> point_to_dual;
};
DualMapping DualClassWithMapping(const ConceptClass& concept_class);

// Throws DomainError if a sample point lies outside the domain.
void CheckSampleInDomain(const ConceptClass& concept_class,
                         const LabeledSample& sample);

// Ascending indices of concepts agreeing with every label of the sample.
std::vector<int> ConsistentConcepts(const ConceptClass& concept_class,
                                    const LabeledSample& sample);
bool IsRealizable(const ConceptClass& concept_class,
                  const LabeledSample& sample);

// Bitmask (over concepts) of rows consistent with the labeled points.
BitRow ConsistentMask(const ConceptClass& concept_class,
                      std::span<const int> points,
                      std::span<const std::uint8_t> labels);

// Text format: a header line "n m", then m lines of n characters in {0,1}.
// Whitespace-only lines are skipped.
struct BinaryRows {
  int columns = 0;
  std::vector<BitRow> rows;  // file order
};
BinaryRows ParseBinaryRows(std::string_view text, bool reject_duplicates);

ConceptClass ParseConceptClass(std::string_view text);
ConceptClass ReadConceptClassFile(const std::string& path);
std::string FormatConceptClass(const ConceptClass& concept_class);

std::string ReadTextFile(const std::string& path);

}  // namespace vcsc

#endif  // VCSC_CONCEPT_CLASS_H_
