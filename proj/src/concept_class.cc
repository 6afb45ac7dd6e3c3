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

#include "vcsc/concept_class.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "vcsc/errors.h"
#include "vcsc/kernels.h"

namespace vcsc {

ConceptClass ConceptClass::Create(int domain_size, std::vector<BitRow> rows) {
  if (domain_size <= 0) throw DomainError("domain size must be positive");
  for (const BitRow& r : rows) {
    if (r.size() != domain_size) {
      throw DomainError("concept row length " + std::to_string(r.size()) +
                        " does not match domain size " +
                        std::to_string(domain_size));
    }
  }
  std::sort(rows.begin(), rows.end());
  if (std::adjacent_find(rows.begin(), rows.end()) != rows.end()) {
    throw DomainError("concept rows must be pairwise distinct");
  }
  ConceptClass out;
  out.domain_size_ = domain_size;
  out.rows_ = std::move(rows);
  out.BuildColumns();
  return out;
}

ConceptClass ConceptClass::Deduplicated(int domain_size,
                                        std::vector<BitRow> rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return Create(domain_size, std::move(rows));
}

ConceptClass ConceptClass::FromStrings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw DomainError("no rows given");
  std::vector<BitRow> bits;
  bits.reserve(rows.size());
  for (const std::string& r : rows) bits.push_back(BitRow::FromString(r));
  return Create(static_cast<int>(rows.front().size()), std::move(bits));
}

void ConceptClass::BuildColumns() {
  columns_.assign(domain_size_, BitRow(size()));
  for (int c = 0; c < size(); ++c) {
    for (int x = 0; x < domain_size_; ++x) {
      if (rows_[c].Get(x)) columns_[x].Set(c, true);
    }
  }
}

int ConceptClass::IndexOf(const BitRow& row) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), row);
  if (it == rows_.end() || !(*it == row)) return -1;
  return static_cast<int>(it - rows_.begin());
}

LabeledSample LabeledSample::FromPairs(
    std::span<const std::pair<int, bool>> labeled_points) {
  LabeledSample out;
  for (const auto& [point, label] : labeled_points) out.Add(point, label);
  return out;
}

void LabeledSample::Add(int point, bool label) {
  if (point < 0) throw DomainError("negative sample point");
  auto [it, inserted] = labels_.emplace(point, label);
  if (!inserted && it->second != label) {
    throw DomainError("conflicting labels for point " + std::to_string(point));
  }
  points_.push_back(point);
}

std::vector<int> LabeledSample::DistinctPoints() const {
  std::vector<int> out;
  out.reserve(labels_.size());
  for (const auto& [point, label] : labels_) out.push_back(point);
  return out;
}

std::vector<std::uint8_t> LabeledSample::DistinctLabels() const {
  std::vector<std::uint8_t> out;
  out.reserve(labels_.size());
  for (const auto& [point, label] : labels_) out.push_back(label);
  return out;
}

LabeledSample LabeledSample::Restrict(std::span<const int> subset) const {
  LabeledSample out;
  for (int x : subset) out.Add(x, labels_.at(x));
  return out;
}

namespace {

void CheckSet(const ConceptClass& concept_class, std::span<const int> set) {
  std::vector<int> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= concept_class.domain_size()) {
      throw DomainError("point " + std::to_string(sorted[i]) +
                        " outside domain of size " +
                        std::to_string(concept_class.domain_size()));
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw DomainError("repeated point " + std::to_string(sorted[i]));
    }
  }
}

}  // namespace

std::optional<ShatterWitness> Shatters(const ConceptClass& concept_class,
                                       std::span<const int> set) {
  CheckSet(concept_class, set);
  const int k = static_cast<int>(set.size());
  if (k >= 31 || (std::int64_t{1} << k) > concept_class.size()) {
    return std::nullopt;
  }
  const std::size_t patterns = std::size_t{1} << k;
  ShatterWitness witness;
  witness.set.assign(set.begin(), set.end());
  witness.witness_concepts.assign(patterns, -1);
  std::size_t found = 0;
  for (int c = 0; c < concept_class.size() && found < patterns; ++c) {
    std::size_t pattern = 0;
    for (int i = 0; i < k; ++i) {
      if (concept_class.Value(c, set[i])) pattern |= std::size_t{1} << i;
    }
    if (witness.witness_concepts[pattern] < 0) {
      witness.witness_concepts[pattern] = c;
      ++found;
    }
  }
  if (found < patterns) return std::nullopt;
  return witness;
}

bool VerifyWitness(const ConceptClass& concept_class,
                   const ShatterWitness& witness) {
  const int k = static_cast<int>(witness.set.size());
  if (k >= 31 || witness.witness_concepts.size() != (std::size_t{1} << k)) {
    return false;
  }
  for (std::size_t pattern = 0; pattern < witness.witness_concepts.size();
       ++pattern) {
    const int c = witness.witness_concepts[pattern];
    if (c < 0 || c >= concept_class.size()) return false;
    for (int i = 0; i < k; ++i) {
      const int x = witness.set[i];
      if (x < 0 || x >= concept_class.domain_size()) return false;
      if (concept_class.Value(c, x) != (((pattern >> i) & 1u) != 0)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Depth-first search over shattered sets in increasing order. Every subset of
// a shattered set is shattered, so only shattered prefixes are extended. The
// concepts are kept grouped by their labels on the current set; a point
// extends the set iff it splits every group.
class MaxShatteredSearch {
 public:
  explicit MaxShatteredSearch(const ConceptClass& concept_class)
      : class_(concept_class) {
    const int n = concept_class.domain_size();
    cap_ = n;
    int bits = 0;
    while (bits + 1 < 31 && (std::int64_t{1} << (bits + 1)) <= concept_class.size()) {
      ++bits;
    }
    cap_ = std::min(cap_, bits);
  }

  int Run() {
    BitRow all(class_.size());
    all.Flip();
    Extend({all}, 0, 0);
    return best_;
  }

 private:
  void Extend(const std::vector<BitRow>& groups, int size, int start) {
    if (best_ == cap_ || size + (class_.domain_size() - start) <= best_) return;
    const std::vector<std::uint8_t> flags =
        kernels::parallel::ExtensionFlags(class_, groups, start);
    for (int x = start; x < class_.domain_size(); ++x) {
      if (!flags[x - start]) continue;
      best_ = std::max(best_, size + 1);
      if (best_ == cap_) return;
      if (size + 1 + (class_.domain_size() - x - 1) <= best_) return;
      std::vector<BitRow> split;
      split.reserve(groups.size() * 2);
      const BitRow& column = class_.column(x);
      for (const BitRow& g : groups) {
        BitRow inside = g;
        inside &= column;
        BitRow outside = column;
        outside.Flip();
        outside &= g;
        split.push_back(std::move(inside));
        split.push_back(std::move(outside));
      }
      Extend(split, size + 1, x + 1);
    }
  }

  const ConceptClass& class_;
  int cap_ = 0;
  int best_ = 0;
};

}  // namespace

int VcDimension(const ConceptClass& concept_class) {
  if (concept_class.empty()) throw DomainError("VC dimension of empty class");
  return MaxShatteredSearch(concept_class).Run();
}

DualMapping DualClassWithMapping(const ConceptClass& concept_class) {
  if (concept_class.empty()) throw DomainError("dual of empty class");
  std::vector<BitRow> columns;
  columns.reserve(concept_class.domain_size());
  for (int x = 0; x < concept_class.domain_size(); ++x) {
    columns.push_back(concept_class.column(x));
  }
  DualMapping out;
  out.dual = ConceptClass::Deduplicated(concept_class.size(), columns);
  out.point_to_dual.reserve(columns.size());
  for (const BitRow& col : columns) {
    out.point_to_dual.push_back(out.dual.IndexOf(col));
  }
  return out;
}

ConceptClass DualClass(const ConceptClass& concept_class) {
  return DualClassWithMapping(concept_class).dual;
}

void CheckSampleInDomain(const ConceptClass& concept_class,
                         const LabeledSample& sample) {
  for (const auto& [point, label] : sample.labels()) {
    if (point >= concept_class.domain_size()) {
      throw DomainError("sample point " + std::to_string(point) +
                        " outside domain of size " +
                        std::to_string(concept_class.domain_size()));
    }
  }
}

BitRow ConsistentMask(const ConceptClass& concept_class,
                      std::span<const int> points,
                      std::span<const std::uint8_t> labels) {
  BitRow mask(concept_class.size());
  mask.Flip();
  BitRow scratch;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (labels[i]) {
      mask &= concept_class.column(points[i]);
    } else {
      scratch = concept_class.column(points[i]);
      scratch.Flip();
      mask &= scratch;
    }
  }
  return mask;
}

std::vector<int> ConsistentConcepts(const ConceptClass& concept_class,
                                    const LabeledSample& sample) {
  CheckSampleInDomain(concept_class, sample);
  const std::vector<int> points = sample.DistinctPoints();
  const std::vector<std::uint8_t> labels = sample.DistinctLabels();
  const BitRow mask = ConsistentMask(concept_class, points, labels);
  std::vector<int> out;
  for (int c = 0; c < mask.size(); ++c) {
    if (mask.Get(c)) out.push_back(c);
  }
  return out;
}

bool IsRealizable(const ConceptClass& concept_class,
                  const LabeledSample& sample) {
  return !ConsistentConcepts(concept_class, sample).empty();
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

BinaryRows ParseBinaryRows(std::string_view text, bool reject_duplicates) {
  BinaryRows out;
  int expected_rows = -1;
  int line_no = 0;
  int header_line = 0;
  std::unordered_map<BitRow, int, BitRowHash> seen;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = Trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (expected_rows < 0) {
      std::istringstream header{std::string(line)};
      long n = 0, m = 0;
      std::string extra;
      if (!(header >> n >> m) || (header >> extra)) {
        throw ParseError(line_no, "expected header 'n m'");
      }
      if (n <= 0) throw ParseError(line_no, "domain size must be positive");
      if (m <= 0) throw ParseError(line_no, "row count must be positive");
      out.columns = static_cast<int>(n);
      expected_rows = static_cast<int>(m);
      header_line = line_no;
      continue;
    }
    if (static_cast<int>(out.rows.size()) == expected_rows) {
      throw ParseError(line_no, "more rows than the header declares");
    }
    if (static_cast<int>(line.size()) != out.columns) {
      throw ParseError(line_no, "expected " + std::to_string(out.columns) +
                                    " characters, found " +
                                    std::to_string(line.size()));
    }
    if (line.find_first_not_of("01") != std::string_view::npos) {
      throw ParseError(line_no, "row must contain only '0' and '1'");
    }
    BitRow row = BitRow::FromString(line);
    if (reject_duplicates) {
      auto [it, inserted] = seen.emplace(row, line_no);
      if (!inserted) {
        throw ParseError(line_no, "duplicate row (first seen on line " +
                                      std::to_string(it->second) + ")");
      }
    }
    out.rows.push_back(std::move(row));
  }
  if (expected_rows < 0) throw ParseError(line_no, "missing header");
  if (static_cast<int>(out.rows.size()) != expected_rows) {
    throw ParseError(line_no, "header on line " + std::to_string(header_line) +
                                  " declares " + std::to_string(expected_rows) +
                                  " rows, found " +
                                  std::to_string(out.rows.size()));
  }
  return out;
}

ConceptClass ParseConceptClass(std::string_view text) {
  BinaryRows parsed = ParseBinaryRows(text, /*reject_duplicates=*/true);
  return ConceptClass::Create(parsed.columns, std::move(parsed.rows));
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ConceptClass ReadConceptClassFile(const std::string& path) {
  const std::string text = ReadTextFile(path);
  try {
    return ParseConceptClass(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.detail());
  }
}

std::string FormatConceptClass(const ConceptClass& concept_class) {
  std::string out = std::to_string(concept_class.domain_size()) + " " +
                    std::to_string(concept_class.size()) + "\n";
  for (const BitRow& r : concept_class.rows()) {
    out += r.ToString();
    out += '\n';
  }
  return out;
}

}  // namespace vcsc
