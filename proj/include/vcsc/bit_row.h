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

#ifndef VCSC_BIT_ROW_H_
#define VCSC_BIT_ROW_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vcsc {

// Fixed-length packed bit sequence. Bit i lives in word i / 64 at position
// i % 64; unused high bits of the last word are always zero.
//
// Ordering is lexicographic over the bit string read from index 0 upward,
// which is the order of the textual "0101..." rendering.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(int size);

  static BitRow FromString(std::string_view bits);

  int size() const { return size_; }
  bool Get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void Set(int i, bool value);

  int Count() const;
  // Index of the lowest set bit, or -1.
  int FindFirst() const;
  bool None() const;

  BitRow& operator&=(const BitRow& other);
  BitRow& operator|=(const BitRow& other);
  void Flip();

  std::string ToString() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BitRow& a, const BitRow& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator<(const BitRow& a, const BitRow& b);

 private:
  void ClearTail();

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitRowHash {
  std::size_t operator()(const BitRow& row) const;
};

}  // namespace vcsc

#endif  // VCSC_BIT_ROW_H_
