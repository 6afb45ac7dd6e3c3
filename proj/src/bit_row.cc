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

#include "vcsc/bit_row.h"

#include <bit>
#include <stdexcept>

namespace vcsc {

BitRow::BitRow(int size) : size_(size), words_((size + 63) / 64, 0) {
  if (size < 0) throw std::invalid_argument("BitRow: negative size");
}

BitRow BitRow::FromString(std::string_view bits) {
  BitRow row(static_cast<int>(bits.size()));
  for (int i = 0; i < row.size_; ++i) {
    if (bits[i] == '1') {
      row.Set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitRow: expected only '0' and '1'");
    }
  }
  return row;
}

void BitRow::Set(int i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

int BitRow::Count() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

int BitRow::FindFirst() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) {
      return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
    }
  }
  return -1;
}

bool BitRow::None() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

BitRow& BitRow::operator&=(const BitRow& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

BitRow& BitRow::operator|=(const BitRow& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

void BitRow::Flip() {
  for (std::uint64_t& w : words_) w = ~w;
  ClearTail();
}

void BitRow::ClearTail() {
  if (size_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
}

std::string BitRow::ToString() const {
  std::string out(size_, '0');
  for (int i = 0; i < size_; ++i) {
    if (Get(i)) out[i] = '1';
  }
  return out;
}

bool operator<(const BitRow& a, const BitRow& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  for (std::size_t k = 0; k < a.words_.size(); ++k) {
    const std::uint64_t diff = a.words_[k] ^ b.words_[k];
    if (diff != 0) {
      const int bit = std::countr_zero(diff);
      return ((a.words_[k] >> bit) & 1u) == 0;
    }
  }
  return false;
}

std::size_t BitRowHash::operator()(const BitRow& row) const {
  std::uint64_t h = 0x84222325cbf29ce4ULL ^ static_cast<std::uint64_t>(row.size());
  for (std::uint64_t w : row.words()) {
    h = (h ^ w) * 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace vcsc
