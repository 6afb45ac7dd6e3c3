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

#include "vcsc/codec.h"

#include <string>

#include "vcsc/errors.h"

namespace vcsc {

void PutVarint(std::vector<std::uint8_t>& out, std::uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(value | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(value));
}

namespace {

// Non-throwing varint reader: returns an error message or nullptr.
const char* ReadVarint(std::span<const std::uint8_t> bytes, std::size_t& offset,
                       std::uint64_t& value) {
  const std::size_t start = offset;
  value = 0;
  for (int shift = 0; shift < 64; shift += 7) {
    if (offset >= bytes.size()) return "truncated varint";
    const std::uint8_t byte = bytes[offset++];
    if (shift == 63 && byte > 1) {
      --offset;
      return "varint overflow";
    }
    value |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
    if ((byte & 0x80) == 0) {
      if (byte == 0 && offset - start > 1) {
        --offset;
        return "non-minimal varint";
      }
      return nullptr;
    }
  }
  return "varint longer than 10 bytes";
}

}  // namespace

std::uint64_t GetVarint(std::span<const std::uint8_t> bytes,
                        std::size_t& offset) {
  std::uint64_t value = 0;
  if (const char* error = ReadVarint(bytes, offset, value)) {
    throw DecodeError(offset, error);
  }
  return value;
}

int VarintLength(std::uint64_t value) {
  int length = 1;
  while (value >= 0x80) {
    value >>= 7;
    ++length;
  }
  return length;
}

std::uint16_t Crc16(std::span<const std::uint8_t> bytes) {
  std::uint16_t crc = 0xffff;
  for (std::uint8_t byte : bytes) {
    crc ^= static_cast<std::uint16_t>(byte) << 8;
    for (int bit = 0; bit < 8; ++bit) {
      crc = (crc & 0x8000) ? static_cast<std::uint16_t>((crc << 1) ^ 0x1021)
                           : static_cast<std::uint16_t>(crc << 1);
    }
  }
  return crc;
}

std::vector<std::uint8_t> EncodeInfo(
    const std::vector<std::vector<int>>& subsets) {
  if (subsets.empty()) throw DomainError("side information needs T >= 1");
  std::vector<std::uint8_t> out;
  PutVarint(out, subsets.size());
  for (const std::vector<int>& subset : subsets) {
    PutVarint(out, subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i] < 0 || (i > 0 && subset[i] <= subset[i - 1])) {
        throw DomainError("subset positions must be strictly increasing");
      }
      PutVarint(out, static_cast<std::uint64_t>(subset[i]));
    }
  }
  const std::uint16_t crc = Crc16(out);
  out.push_back(static_cast<std::uint8_t>(crc >> 8));
  out.push_back(static_cast<std::uint8_t>(crc & 0xff));
  return out;
}

DecodeStatus TryDecodeInfo(std::span<const std::uint8_t> bytes,
                           std::optional<int> kernel_size,
                           std::vector<std::vector<int>>& subsets) {
  subsets.clear();
  std::size_t offset = 0;
  std::uint64_t count = 0;
  if (const char* e = ReadVarint(bytes, offset, count)) return {offset, e};
  if (count == 0) return {0, "side information declares T = 0"};
  // Each subset needs at least its length byte.
  if (count > bytes.size() - offset) {
    return {0, "subset count exceeds the remaining bytes"};
  }
  subsets.resize(count);
  for (std::vector<int>& subset : subsets) {
    const std::size_t length_at = offset;
    std::uint64_t length = 0;
    if (const char* e = ReadVarint(bytes, offset, length)) return {offset, e};
    if (length > bytes.size() - offset) {
      return {length_at, "subset length exceeds the remaining bytes"};
    }
    subset.reserve(length);
    for (std::uint64_t i = 0; i < length; ++i) {
      const std::size_t at = offset;
      std::uint64_t position = 0;
      if (const char* e = ReadVarint(bytes, offset, position)) return {offset, e};
      if (position > INT32_MAX ||
          (kernel_size && position >= static_cast<std::uint64_t>(*kernel_size))) {
        return {at, "position out of range"};
      }
      if (!subset.empty() && static_cast<int>(position) <= subset.back()) {
        return {at, "positions not strictly increasing"};
      }
      subset.push_back(static_cast<int>(position));
    }
  }
  if (bytes.size() - offset != 2) {
    return {offset, bytes.size() - offset < 2 ? "missing checksum"
                                              : "trailing bytes after checksum"};
  }
  const std::uint16_t stored =
      static_cast<std::uint16_t>((bytes[offset] << 8) | bytes[offset + 1]);
  if (stored != Crc16(bytes.first(offset))) return {offset, "checksum mismatch"};
  return {};
}

std::vector<std::vector<int>> DecodeInfo(std::span<const std::uint8_t> bytes,
                                         std::optional<int> kernel_size) {
  std::vector<std::vector<int>> subsets;
  const DecodeStatus status = TryDecodeInfo(bytes, kernel_size, subsets);
  if (!status.ok()) throw DecodeError(status.offset, status.error);
  return subsets;
}

}  // namespace vcsc
