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

#ifndef VCSC_CODEC_H_
#define VCSC_CODEC_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace vcsc {

// LEB128 unsigned varints. Decoding rejects truncated, overlong and
// non-minimal encodings with a DecodeError at the offending byte.
void PutVarint(std::vector<std::uint8_t>& out, std::uint64_t value);
std::uint64_t GetVarint(std::span<const std::uint8_t> bytes,
                        std::size_t& offset);
int VarintLength(std::uint64_t value);

// CRC-16/CCITT-FALSE (poly 0x1021, init 0xFFFF). Detects every error burst
// of up to 16 bits, in particular any single corrupted byte.
std::uint16_t Crc16(std::span<const std::uint8_t> bytes);

// Side information: varint T, then per subset a varint length followed by
// that many strictly increasing varint positions into the sorted kernel,
// then a big-endian CRC-16 of everything before it.
//
// Throws DomainError if T == 0 or a subset is not strictly increasing.
std::vector<std::uint8_t> EncodeInfo(
    const std::vector<std::vector<int>>& subsets);

struct DecodeStatus {
  std::size_t offset = 0;
  const char* error = nullptr;  // null on success
  bool ok() const { return error == nullptr; }
};

// Non-throwing form of DecodeInfo below, for bulk validation.
DecodeStatus TryDecodeInfo(std::span<const std::uint8_t> bytes,
                           std::optional<int> kernel_size,
                           std::vector<std::vector<int>>& subsets);

// Strict inverse of EncodeInfo; rejects trailing bytes. With kernel_size,
// positions >= kernel_size are rejected too.
std::vector<std::vector<int>> DecodeInfo(
    std::span<const std::uint8_t> bytes,
    std::optional<int> kernel_size = std::nullopt);

}  // namespace vcsc

#endif  // VCSC_CODEC_H_
