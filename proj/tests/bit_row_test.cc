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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "vcsc/rng.h"

namespace vcsc {
namespace {

std::string RandomBits(Rng& rng, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += (rng.Next() & 1u) ? '1' : '0';
  return s;
}

TEST_CASE("BitRow round-trips through its string form") {
  Rng rng(7);
  for (int n : {1, 5, 63, 64, 65, 130}) {
    const std::string bits = RandomBits(rng, n);
    const BitRow row = BitRow::FromString(bits);
    CHECK(row.size() == n);
    CHECK(row.ToString() == bits);
    CHECK(row.Count() == std::count(bits.begin(), bits.end(), '1'));
    const auto first = bits.find('1');
    CHECK(row.FindFirst() ==
          (first == std::string::npos ? -1 : static_cast<int>(first)));
  }
  CHECK_THROWS_AS(BitRow::FromString("01x"), std::invalid_argument);
}

TEST_CASE("BitRow ordering matches string ordering for equal lengths") {
  Rng rng(11);
  std::vector<std::string> strings;
  for (int i = 0; i < 200; ++i) strings.push_back(RandomBits(rng, 70));
  std::vector<BitRow> rows;
  for (const auto& s : strings) rows.push_back(BitRow::FromString(s));
  std::sort(strings.begin(), strings.end());
  std::sort(rows.begin(), rows.end());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].ToString() == strings[i]);
  }
}

TEST_CASE("Flip keeps the unused tail clear") {
  BitRow row(70);
  row.Flip();
  CHECK(row.Count() == 70);
  CHECK(row.words()[1] == (std::uint64_t{1} << 6) - 1);
  row.Flip();
  CHECK(row.None());
}

TEST_CASE("And/or operate bitwise") {
  const BitRow a = BitRow::FromString("1100");
  const BitRow b = BitRow::FromString("1010");
  BitRow x = a;
  x &= b;
  CHECK(x.ToString() == "1000");
  BitRow y = a;
  y |= b;
  CHECK(y.ToString() == "1110");
  CHECK(BitRowHash{}(a) == BitRowHash{}(BitRow::FromString("1100")));
}

}  // namespace
}  // namespace vcsc
