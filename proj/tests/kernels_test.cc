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

#include "vcsc/kernels.h"

#include <omp.h>

#include <vector>

#include "doctest.h"
#include "vcsc/generators.h"
#include "vcsc/rng.h"

namespace vcsc::kernels {
namespace {

struct Threads {
  explicit Threads(int n) : saved(omp_get_max_threads()) {
    omp_set_num_threads(n);
  }
  ~Threads() { omp_set_num_threads(saved); }
  int saved;
};

std::vector<std::uint8_t> RandomBits(Rng& rng, std::size_t n) {
  std::vector<std::uint8_t> out(n);
  for (auto& b : out) b = rng.Next() & 1u;
  return out;
}

TEST_CASE("Shatter flags agree between serial and parallel") {
  Threads threads(4);
  const ConceptClass c = HalfspacesGrid(5, 2, 2000, 3);
  std::vector<std::vector<int>> candidates;
  for (int a = 0; a < c.domain_size(); ++a) {
    for (int b = a + 1; b < c.domain_size(); b += 3) {
      candidates.push_back({a, b});
      if (b + 1 < c.domain_size()) candidates.push_back({a, b, b + 1});
    }
  }
  const auto s = serial::ShatterFlags(c, candidates);
  CHECK(s == parallel::ShatterFlags(c, candidates));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    CHECK(s[i] == IsShattered(c, candidates[i]));
  }
}

TEST_CASE("Extension flags agree between serial and parallel") {
  Threads threads(4);
  const ConceptClass c = RandomVcCapped(12, 200, 4, 9);
  // Group concepts by their label on point 0.
  BitRow ones = c.column(0);
  BitRow zeros = ones;
  zeros.Flip();
  const std::vector<BitRow> groups = {zeros, ones};
  const auto s = serial::ExtensionFlags(c, groups, 1);
  CHECK(s == parallel::ExtensionFlags(c, groups, 1));
  for (int x = 1; x < c.domain_size(); ++x) {
    CHECK(static_cast<bool>(s[x - 1]) ==
          IsShattered(c, std::vector<int>{0, x}));
  }
}

TEST_CASE("Deviation, payoffs and agreement are bit-identical") {
  Threads threads(4);
  Rng rng(31);
  const ConceptClass c = Intervals(64);
  std::vector<double> mass(64);
  double total_mass = 0.0;
  for (double& w : mass) total_mass += (w = rng.UniformDouble());
  for (double& w : mass) w /= total_mass;
  std::vector<int> counts(64);
  long total = 0;
  for (int& k : counts) total += (k = static_cast<int>(rng.UniformInt(5)));
  const Deviation a = serial::MaxDeviation(c, mass, counts, total);
  const Deviation b = parallel::MaxDeviation(c, mass, counts, total);
  CHECK(a.max == b.max);
  CHECK(a.argmax == b.argmax);
  CHECK(a.max == TestDeviation(c.row(a.argmax), mass, counts, total));

  const int rows = 300, cols = 170;
  const std::vector<std::uint8_t> entries =
      RandomBits(rng, static_cast<std::size_t>(rows) * cols);
  const MatrixView m{rows, cols, entries};
  std::vector<double> p(rows, 1.0 / rows), q(cols, 1.0 / cols);
  std::vector<double> r1(rows), r2(rows), c1(cols), c2(cols);
  serial::RowPayoffs(m, q, r1);
  parallel::RowPayoffs(m, q, r2);
  serial::ColPayoffs(m, p, c1);
  parallel::ColPayoffs(m, p, c2);
  CHECK(r1 == r2);
  CHECK(c1 == c2);

  std::vector<int> hyps, points;
  for (int h = 0; h < c.size(); h += 7) hyps.push_back(h);
  for (int x = 0; x < 64; x += 2) points.push_back(x);
  const auto labels = RandomBits(rng, points.size());
  const auto g1 = serial::AgreementMatrix(c, hyps, points, labels);
  CHECK(g1 == parallel::AgreementMatrix(c, hyps, points, labels));
  for (std::size_t h = 0; h < hyps.size(); ++h) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      CHECK(g1[h * points.size() + i] ==
            (c.Value(hyps[h], points[i]) == (labels[i] != 0)));
    }
  }
}

}  // namespace
}  // namespace vcsc::kernels
