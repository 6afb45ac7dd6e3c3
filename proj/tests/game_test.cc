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

#include "vcsc/game.h"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "vcsc/errors.h"
#include "vcsc/rng.h"

namespace vcsc {
namespace {

PayoffMatrix FromStrings(const std::vector<std::string>& rows) {
  std::vector<BitRow> bits;
  for (const auto& r : rows) bits.push_back(BitRow::FromString(r));
  return PayoffMatrix::FromRows(bits);
}

PayoffMatrix RandomMatrix(Rng& rng, int rows, int cols) {
  std::vector<std::uint8_t> e(static_cast<std::size_t>(rows) * cols);
  for (auto& b : e) b = rng.Next() & 1u;
  return PayoffMatrix(rows, cols, std::move(e));
}

std::vector<std::vector<int>> Dense(const PayoffMatrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out[r][c] = m.At(r, c);
  }
  return out;
}

std::vector<double> Uniform(const std::vector<int>& multiset, int size) {
  std::vector<double> w(size, 0.0);
  for (int i : multiset) w[i] += 1.0 / multiset.size();
  return w;
}

TEST_CASE("Best responses") {
  const PayoffMatrix ones = FromStrings({"11", "11", "11"});
  const auto a = ComputeBestResponse(ones, std::vector<double>{0.3, 0.7},
                                     Side::kRow);
  CHECK(a.index == 0);
  CHECK(a.payoff == 1.0);
  const PayoffMatrix id = FromStrings({"10", "01"});
  const auto b = ComputeBestResponse(id, std::vector<double>{1.0, 0.0},
                                     Side::kRow);
  CHECK(b.index == 0);
  CHECK(b.payoff == 1.0);
  const auto c = ComputeBestResponse(id, std::vector<double>{0.5, 0.5},
                                     Side::kRow);
  CHECK(c.index == 0);
  CHECK(c.payoff == 0.5);
  const auto d = ComputeBestResponse(id, std::vector<double>{0.0, 1.0},
                                     Side::kColumn);
  CHECK(d.index == 0);
  CHECK(d.payoff == 0.0);
  CHECK_THROWS_AS(ComputeBestResponse(id, std::vector<double>{1.0}, Side::kRow),
                  DomainError);
}

TEST_CASE("Matrix parsing allows repeated rows") {
  const PayoffMatrix m = ParsePayoffMatrix("2 3\n10\n10\n01\n");
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 2);
  CHECK(FormatPayoffMatrix(m) == "2 3\n10\n10\n01\n");
  CHECK_THROWS_AS(PayoffMatrix(1, 1, {2}), DomainError);
}

TEST_CASE("Exact values of small games") {
  const GameSolution ones = SolveExact(FromStrings({"111", "111"}));
  CHECK(ones.value_estimate == doctest::Approx(1.0).epsilon(1e-12));

  const GameSolution id = SolveExact(FromStrings({"10", "01"}));
  CHECK(id.value_estimate == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(id.row_strategy[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(id.col_strategy[1] == doctest::Approx(0.5).epsilon(1e-12));

  const PayoffMatrix cyc = FromStrings({"110", "011", "101"});
  const GameSolution s = SolveExact(cyc);
  CHECK(std::abs(s.value_estimate - 2.0 / 3.0) <= 1e-9);
  const std::vector<double> u(3, 1.0 / 3.0);
  CHECK(std::abs(oracle::RowGuarantee(Dense(cyc), u) - 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(oracle::ColGuarantee(Dense(cyc), u) - 2.0 / 3.0) < 1e-12);
  CHECK(s.exploitability <= 1e-9);
}

TEST_CASE("Exact solutions satisfy weak duality on random games") {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng.UniformInt(30));
    const int cols = 1 + static_cast<int>(rng.UniformInt(30));
    const PayoffMatrix m = RandomMatrix(rng, rows, cols);
    const GameSolution s = SolveExact(m);
    const double lower = oracle::RowGuarantee(Dense(m), s.row_strategy.weights());
    const double upper = oracle::ColGuarantee(Dense(m), s.col_strategy.weights());
    CHECK(lower <= upper + 1e-12);
    CHECK(upper - lower <= 1e-9);
    CHECK(s.value_estimate >= lower - 1e-9);
    CHECK(s.value_estimate <= upper + 1e-9);
  }
}

TEST_CASE("Exact solver refuses oversized games") {
  Rng rng(4);
  CHECK_THROWS_AS(SolveExact(RandomMatrix(rng, 10, 10), 50), DomainError);
}

TEST_CASE("Multiplicative weights") {
  const GameSolution ones = SolveMw(FromStrings({"11", "11"}), 0.01);
  CHECK(ones.value_estimate >= 0.99);
  CHECK(ones.value_estimate <= 1.0);
  const GameSolution id = SolveMw(FromStrings({"10", "01"}), 0.01);
  CHECK(id.value_estimate >= 0.49);
  CHECK(id.value_estimate <= 0.51);

  Rng rng(50);
  for (int trial = 0; trial < 5; ++trial) {
    const PayoffMatrix m = RandomMatrix(rng, 50, 50);
    const GameSolution mw = SolveMw(m, 0.01);
    const GameSolution exact = SolveExact(m);
    CHECK(std::abs(mw.value_estimate - exact.value_estimate) <= 0.01);
    const StrategyEvaluation e =
        EvaluateStrategies(m, mw.row_strategy.weights(), mw.col_strategy.weights());
    CHECK(e.exploitability <= 0.01);
    CHECK(e.row_guarantee >= mw.value_estimate - mw.exploitability - 1e-12);
    CHECK(e.col_guarantee <= mw.value_estimate + mw.exploitability + 1e-12);
  }
  CHECK_THROWS_AS(SolveMw(RandomMatrix(rng, 20, 20), 1e-6, 100),
                  ConvergenceError);
}

TEST_CASE("Reduction preserves the value") {
  Rng rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    // Few distinct rows and columns so that merging has work to do.
    const int rows = 2 + static_cast<int>(rng.UniformInt(20));
    const PayoffMatrix base = RandomMatrix(rng, 4, 5);
    std::vector<std::uint8_t> e;
    for (int r = 0; r < rows; ++r) {
      const int src = static_cast<int>(rng.UniformInt(4));
      for (int c = 0; c < 10; ++c) e.push_back(base.At(src, c % 5));
    }
    const PayoffMatrix m(rows, 10, e);
    const double exact = SolveExact(m).value_estimate;
    const ReducedGame reduced = ReduceGame(m, true);
    CHECK(reduced.matrix.rows() <= 4);
    CHECK(reduced.matrix.cols() <= 5);
    CHECK(std::abs(SolveExact(reduced.matrix).value_estimate - exact) < 1e-9);
    const GameSolution lifted = SolveReduced(m, 0.01);
    CHECK(lifted.row_strategy.size() == rows);
    CHECK(std::abs(lifted.value_estimate - exact) < 1e-9);
    const StrategyEvaluation ev = EvaluateStrategies(
        m, lifted.row_strategy.weights(), lifted.col_strategy.weights());
    CHECK(ev.exploitability <= 1e-9);
  }
}

TEST_CASE("Sparse Nash on constant and identity games") {
  const PayoffMatrix ones = FromStrings({"111", "111"});
  const SparseEquilibrium a = SparseEpsilonNash(ones, 0.25, 1);
  CHECK(a.row_multiset.size() == 1);
  CHECK(a.col_multiset.size() == 1);
  CHECK(a.certified_exploitability == 0.0);

  const PayoffMatrix id = FromStrings({"10", "01"});
  const SparseEquilibrium b = SparseEpsilonNash(id, 0.3, 2);
  const int d = std::max(b.rows_vc, b.columns_vc);
  CHECK(b.row_multiset.size() <= 2 * std::ceil(16.0 * (d + 1) / 0.09));
  CHECK(b.col_multiset.size() <= 2 * std::ceil(16.0 * (d + 1) / 0.09));
  const auto p = Uniform(b.row_multiset, 2);
  const auto q = Uniform(b.col_multiset, 2);
  CHECK(0.5 - ComputeBestResponse(id, p, Side::kColumn).payoff <= 0.3);
  CHECK(ComputeBestResponse(id, q, Side::kRow).payoff - 0.5 <= 0.3);
  CHECK(CertifySparseEquilibrium(id, b) <= 0.3);
}

TEST_CASE("Sparse Nash certificates re-verify by enumeration") {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const PayoffMatrix m = RandomMatrix(rng, 12, 9);
    const SparseEquilibrium eq = SparseEpsilonNash(m, 0.125, rng.Next());
    const double value = SolveExact(m).value_estimate;
    const auto dense = Dense(m);
    CHECK(value - oracle::RowGuarantee(dense, Uniform(eq.row_multiset, 12)) <=
          0.125 + 1e-12);
    CHECK(oracle::ColGuarantee(dense, Uniform(eq.col_multiset, 9)) - value <=
          0.125 + 1e-12);
    CHECK(eq.value_lower <= value + 1e-9);
    CHECK(eq.value_upper >= value - 1e-9);
    CHECK(std::abs(CertifySparseEquilibrium(m, eq) -
                   eq.certified_exploitability) < 1e-12);
  }
}

}  // namespace
}  // namespace vcsc
