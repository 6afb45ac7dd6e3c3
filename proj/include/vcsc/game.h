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

#ifndef VCSC_GAME_H_
#define VCSC_GAME_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vcsc/approx.h"
#include "vcsc/bit_row.h"
#include "vcsc/kernels.h"

namespace vcsc {

// Binary zero-sum game. M(r, c) = 1 iff the row player wins; the row player
// maximizes, the column player minimizes.
class PayoffMatrix {
 public:
  PayoffMatrix() = default;
  // Throws DomainError on non-positive dimensions or non-binary entries.
  PayoffMatrix(int rows, int cols, std::vector<std::uint8_t> entries);
  static PayoffMatrix FromRows(std::span<const BitRow> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int At(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const std::vector<std::uint8_t>& entries() const { return entries_; }
  kernels::MatrixView view() const { return {rows_, cols_, entries_}; }

  std::vector<BitRow> RowBits() const;
  std::vector<BitRow> ColumnBits() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> entries_;
};

// Same text format as concept classes; repeated rows are allowed.
PayoffMatrix ParsePayoffMatrix(std::string_view text);
std::string FormatPayoffMatrix(const PayoffMatrix& m);

enum class Side { kRow, kColumn };

struct BestResponse {
  int index = -1;
  double payoff = 0.0;
};

// kRow: `opponent` is a column strategy; returns the payoff-maximizing row.
// kColumn: `opponent` is a row strategy; returns the payoff-minimizing column.
// Ties go to the lowest index.
BestResponse ComputeBestResponse(const PayoffMatrix& m,
                                 std::span<const double> opponent, Side side);

struct StrategyEvaluation {
  double value = 0.0;           // p^T M q
  double row_guarantee = 0.0;   // min_c (p^T M)_c
  double col_guarantee = 0.0;   // max_r (M q)_r
  double exploitability = 0.0;  // max gain of either unilateral deviation
};
StrategyEvaluation EvaluateStrategies(const PayoffMatrix& m,
                                      std::span<const double> p,
                                      std::span<const double> q);

struct GameSolution {
  ProbabilityVector row_strategy;
  ProbabilityVector col_strategy;
  double value_estimate = 0.0;
  double exploitability = 0.0;
  long iterations = 0;  // simplex pivots or multiplicative-weights rounds
};

inline constexpr int kExactSolverCap = 4096;
inline constexpr long kMwIterationCap = 1'000'000;

// Exact minimax by a dense simplex on the shifted game. Throws DomainError
// above `cap` entries; use SolveMw there.
GameSolution SolveExact(const PayoffMatrix& m, int cap = kExactSolverCap);

// Exponential weights for the row player against best-response columns,
// averaged iterates, learning rate sqrt(ln(m) / horizon). The horizon starts
// where the regret bound already meets the target and doubles if the
// certified exploitability does not. Throws ConvergenceError at the cap.
GameSolution SolveMw(const PayoffMatrix& m, double target_exploitability,
                     long max_iterations = kMwIterationCap);

// Duplicate rows/columns merged and (optionally) weakly dominated ones
// removed. Optimal strategies of the reduced game, lifted back onto the
// representatives, are optimal for the original game.
struct ReducedGame {
  PayoffMatrix matrix;
  std::vector<int> row_representative;  // reduced row -> original row
  std::vector<int> col_representative;  // reduced col -> original col
};
ReducedGame ReduceGame(const PayoffMatrix& m, bool remove_dominated);

// Solves through ReduceGame: exact when the reduced game fits the exact cap,
// multiplicative weights to `mw_target` otherwise.
GameSolution SolveReduced(const PayoffMatrix& m, double mw_target);

struct SparseEquilibrium {
  std::vector<int> row_multiset;  // R
  std::vector<int> col_multiset;  // J
  double epsilon = 0.0;
  double certified_exploitability = 0.0;

  // Bracket [value_lower, value_upper] containing the game value, taken
  // from the dense solution the multisets were sparsified from.
  double value_lower = 0.0;
  double value_upper = 0.0;

  int rows_vc = 0;     // VC dimension of the row set as a class over columns
  int columns_vc = 0;  // VC dimension of the column set (dual of the rows)
  ApproximationCertificate row_certificate;
  ApproximationCertificate col_certificate;
};

// Uniform play over R guarantees at least value - epsilon against every
// column and uniform play over J concedes at most value + epsilon against
// every row. R is sized by columns_vc, J by rows_vc.
SparseEquilibrium SparseEpsilonNash(const PayoffMatrix& m, double epsilon,
                                    std::uint64_t seed,
                                    const ApproxOptions& options = {});

// max(value_upper - min_c payoff(R, c), max_r payoff(r, J) - value_lower),
// recomputed by enumeration from the multisets.
double CertifySparseEquilibrium(const PayoffMatrix& m,
                                const SparseEquilibrium& equilibrium);

}  // namespace vcsc

#endif  // VCSC_GAME_H_
