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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

#include "vcsc/concept_class.h"
#include "vcsc/errors.h"
#include "vcsc/rng.h"

namespace vcsc {

PayoffMatrix::PayoffMatrix(int rows, int cols,
                           std::vector<std::uint8_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows <= 0 || cols <= 0) throw DomainError("empty payoff matrix");
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw DomainError("payoff entry count does not match dimensions");
  }
  for (std::uint8_t e : entries_) {
    if (e > 1) throw DomainError("payoff entries must be binary");
  }
}

PayoffMatrix PayoffMatrix::FromRows(std::span<const BitRow> rows) {
  if (rows.empty()) throw DomainError("empty payoff matrix");
  const int cols = rows.front().size();
  std::vector<std::uint8_t> entries;
  entries.reserve(rows.size() * cols);
  for (const BitRow& r : rows) {
    if (r.size() != cols) throw DomainError("ragged payoff rows");
    for (int c = 0; c < cols; ++c) entries.push_back(r.Get(c) ? 1 : 0);
  }
  return PayoffMatrix(static_cast<int>(rows.size()), cols, std::move(entries));
}

std::vector<BitRow> PayoffMatrix::RowBits() const {
  std::vector<BitRow> out(rows_, BitRow(cols_));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (At(r, c)) out[r].Set(c, true);
    }
  }
  return out;
}

std::vector<BitRow> PayoffMatrix::ColumnBits() const {
  std::vector<BitRow> out(cols_, BitRow(rows_));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (At(r, c)) out[c].Set(r, true);
    }
  }
  return out;
}

PayoffMatrix ParsePayoffMatrix(std::string_view text) {
  const BinaryRows parsed = ParseBinaryRows(text, /*reject_duplicates=*/false);
  return PayoffMatrix::FromRows(parsed.rows);
}

std::string FormatPayoffMatrix(const PayoffMatrix& m) {
  std::string out =
      std::to_string(m.cols()) + " " + std::to_string(m.rows()) + "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out += m.At(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

BestResponse ComputeBestResponse(const PayoffMatrix& m,
                                 std::span<const double> opponent, Side side) {
  BestResponse best;
  if (side == Side::kRow) {
    if (static_cast<int>(opponent.size()) != m.cols()) {
      throw DomainError("column strategy has wrong dimension");
    }
    std::vector<double> payoffs(m.rows());
    kernels::parallel::RowPayoffs(m.view(), opponent, payoffs);
    for (int r = 0; r < m.rows(); ++r) {
      if (best.index < 0 || payoffs[r] > best.payoff) {
        best = {r, payoffs[r]};
      }
    }
  } else {
    if (static_cast<int>(opponent.size()) != m.rows()) {
      throw DomainError("row strategy has wrong dimension");
    }
    std::vector<double> payoffs(m.cols());
    kernels::parallel::ColPayoffs(m.view(), opponent, payoffs);
    for (int c = 0; c < m.cols(); ++c) {
      if (best.index < 0 || payoffs[c] < best.payoff) {
        best = {c, payoffs[c]};
      }
    }
  }
  return best;
}

StrategyEvaluation EvaluateStrategies(const PayoffMatrix& m,
                                      std::span<const double> p,
                                      std::span<const double> q) {
  if (static_cast<int>(p.size()) != m.rows() ||
      static_cast<int>(q.size()) != m.cols()) {
    throw DomainError("strategy dimensions do not match the matrix");
  }
  std::vector<double> row_payoffs(m.rows());
  std::vector<double> col_payoffs(m.cols());
  kernels::parallel::RowPayoffs(m.view(), q, row_payoffs);
  kernels::parallel::ColPayoffs(m.view(), p, col_payoffs);
  StrategyEvaluation eval;
  for (int r = 0; r < m.rows(); ++r) eval.value += p[r] * row_payoffs[r];
  eval.row_guarantee = *std::min_element(col_payoffs.begin(), col_payoffs.end());
  eval.col_guarantee = *std::max_element(row_payoffs.begin(), row_payoffs.end());
  eval.exploitability = std::max({0.0, eval.col_guarantee - eval.value,
                                  eval.value - eval.row_guarantee});
  return eval;
}

namespace {

constexpr double kPivotTolerance = 1e-12;

std::vector<double> Normalized(std::vector<double> weights) {
  double total = 0.0;
  for (double& w : weights) {
    if (w < 0.0) w = 0.0;
    total += w;
  }
  for (double& w : weights) w /= total;
  return weights;
}

GameSolution Finish(const PayoffMatrix& m, std::vector<double> p,
                    std::vector<double> q, long iterations) {
  GameSolution sol;
  sol.row_strategy = ProbabilityVector::Create(Normalized(std::move(p)));
  sol.col_strategy = ProbabilityVector::Create(Normalized(std::move(q)));
  const StrategyEvaluation eval = EvaluateStrategies(
      m, sol.row_strategy.weights(), sol.col_strategy.weights());
  sol.value_estimate = eval.value;
  sol.exploitability = eval.exploitability;
  sol.iterations = iterations;
  return sol;
}

}  // namespace

GameSolution SolveExact(const PayoffMatrix& m, int cap) {
  const long entries = static_cast<long>(m.rows()) * m.cols();
  if (entries > cap) {
    throw DomainError("matrix has " + std::to_string(entries) +
                      " entries, above the exact-solver cap of " +
                      std::to_string(cap) + "; use SolveMw");
  }
  // With A = M + 1 > 0, the column player's program
  //   max sum(y)  s.t.  A y <= 1, y >= 0
  // has optimum W = 1 / (V + 1); q = y / W and the slack duals give p.
  const int rows = m.rows();
  const int cols = m.cols();
  const int width = cols + rows + 1;
  const int rhs = width - 1;
  std::vector<double> tableau(static_cast<std::size_t>(rows) * width, 0.0);
  auto cell = [&](int i, int j) -> double& {
    return tableau[static_cast<std::size_t>(i) * width + j];
  };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) cell(i, j) = 1.0 + m.At(i, j);
    cell(i, cols + i) = 1.0;
    cell(i, rhs) = 1.0;
  }
  std::vector<double> objective(width, 0.0);
  for (int j = 0; j < cols; ++j) objective[j] = -1.0;
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = cols + i;

  const long pivot_cap = 100L * (rows + cols) + 1000;
  long pivots = 0;
  int degenerate_run = 0;
  while (true) {
    // Dantzig's rule, falling back to Bland's after a degenerate stretch.
    int entering = -1;
    const bool bland = degenerate_run > rows + cols;
    for (int j = 0; j < rhs; ++j) {
      if (objective[j] < -kPivotTolerance &&
          (entering < 0 || (!bland && objective[j] < objective[entering]))) {
        entering = j;
        if (bland) break;
      }
    }
    if (entering < 0) break;
    int leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows; ++i) {
      const double a = cell(i, entering);
      if (a <= kPivotTolerance) continue;
      const double ratio = cell(i, rhs) / a;
      if (ratio < best_ratio - kPivotTolerance ||
          (ratio <= best_ratio + kPivotTolerance && leaving >= 0 &&
           basis[i] < basis[leaving])) {
        best_ratio = std::min(best_ratio, ratio);
        leaving = i;
      }
    }
    if (leaving < 0) throw Error("simplex: unbounded program");
    degenerate_run = best_ratio <= kPivotTolerance ? degenerate_run + 1 : 0;

    const double pivot = cell(leaving, entering);
    for (int j = 0; j < width; ++j) cell(leaving, j) /= pivot;
    for (int i = 0; i < rows; ++i) {
      if (i == leaving) continue;
      const double factor = cell(i, entering);
      if (factor == 0.0) continue;
      for (int j = 0; j < width; ++j) cell(i, j) -= factor * cell(leaving, j);
    }
    const double factor = objective[entering];
    for (int j = 0; j < width; ++j) objective[j] -= factor * cell(leaving, j);
    basis[leaving] = entering;
    if (++pivots > pivot_cap) throw Error("simplex: pivot cap exceeded");
  }

  std::vector<double> q(cols, 0.0);
  for (int i = 0; i < rows; ++i) {
    if (basis[i] < cols) q[basis[i]] = cell(i, rhs);
  }
  std::vector<double> p(rows);
  for (int i = 0; i < rows; ++i) p[i] = objective[cols + i];
  return Finish(m, std::move(p), std::move(q), pivots);
}

GameSolution SolveMw(const PayoffMatrix& m, double target_exploitability,
                     long max_iterations) {
  if (!(target_exploitability > 0.0)) {
    throw DomainError("target exploitability must be positive");
  }
  const int rows = m.rows();
  const int cols = m.cols();
  const double log_rows = std::log(std::max(rows, 2));
  // Hedge regret with rate sqrt(L / H) is at most (9/8) sqrt(L H).
  long horizon = static_cast<long>(std::ceil(
      (81.0 / 64.0) * log_rows /
      (target_exploitability * target_exploitability)));
  horizon = std::max(horizon, 1L);

  long total = 0;
  double last_exploitability = 1.0;
  std::vector<double> p(rows), col_payoffs(cols), p_sum(rows), q_count(cols);
  std::vector<long> gains(rows);
  while (true) {
    const double eta = std::sqrt(log_rows / static_cast<double>(horizon));
    std::fill(gains.begin(), gains.end(), 0);
    std::fill(p_sum.begin(), p_sum.end(), 0.0);
    std::fill(q_count.begin(), q_count.end(), 0.0);
    const long check_every = std::max(32L, horizon / 32);
    for (long t = 1; t <= horizon; ++t) {
      if (total >= max_iterations) {
        throw ConvergenceError(
            "multiplicative weights hit the iteration cap with exploitability " +
                std::to_string(last_exploitability),
            last_exploitability);
      }
      ++total;
      const long top = *std::max_element(gains.begin(), gains.end());
      double norm = 0.0;
      for (int r = 0; r < rows; ++r) {
        p[r] = std::exp(eta * static_cast<double>(gains[r] - top));
        norm += p[r];
      }
      for (int r = 0; r < rows; ++r) p[r] /= norm;
      kernels::parallel::ColPayoffs(m.view(), p, col_payoffs);
      const int response = static_cast<int>(
          std::min_element(col_payoffs.begin(), col_payoffs.end()) -
          col_payoffs.begin());
      for (int r = 0; r < rows; ++r) {
        p_sum[r] += p[r];
        gains[r] += m.At(r, response);
      }
      q_count[response] += 1.0;
      if (t % check_every == 0 || t == horizon) {
        GameSolution sol = Finish(m, p_sum, q_count, total);
        last_exploitability = sol.exploitability;
        if (sol.exploitability <= target_exploitability) return sol;
      }
    }
    horizon *= 2;
  }
}

ReducedGame ReduceGame(const PayoffMatrix& m, bool remove_dominated) {
  const std::vector<BitRow> row_bits = m.RowBits();
  const std::vector<BitRow> col_bits = m.ColumnBits();
  std::vector<int> live_rows;
  std::vector<int> live_cols;
  {
    std::unordered_map<BitRow, int, BitRowHash> seen;
    for (int r = 0; r < m.rows(); ++r) {
      if (seen.emplace(row_bits[r], r).second) live_rows.push_back(r);
    }
  }
  for (int c = 0; c < m.cols(); ++c) live_cols.push_back(c);

  auto restrict_bits = [](const BitRow& full, const std::vector<int>& keep) {
    BitRow out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (full.Get(keep[i])) out.Set(static_cast<int>(i), true);
    }
    return out;
  };
  auto subset_of = [](const BitRow& a, const BitRow& b) {
    for (std::size_t k = 0; k < a.words().size(); ++k) {
      if (a.words()[k] & ~b.words()[k]) return false;
    }
    return true;
  };
  // Keeps the first of each group of identical restricted vectors; with
  // `dominated`, also drops any vector strictly below (rows) or above
  // (columns) another one.
  auto prune = [&](const std::vector<BitRow>& bits, std::vector<int>& live,
                   const std::vector<int>& other, bool keep_larger) {
    std::vector<BitRow> restricted;
    restricted.reserve(live.size());
    for (int i : live) restricted.push_back(restrict_bits(bits[i], other));
    std::vector<int> kept;
    std::unordered_map<BitRow, int, BitRowHash> seen;
    for (std::size_t a = 0; a < live.size(); ++a) {
      if (!seen.emplace(restricted[a], 0).second) continue;
      bool drop = false;
      if (remove_dominated) {
        for (std::size_t b = 0; b < live.size() && !drop; ++b) {
          if (a == b || restricted[a] == restricted[b]) continue;
          drop = keep_larger ? subset_of(restricted[a], restricted[b])
                             : subset_of(restricted[b], restricted[a]);
        }
      }
      if (!drop) kept.push_back(live[a]);
    }
    const bool changed = kept.size() != live.size();
    live = std::move(kept);
    return changed;
  };
  bool changed = true;
  while (changed) {
    changed = prune(col_bits, live_cols, live_rows, /*keep_larger=*/false);
    changed = prune(row_bits, live_rows, live_cols, /*keep_larger=*/true) ||
              changed;
  }

  ReducedGame out;
  std::vector<std::uint8_t> entries;
  entries.reserve(live_rows.size() * live_cols.size());
  for (int r : live_rows) {
    for (int c : live_cols) entries.push_back(static_cast<std::uint8_t>(m.At(r, c)));
  }
  out.matrix = PayoffMatrix(static_cast<int>(live_rows.size()),
                            static_cast<int>(live_cols.size()),
                            std::move(entries));
  out.row_representative = std::move(live_rows);
  out.col_representative = std::move(live_cols);
  return out;
}

GameSolution SolveReduced(const PayoffMatrix& m, double mw_target) {
  const ReducedGame reduced = ReduceGame(m, /*remove_dominated=*/true);
  const long entries =
      static_cast<long>(reduced.matrix.rows()) * reduced.matrix.cols();
  const GameSolution inner = entries <= kExactSolverCap
                                 ? SolveExact(reduced.matrix)
                                 : SolveMw(reduced.matrix, mw_target);
  std::vector<double> p(m.rows(), 0.0);
  std::vector<double> q(m.cols(), 0.0);
  for (std::size_t i = 0; i < reduced.row_representative.size(); ++i) {
    p[reduced.row_representative[i]] = inner.row_strategy[static_cast<int>(i)];
  }
  for (std::size_t j = 0; j < reduced.col_representative.size(); ++j) {
    q[reduced.col_representative[j]] = inner.col_strategy[static_cast<int>(j)];
  }
  return Finish(m, std::move(p), std::move(q), inner.iterations);
}

namespace {

// Distinct vectors as a concept class, the probability mass each distinct
// vector carries, and the lowest original index behind each concept.
struct MergedSide {
  ConceptClass concepts;
  ProbabilityVector mass;
  std::vector<int> representative;
};

MergedSide MergeSide(const std::vector<BitRow>& vectors, int width,
                     const ProbabilityVector& weights) {
  MergedSide out;
  out.concepts = ConceptClass::Deduplicated(width, vectors);
  std::vector<double> mass(out.concepts.size(), 0.0);
  out.representative.assign(out.concepts.size(), -1);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const int c = out.concepts.IndexOf(vectors[i]);
    mass[c] += weights[static_cast<int>(i)];
    if (out.representative[c] < 0) out.representative[c] = static_cast<int>(i);
  }
  out.mass = ProbabilityVector::Create(Normalized(std::move(mass)));
  return out;
}

}  // namespace

SparseEquilibrium SparseEpsilonNash(const PayoffMatrix& m, double epsilon,
                                    std::uint64_t seed,
                                    const ApproxOptions& options) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw DomainError("epsilon must lie in (0, 1)");
  }
  const GameSolution dense = SolveReduced(m, epsilon / 4.0);
  const StrategyEvaluation eval = EvaluateStrategies(
      m, dense.row_strategy.weights(), dense.col_strategy.weights());

  SparseEquilibrium eq;
  eq.epsilon = epsilon;
  eq.value_lower = eval.row_guarantee;
  eq.value_upper = eval.col_guarantee;
  const double gap = eq.value_upper - eq.value_lower;
  ApproxOptions sparse_options = options;
  sparse_options.acceptance = epsilon - gap - 1e-12;
  if (*sparse_options.acceptance <= 0.0) {
    throw DomainError("dense solution gap leaves no room for epsilon");
  }

  const MergedSide rows = MergeSide(m.RowBits(), m.cols(), dense.row_strategy);
  const MergedSide cols =
      MergeSide(m.ColumnBits(), m.rows(), dense.col_strategy);
  Rng root(seed);
  eq.row_certificate = SparsifyMixture(rows.concepts, rows.mass, epsilon,
                                       root.Split(1).Next(), sparse_options);
  eq.col_certificate = SparsifyMixture(cols.concepts, cols.mass, epsilon,
                                       root.Split(2).Next(), sparse_options);
  for (int c : eq.row_certificate.multiset) {
    eq.row_multiset.push_back(rows.representative[c]);
  }
  for (int c : eq.col_certificate.multiset) {
    eq.col_multiset.push_back(cols.representative[c]);
  }
  std::sort(eq.row_multiset.begin(), eq.row_multiset.end());
  std::sort(eq.col_multiset.begin(), eq.col_multiset.end());
  eq.columns_vc = eq.row_certificate.vc_dimension;
  eq.rows_vc = eq.col_certificate.vc_dimension;
  eq.certified_exploitability = CertifySparseEquilibrium(m, eq);
  if (eq.certified_exploitability > epsilon) {
    throw Error("sparse equilibrium failed its own certificate");
  }
  return eq;
}

double CertifySparseEquilibrium(const PayoffMatrix& m,
                                const SparseEquilibrium& eq) {
  const ProbabilityVector p = ProbabilityVector::Empirical(m.rows(), eq.row_multiset);
  const ProbabilityVector q = ProbabilityVector::Empirical(m.cols(), eq.col_multiset);
  const double row_guarantee =
      ComputeBestResponse(m, p.weights(), Side::kColumn).payoff;
  const double col_guarantee =
      ComputeBestResponse(m, q.weights(), Side::kRow).payoff;
  return std::max({0.0, eq.value_upper - row_guarantee,
                   col_guarantee - eq.value_lower});
}

}  // namespace vcsc
