/*
 * Copyright 2026 The jetreduce Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef JETREDUCE_LINEAR_HPP
#define JETREDUCE_LINEAR_HPP

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jetreduce/calculus.hpp"
#include "jetreduce/normal_form.hpp"

namespace jetreduce {

// sum_j a[j] X_j = rhs
struct LinearRow {
  std::map<int, RatFun> a;
  RatFun rhs;
};

enum class PivotRule {
  // Full pivoting: smallest coefficient (term count) over all remaining rows.
  MinimalSize,
  // Rows consumed in the given order; pivot column chosen inside each row.
  RowOrder,
};

struct Elimination {
  int ncols = 0;
  std::vector<LinearRow> pivot_rows;  // echelon rows
  std::vector<int> pivot_cols;
  std::vector<LinearRow> inconsistent;  // rows reduced to 0 = rhs != 0

  int rank() const { return static_cast<int>(pivot_cols.size()); }
  bool consistent() const { return inconsistent.empty(); }
  // Reduces a row against the pivots.
  LinearRow reduce(LinearRow r) const;
  // Adds a row (RowOrder rule); returns true when it raised the rank.
  bool add(LinearRow r, const std::vector<int>& col_rank);
  // Particular solution with free columns set to zero.
  std::vector<RatFun> solve() const;
  // Pivot columns in terms of the free ones; col_vars[c] is the variable of column c.
  std::map<int, RatFun> solve_pivots(const std::vector<Var>& col_vars) const;
};

// col_rank breaks ties between equally sized pivots (lower wins).
Elimination eliminate(std::vector<LinearRow> rows, int ncols, PivotRule rule, const std::vector<int>& col_rank);

using Solution = std::vector<std::pair<SymbolId, Expr>>;

// Unique solution of an affine system over the rational-function field of the
// remaining symbols. Every solution is checked by back-substitution.
// Throws SingularSystem, Inconsistent, Underdetermined.
Solution solve_linear(const std::vector<Expr>& equations, const std::vector<SymbolId>& unknowns);

Bindings as_bindings(const Solution& s);

// Process-wide counts of solve_linear calls that reached back-substitution
// and of those whose residuals all normalized to zero.
struct SolveStats {
  std::uint64_t checked = 0;
  std::uint64_t residual_zero = 0;
};
SolveStats solve_stats();

// Splits affine equations into rows over the unknown variables.
// Throws std::invalid_argument when an equation is not affine.
std::vector<LinearRow> affine_rows(const std::vector<RatFun>& eqs, const std::vector<Var>& unknowns);

// Linear homogeneous jet equations solved for the principal jets, the
// greatest ones in the ring order of jets. Throws Inconsistent.
std::unordered_map<Var, RatFun> principal_map(const std::vector<RatFun>& lin, const std::vector<Var>& jets);

}  // namespace jetreduce

#endif  // JETREDUCE_LINEAR_HPP
