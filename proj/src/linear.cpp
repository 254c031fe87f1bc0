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

#include "jetreduce/linear.hpp"

#include <atomic>
#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "jetreduce/errors.hpp"

namespace jetreduce {

namespace {

void axpy(LinearRow& r, const RatFun& f, const LinearRow& p) {
  // r -= f * p
  for (const auto& [c, v] : p.a) {
    RatFun t = r.a.count(c) ? r.a[c] - f * v : -(f * v);
    if (t.is_zero())
      r.a.erase(c);
    else
      r.a[c] = std::move(t);
  }
  if (!p.rhs.is_zero()) r.rhs = r.rhs - f * p.rhs;
}

std::pair<int, RatFun> choose_in_row(const LinearRow& r, const std::vector<int>& col_rank) {
  int best = -1;
  std::size_t best_size = 0;
  for (const auto& [c, v] : r.a) {
    std::size_t s = v.size();
    if (best < 0 || s < best_size || (s == best_size && col_rank[c] < col_rank[best])) {
      best = c;
      best_size = s;
    }
  }
  return {best, r.a.at(best)};
}

}  // namespace

LinearRow Elimination::reduce(LinearRow r) const {
  for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
    auto it = r.a.find(pivot_cols[k]);
    if (it == r.a.end()) continue;
    RatFun f = it->second / pivot_rows[k].a.at(pivot_cols[k]);
    axpy(r, f, pivot_rows[k]);
  }
  return r;
}

bool Elimination::add(LinearRow r, const std::vector<int>& col_rank) {
  r = reduce(std::move(r));
  if (r.a.empty()) {
    if (!r.rhs.is_zero()) inconsistent.push_back(std::move(r));
    return false;
  }
  auto [c, v] = choose_in_row(r, col_rank);
  pivot_cols.push_back(c);
  pivot_rows.push_back(std::move(r));
  return true;
}

std::vector<RatFun> Elimination::solve() const {
  std::vector<RatFun> x(ncols);
  for (std::size_t k = pivot_rows.size(); k-- > 0;) {
    const LinearRow& r = pivot_rows[k];
    int c = pivot_cols[k];
    std::vector<RatFun> parts{r.rhs};
    for (const auto& [j, v] : r.a)
      if (j != c && !x[j].is_zero()) parts.push_back(-(v * x[j]));
    x[c] = sum(parts) / r.a.at(c);
  }
  return x;
}

std::map<int, RatFun> Elimination::solve_pivots(const std::vector<Var>& col_vars) const {
  std::map<int, RatFun> val;
  for (std::size_t k = pivot_rows.size(); k-- > 0;) {
    const LinearRow& r = pivot_rows[k];
    int c = pivot_cols[k];
    std::vector<RatFun> parts{r.rhs};
    for (const auto& [j, v] : r.a) {
      if (j == c) continue;
      auto it = val.find(j);
      parts.push_back(-(v * (it != val.end() ? it->second : RatFun(Poly::var(col_vars[j])))));
    }
    val[c] = sum(parts) / r.a.at(c);
  }
  return val;
}

Elimination eliminate(std::vector<LinearRow> rows, int ncols, PivotRule rule, const std::vector<int>& col_rank) {
  Elimination el;
  el.ncols = ncols;
  if (rule == PivotRule::RowOrder) {
    for (auto& r : rows) el.add(std::move(r), col_rank);
    return el;
  }
  std::vector<bool> done(rows.size(), false);
  while (true) {
    int br = -1, bc = -1;
    std::tuple<std::size_t, int, int> best{0, 0, 0};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (done[i]) continue;
      for (const auto& [c, v] : rows[i].a) {
        std::tuple<std::size_t, int, int> key{v.size(), col_rank[c], static_cast<int>(i)};
        if (br < 0 || key < best) {
          best = key;
          br = static_cast<int>(i);
          bc = c;
        }
      }
    }
    if (br < 0) break;
    done[br] = true;
    const LinearRow& p = rows[br];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (done[i]) continue;
      auto it = rows[i].a.find(bc);
      if (it == rows[i].a.end()) continue;
      RatFun f = it->second / p.a.at(bc);
      axpy(rows[i], f, p);
    }
    el.pivot_cols.push_back(bc);
    el.pivot_rows.push_back(p);
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!done[i] && rows[i].a.empty() && !rows[i].rhs.is_zero()) el.inconsistent.push_back(rows[i]);
  return el;
}

std::vector<LinearRow> affine_rows(const std::vector<RatFun>& eqs, const std::vector<Var>& unknowns) {
  std::unordered_map<Var, int> col;
  for (std::size_t k = 0; k < unknowns.size(); ++k) col[unknowns[k]] = static_cast<int>(k);
  std::vector<LinearRow> rows;
  for (const auto& e : eqs) {
    for (Var v : unknowns)
      if (e.den().degree(v) > 0) throw std::invalid_argument("equation is not affine in the unknowns");
    std::map<int, std::vector<Term>> parts;
    std::vector<Term> rest;
    for (const auto& t : e.num().terms()) {
      int found = -1;
      for (std::size_t k = 0; k < t.m.size(); ++k) {
        auto it = col.find(t.m.var(k));
        if (it == col.end()) continue;
        if (found >= 0 || t.m.exp(k) != 1) throw std::invalid_argument("equation is not affine in the unknowns");
        found = it->second;
      }
      if (found < 0)
        rest.push_back(t);
      else
        parts[found].push_back(Term{t.m / Monomial::of(unknowns[found]), t.c});
    }
    LinearRow r;
    for (auto& [c, ts] : parts) {
      RatFun v = RatFun::make(Poly::from_terms(std::move(ts)), e.den());
      if (!v.is_zero()) r.a[c] = std::move(v);
    }
    r.rhs = -RatFun::make(Poly::from_terms(std::move(rest)), e.den());
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {
std::atomic<std::uint64_t> g_checked{0};
std::atomic<std::uint64_t> g_residual_zero{0};
}  // namespace

SolveStats solve_stats() { return SolveStats{g_checked.load(), g_residual_zero.load()}; }

Solution solve_linear(const std::vector<Expr>& equations, const std::vector<SymbolId>& unknowns) {
  std::vector<SymbolId> syms;
  for (const auto& e : equations) {
    auto s = symbols(e);
    syms.insert(syms.end(), s.begin(), s.end());
  }
  syms.insert(syms.end(), unknowns.begin(), unknowns.end());
  std::sort(syms.begin(), syms.end());
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  Ring ring(syms);
  std::vector<Var> vars;
  for (const auto& u : unknowns) vars.push_back(ring.index(u));
  std::vector<RatFun> eqs;
  for (const auto& e : equations) eqs.push_back(ring.convert(e));
  auto rows = affine_rows(eqs, vars);

  // Tie-break by global symbol order of the unknowns.
  std::vector<int> order(unknowns.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return unknowns[a] < unknowns[b]; });
  std::vector<int> col_rank(unknowns.size());
  for (std::size_t k = 0; k < order.size(); ++k) col_rank[order[k]] = static_cast<int>(k);

  Elimination el = eliminate(rows, static_cast<int>(unknowns.size()), PivotRule::MinimalSize, col_rank);
  if (!el.consistent()) throw Inconsistent("linear system has no solution");
  if (el.rank() < static_cast<int>(unknowns.size())) {
    if (equations.size() == unknowns.size())
      throw SingularSystem("coefficient determinant normalizes to 0 (rank " + std::to_string(el.rank()) + " < " +
                           std::to_string(unknowns.size()) + ")");
    throw Underdetermined("rank " + std::to_string(el.rank()) + " < " + std::to_string(unknowns.size()) + " unknowns");
  }
  std::vector<RatFun> x = el.solve();

  // Back-substitution check on the original equations.
  g_checked.fetch_add(1, std::memory_order_relaxed);
  for (const auto& r : rows) {
    std::vector<RatFun> parts{-r.rhs};
    for (const auto& [c, v] : r.a) parts.push_back(v * x[c]);
    if (!sum(parts).is_zero()) throw VerificationFailed("solve_linear back-substitution residual is nonzero");
  }
  g_residual_zero.fetch_add(1, std::memory_order_relaxed);
  Solution out;
  for (std::size_t k = 0; k < unknowns.size(); ++k) out.emplace_back(unknowns[k], ring.to_expr(x[k]));
  return out;
}

Bindings as_bindings(const Solution& s) {
  Bindings b;
  for (const auto& [k, v] : s) b.emplace(k, v);
  return b;
}

std::unordered_map<Var, RatFun> principal_map(const std::vector<RatFun>& lin, const std::vector<Var>& jets) {
  std::unordered_map<Var, RatFun> sigma;
  if (lin.empty()) return sigma;
  auto rows = affine_rows(lin, jets);
  std::vector<int> col_rank(jets.size());
  for (std::size_t k = 0; k < jets.size(); ++k) col_rank[k] = static_cast<int>(jets.size() - 1 - k);
  Elimination el = eliminate(std::move(rows), static_cast<int>(jets.size()), PivotRule::MinimalSize, col_rank);
  if (!el.consistent()) throw Inconsistent("linear jet constraints are inconsistent");
  auto val = el.solve_pivots(jets);
  for (auto& [c, v] : val) sigma.emplace(jets[c], std::move(v));
  return sigma;
}

}  // namespace jetreduce
