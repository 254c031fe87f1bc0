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

#include <algorithm>

#include "jetreduce/errors.hpp"
#include "jetreduce/liegeom.hpp"

namespace jetreduce {

namespace {

bool is_linear_jet_form(const RatFun& r, const std::vector<bool>& is_jet) {
  if (r.is_zero() || jet_degree(r.den(), is_jet) != 0) return false;
  return jet_degree(r.num(), is_jet) == 1 && min_jet_degree(r.num(), is_jet) == 1;
}

void monomials_upto(const std::vector<Var>& vars, int d, std::size_t from, Monomial cur, std::vector<Monomial>& out) {
  out.push_back(cur);
  if (d == 0) return;
  for (std::size_t k = from; k < vars.size(); ++k) monomials_upto(vars, d - 1, k, cur * Monomial::of(vars[k]), out);
}

bool grlex_less(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

}  // namespace

SymmetryCertificate check_symmetry(const PDESystem& system, const VectorField& X, std::optional<int> mult_degree) {
  if (system.sig != X.sig) throw SignatureMismatch("vector field and system have different signatures");
  const Signature& s = system.sig;
  ProlongedField P = prolong1(X);

  std::vector<SymbolId> syms;
  auto collect = [&](const Expr& e) {
    auto v = symbols(e);
    syms.insert(syms.end(), v.begin(), v.end());
  };
  for (const auto& e : system.equations) collect(e);
  for (const auto& e : X.xi) collect(e);
  for (const auto& e : X.eta) collect(e);
  for (const auto& row : P.zeta)
    for (const auto& e : row) collect(e);
  for (int a = 1; a <= s.m; ++a)
    for (int i = 1; i <= s.n; ++i) syms.push_back(s.jet(a, i));
  std::sort(syms.begin(), syms.end());
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  Ring ring(syms);
  std::vector<bool> is_jet = jet_mask(ring);
  std::vector<Var> jets;
  for (Var v = 0; v < ring.size(); ++v)
    if (is_jet[v]) jets.push_back(v);

  const int neq = static_cast<int>(system.equations.size());
  std::vector<RatFun> D(neq), R(neq);
  for (int k = 0; k < neq; ++k) {
    const Expr& eq = system.equations[k];
    D[k] = ring.convert(eq);
    std::vector<RatFun> parts;
    auto add = [&](const Expr& coef, const SymbolId& v) {
      if (coef.is_zero()) return;
      Expr d = diff(eq, v);
      if (d.is_zero()) return;
      parts.push_back(ring.convert(coef) * ring.convert(d));
    };
    for (int j = 1; j <= s.n; ++j) add(X.xi[j - 1], s.indep(j));
    for (int a = 1; a <= s.m; ++a) add(X.eta[a - 1], s.dep(a));
    for (int a = 1; a <= s.m; ++a)
      for (int i = 1; i <= s.n; ++i) add(P.zeta[a - 1][i - 1], s.jet(a, i));
    R[k] = sum(parts);
  }

  SymmetryCertificate cert;
  std::vector<RatFun> lin;
  std::vector<int> nonlin;
  for (int k = 0; k < neq; ++k) {
    if (is_linear_jet_form(D[k], is_jet)) {
      lin.push_back(D[k]);
      cert.linear_equations.push_back(k);
    } else {
      nonlin.push_back(k);
    }
  }
  auto sigma = principal_map(lin, jets);
  std::vector<Var> param;
  for (Var v : jets)
    if (!sigma.count(v)) param.push_back(v);
  {
    std::vector<Var> principal;
    for (auto& [v, r] : sigma) principal.push_back(v);
    std::sort(principal.begin(), principal.end(),
              [&](Var a, Var b) { return ring.symbol(a) < ring.symbol(b); });
    for (Var v : principal) cert.linear_reduction.emplace_back(ring.symbol(v), ring.to_expr(sigma.at(v)));
  }

  std::vector<RatFun> B;
  for (int l : nonlin) B.push_back(compose(D[l], sigma));
  std::vector<RatFun> T;
  for (int k = 0; k < neq; ++k) T.push_back(compose(R[k], sigma));

  int maxd = 0;
  for (const auto& d : D) maxd = std::max<int>(maxd, jet_degree(d.num(), is_jet));
  cert.max_degree = mult_degree ? *mult_degree : maxd;
  if (cert.max_degree < 0) throw std::invalid_argument("multiplier degree must be nonnegative");

  std::vector<JetSplit> bsplit;
  for (const auto& b : B) bsplit.push_back(split_jets(b.num(), is_jet));

  for (int d = 0; d <= cert.max_degree; ++d) {
    cert.degree = d;
    std::vector<Monomial> mus;
    monomials_upto(param, d, 0, Monomial(), mus);
    std::sort(mus.begin(), mus.end(), grlex_less);
    const int ncols = static_cast<int>(B.size() * mus.size());
    std::vector<int> col_rank(ncols);
    for (int c = 0; c < ncols; ++c) col_rank[c] = c;

    // Rows grouped by jet monomial.
    std::map<Monomial, LinearRow, bool (*)(const Monomial&, const Monomial&)> base(monomial_greater);
    for (std::size_t l = 0; l < B.size(); ++l)
      for (std::size_t q = 0; q < mus.size(); ++q) {
        int col = static_cast<int>(l * mus.size() + q);
        for (const auto& [nu, coef] : bsplit[l]) base[nu * mus[q]].a[col] = RatFun::make(coef, B[l].den());
      }

    cert.lambda.assign(neq, std::vector<Expr>(neq, Expr(0LL)));
    cert.residual.clear();
    bool all = true;
    for (int k = 0; k < neq; ++k) {
      auto rows = base;
      for (const auto& [nu, coef] : split_jets(T[k].num(), is_jet)) rows[nu].rhs = RatFun::make(coef, T[k].den());
      // Top jet degree first (principal part), then ascending from the lowest.
      uint32_t top = rows.empty() ? 0 : rows.begin()->first.degree();
      std::vector<LinearRow> ordered;
      for (auto& [nu, r] : rows)
        if (nu.degree() == top) ordered.push_back(std::move(r));
      for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        if (it->first.degree() != top) ordered.push_back(std::move(it->second));
      Elimination el = eliminate(std::move(ordered), ncols, PivotRule::RowOrder, col_rank);
      if (!el.consistent()) {
        all = false;
        for (const auto& r : el.inconsistent) cert.residual.push_back({k, ring.to_expr(r.rhs)});
        continue;
      }
      std::vector<RatFun> x = el.solve();
      for (std::size_t l = 0; l < B.size(); ++l) {
        std::vector<RatFun> parts;
        for (std::size_t q = 0; q < mus.size(); ++q) {
          const RatFun& c = x[l * mus.size() + q];
          if (!c.is_zero()) parts.push_back(c * RatFun(Poly::monomial(mus[q], Int(1))));
        }
        cert.lambda[k][nonlin[l]] = ring.to_expr(sum(parts));
      }
    }
    if (all) {
      cert.admitted = true;
      return cert;
    }
  }
  return cert;
}

}  // namespace jetreduce
