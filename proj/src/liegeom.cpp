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

#include "jetreduce/liegeom.hpp"

#include <algorithm>
#include <stdexcept>

#include "jetreduce/errors.hpp"

namespace jetreduce {

VectorField VectorField::zero(const Signature& sig) {
  VectorField X;
  X.sig = sig;
  X.xi.assign(sig.n, Expr(0LL));
  X.eta.assign(sig.m, Expr(0LL));
  return X;
}

VectorField VectorField::translation(const Signature& sig, int i) {
  VectorField X = zero(sig);
  X.xi.at(i - 1) = Expr(1LL);
  return X;
}

void VectorField::validate() const {
  if (static_cast<int>(xi.size()) != sig.n || static_cast<int>(eta.size()) != sig.m)
    throw std::invalid_argument("vector field component count does not match its signature");
  for (const auto& c : xi)
    if (mentions(c, SymbolKind::Jet)) throw std::invalid_argument("vector field coefficient depends on jets");
  for (const auto& c : eta)
    if (mentions(c, SymbolKind::Jet)) throw std::invalid_argument("vector field coefficient depends on jets");
}

Expr VectorField::apply(const Expr& f) const {
  std::vector<Expr> terms;
  for (int j = 1; j <= sig.n; ++j)
    if (!xi[j - 1].is_zero()) terms.push_back(xi[j - 1] * diff(f, sig.indep(j)));
  for (int a = 1; a <= sig.m; ++a)
    if (!eta[a - 1].is_zero()) terms.push_back(eta[a - 1] * diff(f, sig.dep(a)));
  return Expr::sum(std::move(terms));
}

VectorField VectorField::scaled(const Expr& c) const {
  VectorField r = *this;
  for (auto& e : r.xi) e = c * e;
  for (auto& e : r.eta) e = c * e;
  return r;
}

VectorField VectorField::plus(const VectorField& o) const {
  if (sig != o.sig) throw SignatureMismatch("vector fields live on different jet spaces");
  VectorField r = *this;
  for (std::size_t k = 0; k < xi.size(); ++k) r.xi[k] = xi[k] + o.xi[k];
  for (std::size_t k = 0; k < eta.size(); ++k) r.eta[k] = eta[k] + o.eta[k];
  return r;
}

VectorField VectorField::canonical() const {
  VectorField r = *this;
  for (auto& e : r.xi) e = jetreduce::canonical(e);
  for (auto& e : r.eta) e = jetreduce::canonical(e);
  return r;
}

bool VectorField::is_zero() const {
  for (const auto& e : xi)
    if (!jetreduce::is_zero(e)) return false;
  for (const auto& e : eta)
    if (!jetreduce::is_zero(e)) return false;
  return true;
}

Expr ProlongedField::apply(const Expr& f) const {
  std::vector<Expr> terms{base.apply(f)};
  for (int a = 1; a <= base.sig.m; ++a)
    for (int i = 1; i <= base.sig.n; ++i) {
      const Expr& z = zeta[a - 1][i - 1];
      if (z.is_zero()) continue;
      Expr d = diff(f, base.sig.jet(a, i));
      if (!d.is_zero()) terms.push_back(z * d);
    }
  return Expr::sum(std::move(terms));
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
  if (X.sig != Y.sig) throw SignatureMismatch("lie_bracket of fields with different signatures");
  VectorField r = VectorField::zero(X.sig);
  for (int j = 0; j < X.sig.n; ++j) r.xi[j] = jetreduce::canonical(X.apply(Y.xi[j]) - Y.apply(X.xi[j]));
  for (int a = 0; a < X.sig.m; ++a) r.eta[a] = jetreduce::canonical(X.apply(Y.eta[a]) - Y.apply(X.eta[a]));
  return r;
}

ProlongedField prolong1(const VectorField& X) {
  X.validate();
  ProlongedField P;
  P.base = X;
  const Signature& s = X.sig;
  std::vector<std::vector<Expr>> dxi(s.n, std::vector<Expr>(s.n));
  for (int k = 1; k <= s.n; ++k)
    for (int i = 1; i <= s.n; ++i) dxi[k - 1][i - 1] = total_derivative(X.xi[k - 1], i, s);
  P.zeta.assign(s.m, std::vector<Expr>(s.n));
  for (int a = 1; a <= s.m; ++a)
    for (int i = 1; i <= s.n; ++i) {
      std::vector<Expr> terms{total_derivative(X.eta[a - 1], i, s)};
      for (int k = 1; k <= s.n; ++k)
        if (!dxi[k - 1][i - 1].is_zero()) terms.push_back(-(Expr(s.jet(a, k)) * dxi[k - 1][i - 1]));
      P.zeta[a - 1][i - 1] = jetreduce::canonical(Expr::sum(std::move(terms)));
    }
  return P;
}

RankReport distribution_rank_report(const std::vector<VectorField>& fields) {
  RankReport rep;
  if (fields.empty()) return rep;
  const Signature& s = fields[0].sig;
  std::vector<SymbolId> syms;
  for (const auto& f : fields) {
    if (f.sig != s) throw SignatureMismatch("distribution_rank of fields with different signatures");
    for (const auto& c : f.xi) {
      auto v = symbols(c);
      syms.insert(syms.end(), v.begin(), v.end());
    }
    for (const auto& c : f.eta) {
      auto v = symbols(c);
      syms.insert(syms.end(), v.begin(), v.end());
    }
  }
  std::sort(syms.begin(), syms.end());
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  Ring ring(syms);
  int ncols = s.n + s.m;
  std::vector<LinearRow> rows;
  for (const auto& f : fields) {
    LinearRow r;
    for (int c = 0; c < ncols; ++c) {
      RatFun v = ring.convert(c < s.n ? f.xi[c] : f.eta[c - s.n]);
      if (!v.is_zero()) r.a[c] = std::move(v);
    }
    rows.push_back(std::move(r));
  }
  std::vector<int> col_rank(ncols);
  for (int c = 0; c < ncols; ++c) col_rank[c] = c;
  Elimination el = eliminate(std::move(rows), ncols, PivotRule::MinimalSize, col_rank);
  rep.rank = el.rank();
  for (int k = 0; k < el.rank(); ++k) {
    const RatFun& p = el.pivot_rows[k].a.at(el.pivot_cols[k]);
    if (!p.is_constant()) rep.pivots.push_back(ring.to_expr(p));
  }
  return rep;
}

int distribution_rank(const std::vector<VectorField>& fields) { return distribution_rank_report(fields).rank; }

namespace {

// Constant coefficients c with B = sum_l c_l F_l, if they exist.
std::optional<std::vector<Expr>> resolve_constant(const VectorField& B, const std::vector<VectorField>& F) {
  const Signature& s = B.sig;
  int ncomp = s.n + s.m;
  std::vector<SymbolId> syms;
  auto collect = [&](const Expr& e) {
    auto v = symbols(e);
    syms.insert(syms.end(), v.begin(), v.end());
  };
  auto comp = [&](const VectorField& X, int c) -> const Expr& { return c < s.n ? X.xi[c] : X.eta[c - s.n]; };
  for (int c = 0; c < ncomp; ++c) {
    collect(comp(B, c));
    for (const auto& f : F) collect(comp(f, c));
  }
  std::sort(syms.begin(), syms.end());
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  Ring ring(syms);
  std::vector<bool> is_var(ring.size());
  for (std::size_t v = 0; v < ring.size(); ++v)
    is_var[v] = ring.symbol(static_cast<Var>(v)).kind() != SymbolKind::Parameter;

  int k = static_cast<int>(F.size());
  std::vector<LinearRow> rows;
  for (int c = 0; c < ncomp; ++c) {
    RatFun b = ring.convert(comp(B, c));
    std::vector<RatFun> fs;
    for (const auto& f : F) fs.push_back(ring.convert(comp(f, c)));
    // Common denominator, then match coefficients of the non-parameter monomials.
    Poly L = b.den();
    for (const auto& f : fs) L = L * *divide_exact(f.den(), gcd(L, f.den()));
    auto scaled = [&](const RatFun& r) { return r.num() * *divide_exact(L, r.den()); };
    JetSplit tb = split_jets(scaled(b), is_var);
    std::vector<JetSplit> tf;
    for (const auto& f : fs) tf.push_back(split_jets(scaled(f), is_var));
    std::map<Monomial, LinearRow, bool (*)(const Monomial&, const Monomial&)> eqs(monomial_greater);
    for (auto& [m, p] : tb) eqs[m].rhs = RatFun(p);
    for (int l = 0; l < k; ++l)
      for (auto& [m, p] : tf[l]) eqs[m].a[l] = RatFun(p);
    for (auto& [m, r] : eqs) rows.push_back(std::move(r));
  }
  std::vector<int> col_rank(k);
  for (int l = 0; l < k; ++l) col_rank[l] = l;
  Elimination el = eliminate(std::move(rows), k, PivotRule::MinimalSize, col_rank);
  if (!el.consistent()) return std::nullopt;
  std::vector<RatFun> x = el.solve();
  std::vector<Expr> out;
  for (const auto& v : x) out.push_back(ring.to_expr(v));
  return out;
}

}  // namespace

const CommutatorEntry& AlgebraReport::entry(int i, int j) const {
  for (const auto& e : table)
    if (e.i == i && e.j == j) return e;
  throw std::out_of_range("no commutator entry");
}

AlgebraReport check_theorem1_structure(const std::vector<VectorField>& fields) {
  AlgebraReport rep;
  rep.k = static_cast<int>(fields.size());
  if (fields.empty()) {
    rep.failures.push_back("no fields");
    return rep;
  }
  const Signature& s = fields[0].sig;
  for (const auto& f : fields) {
    if (f.sig != s) throw SignatureMismatch("fields with different signatures");
    f.validate();
  }
  for (int i = 1; i <= rep.k; ++i)
    for (int j = i + 1; j <= rep.k; ++j) {
      CommutatorEntry e;
      e.i = i;
      e.j = j;
      e.bracket = lie_bracket(fields[i - 1], fields[j - 1]);
      if (auto c = resolve_constant(e.bracket, fields)) {
        e.resolved = true;
        e.coefficients = *c;
        VectorField diffv = e.bracket;
        for (int l = 0; l < rep.k; ++l) diffv = diffv.plus(fields[l].scaled(-(*c)[l]));
        e.verified = diffv.is_zero();
      }
      rep.table.push_back(std::move(e));
    }

  bool ok = true;
  if (rep.k != s.n + 1) {
    ok = false;
    rep.failures.push_back("expected n+1 = " + std::to_string(s.n + 1) + " fields, got " + std::to_string(rep.k));
  } else {
    for (int i = 1; i <= s.n; ++i) {
      for (int j = i + 1; j <= s.n; ++j)
        if (!rep.entry(i, j).bracket.is_zero()) {
          ok = false;
          rep.failures.push_back("[X" + std::to_string(i) + ",X" + std::to_string(j) + "] != 0");
        }
      VectorField d = rep.entry(i, rep.k).bracket.plus(fields[i - 1].scaled(Expr(-1LL)));
      if (!d.is_zero()) {
        ok = false;
        rep.failures.push_back("[X" + std::to_string(i) + ",X" + std::to_string(rep.k) + "] != X" + std::to_string(i));
      }
    }
  }
  std::vector<VectorField> first(fields.begin(), fields.begin() + std::min(rep.k, std::max(rep.k - 1, 0)));
  RankReport rr = distribution_rank_report(first);
  rep.distribution_rank = rr.rank;
  rep.rank_pivots = rr.pivots;
  if (rr.rank != s.n) {
    ok = false;
    rep.failures.push_back("rank of the first k-1 fields is " + std::to_string(rr.rank) + ", expected " +
                           std::to_string(s.n));
  }
  rep.structure_ok = ok;
  return rep;
}

}  // namespace jetreduce
