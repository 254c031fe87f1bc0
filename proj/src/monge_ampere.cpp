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

#include "jetreduce/monge_ampere.hpp"

#include <algorithm>
#include <stdexcept>

#include "jetreduce/errors.hpp"

namespace jetreduce {

namespace {

const std::vector<std::pair<int, int>>& pairs_upper(int n) {
  static std::map<int, std::vector<std::pair<int, int>>> cache;
  auto& v = cache[n];
  if (v.empty())
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) v.emplace_back(i, j);
  return v;
}

Expr jet_entry(int i, int j) { return Expr(SymbolId::jet("u", std::min(i, j), std::max(i, j))); }

bool is_free_symbol(const Expr& e) { return e.kind() == ExprKind::Sym; }

bool mentions_symbol(const Expr& e, const SymbolId& s) {
  for (const auto& t : symbols(e, true))
    if (t == s) return true;
  return false;
}

// Solves equations that become univariate one unknown at a time, then hands
// whatever is left to the general solver. Much cheaper than eliminating the
// whole system when it is triangular. Every equation is checked afterwards.
Solution solve_by_sweeps(std::vector<Expr> eqs, const std::vector<SymbolId>& unknowns) {
  Solution out;
  std::vector<bool> done(unknowns.size(), false);
  Bindings solved;
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& e : eqs) {
      if (is_zero(e)) continue;
      int only = -1, count = 0;
      for (std::size_t k = 0; k < unknowns.size(); ++k)
        if (!done[k] && mentions_symbol(e, unknowns[k])) {
          only = static_cast<int>(k);
          ++count;
        }
      if (count != 1) continue;
      Expr v = solve_linear({e}, {unknowns[only]}).front().second;
      done[only] = true;
      Bindings one{{unknowns[only], v}};
      for (auto& [k, w] : out) w = canonical(substitute(w, one));
      out.emplace_back(unknowns[only], v);
      for (auto& f : eqs) f = canonical(substitute(f, one));
      progress = true;
    }
  }
  std::vector<Expr> rest;
  std::vector<SymbolId> open;
  for (const auto& e : eqs)
    if (!is_zero(e)) rest.push_back(e);
  for (std::size_t k = 0; k < unknowns.size(); ++k)
    if (!done[k]) open.push_back(unknowns[k]);
  if (!open.empty() || !rest.empty()) {
    if (open.empty()) throw Inconsistent("symmetry conditions are inconsistent");
    Solution tail = solve_linear(rest, open);
    Bindings b = as_bindings(tail);
    for (auto& [k, w] : out) w = canonical(substitute(w, b));
    out.insert(out.end(), tail.begin(), tail.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

MASpec MASpec::generic(int n, const std::string& kappa, const std::string& alpha, const std::string& f) {
  MASpec s;
  s.n = n;
  s.f = f;
  int K = kappa_count(n);
  auto args = s.u_args();
  for (int i = 1; i <= K; ++i) s.kappas.push_back(Expr(SymbolId::opaque(kappa + std::to_string(i), {}, args)));
  if (n == 4) s.kappas[23] = Expr(0LL);
  for (int i = 1; i <= alpha_count(n); ++i) s.alphas.push_back(Expr(SymbolId::parameter(alpha + std::to_string(i))));
  return s;
}

int MASpec::kappa_count(int n) {
  switch (n) {
    case 2: return 5;
    case 3: return 14;
    case 4: return 43;
    default: throw std::invalid_argument("dimension must be 1p1, 2p1 or 3p1");
  }
}

int MASpec::alpha_count(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("dimension must be 1p1, 2p1 or 3p1");
  return n * (n + 1) / 2;
}

std::vector<int> MASpec::dependent_kappas(int n) {
  std::vector<int> out;
  int last = kappa_count(n) - 1 - alpha_count(n);
  for (int i = 1; i <= last; ++i)
    if (!(n == 4 && i == 24)) out.push_back(i);
  return out;
}

int MASpec::dimension(const std::string& name) {
  if (name == "1p1") return 2;
  if (name == "2p1") return 3;
  if (name == "3p1") return 4;
  throw std::invalid_argument("unknown dimension '" + name + "' (expected 1p1, 2p1 or 3p1)");
}

std::string MASpec::name() const { return std::to_string(n - 1) + "p1"; }

Expr MASpec::alpha(int a, int i) const {
  int p = std::min(a, i), q = std::max(a, i);
  int idx = 0;
  for (int r = 1; r < p; ++r) idx += n - r + 1;
  idx += q - p;
  return alphas.at(idx);
}

std::vector<Expr> MASpec::u_args() const {
  std::vector<Expr> a;
  for (int k = 1; k <= n; ++k) a.push_back(Expr(sig().dep(k)));
  return a;
}

Expr MASpec::f_derivative(std::vector<int> index) const { return Expr(SymbolId::opaque(f, std::move(index), u_args())); }

void MASpec::validate() const {
  if (n < 2 || n > 4) throw std::invalid_argument("dimension must be 1p1, 2p1 or 3p1");
  if (static_cast<int>(kappas.size()) != kappa_count(n))
    throw std::invalid_argument(name() + " needs " + std::to_string(kappa_count(n)) + " kappas");
  if (static_cast<int>(alphas.size()) != alpha_count(n))
    throw std::invalid_argument(name() + " needs " + std::to_string(alpha_count(n)) + " alphas");
  for (const auto& k : kappas)
    if (mentions(k, SymbolKind::Independent) || mentions(k, SymbolKind::Jet))
      throw std::invalid_argument("kappas may depend on u_1..u_n only");
  for (const auto& a : alphas)
    if (mentions(a, SymbolKind::Independent) || mentions(a, SymbolKind::Jet) || mentions(a, SymbolKind::Dependent))
      throw std::invalid_argument("alphas must be constants");
  if (n == 4 && !kappas[23].is_zero()) throw std::invalid_argument("kappa_24 must be 0");
}

Expr determinant(const std::vector<std::vector<Expr>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return Expr(1LL);
  if (k == 1) return m[0][0];
  std::vector<Expr> terms;
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Expr>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Expr> row;
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    Expr t = m[0][c] * determinant(minor);
    terms.push_back(c % 2 ? -t : t);
  }
  return Expr::sum(std::move(terms));
}

namespace {

Expr cofactor_of(const std::vector<std::vector<Expr>>& m, int i, int j) {
  std::vector<std::vector<Expr>> minor;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (static_cast<int>(r) == i - 1) continue;
    std::vector<Expr> row;
    for (std::size_t c = 0; c < m.size(); ++c)
      if (static_cast<int>(c) != j - 1) row.push_back(m[r][c]);
    minor.push_back(std::move(row));
  }
  Expr d = canonical(determinant(minor));
  return (i + j) % 2 ? -d : d;
}

}  // namespace

HessianPack hessian_pack(int k, const std::string& f) {
  if (k < 2 || k > 4) throw std::invalid_argument("hessian_pack size must be 2, 3 or 4");
  HessianPack hp;
  hp.k = k;
  hp.matrix.assign(k, std::vector<Expr>(k));
  std::vector<std::vector<Expr>> fm(k, std::vector<Expr>(k));
  std::vector<Expr> args;
  for (int a = 1; a <= k; ++a) args.push_back(Expr(SymbolId::dependent("u", a)));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      hp.matrix[i - 1][j - 1] = jet_entry(i, j);
      fm[i - 1][j - 1] = Expr(SymbolId::opaque(f, {std::min(i, j), std::max(i, j)}, args));
    }
  hp.H = canonical(determinant(hp.matrix));
  for (const auto& [i, j] : pairs_upper(k)) {
    hp.dH[{i, j}] = canonical(diff(hp.H, SymbolId::jet("u", i, j)));
    hp.cofactor[{i, j}] = cofactor_of(hp.matrix, i, j);
    hp.cofactor[{j, i}] = hp.cofactor[{i, j}];
    hp.f_cofactor[{i, j}] = cofactor_of(fm, i, j);
    hp.f_cofactor[{j, i}] = hp.f_cofactor[{i, j}];
  }
  for (const auto& p : pairs_upper(k))
    for (const auto& q : pairs_upper(k))
      hp.d2H[{p, q}] = canonical(diff(hp.dH[p], SymbolId::jet("u", q.first, q.second)));
  return hp;
}

int r_index(int i, int j) {
  if (i < 1 || j > 4 || i > j) throw IndexOutOfRange("r index needs 1 <= i <= j <= 4");
  return i * (9 - i) / 2 + j - 3;
}

int sigma_index(int a, int b) {
  if (a < 1 || b > 4 || a >= b) throw IndexOutOfRange("sigma index needs 1 <= a < b <= 4");
  return 4 * (a - 1) - a * (a + 1) / 2 + b;
}

int s_index(int k, int l, int m, int n) {
  int a = sigma_index(k, l), b = sigma_index(m, n);
  if (a > b) std::swap(a, b);
  return b + a * (13 - a) / 2 + 5;
}

IndexMaps index_maps(int i, int j, int k, int l, int m, int n) {
  IndexMaps im;
  im.r = r_index(i, j);
  im.sigma_kl = sigma_index(k, l);
  im.sigma_mn = sigma_index(m, n);
  im.s = s_index(k, l, m, n);
  return im;
}

std::vector<Expr> ma_basis(int n) {
  int K = MASpec::kappa_count(n);
  std::vector<Expr> b(K - 1);
  HessianPack hp = hessian_pack(n);
  b[0] = hp.H;
  if (n == 2) {
    b[1] = jet_entry(1, 1);
    b[2] = jet_entry(1, 2);
    b[3] = jet_entry(2, 2);
    return b;
  }
  if (n == 3) {
    const auto& pr = pairs_upper(3);
    for (std::size_t t = 0; t < pr.size(); ++t) {
      b[1 + t] = hp.dH[pr[t]];
      b[7 + t] = jet_entry(pr[t].first, pr[t].second);
    }
    return b;
  }
  for (const auto& [i, j] : pairs_upper(4)) {
    int r = r_index(i, j);
    b[r - 1] = hp.dH[{i, j}];
    b[r + 30] = jet_entry(i, j);
  }
  std::vector<std::pair<int, int>> off;
  for (int a = 1; a <= 4; ++a)
    for (int c = a + 1; c <= 4; ++c) off.emplace_back(a, c);
  for (const auto& p : off)
    for (const auto& q : off) {
      if (sigma_index(p.first, p.second) > sigma_index(q.first, q.second)) continue;
      b[s_index(p.first, p.second, q.first, q.second) - 1] = hp.d2H[{p, q}];
    }
  return b;
}

PDESystem build_system(const MASpec& spec) {
  spec.validate();
  PDESystem sys;
  sys.sig = spec.sig();
  for (int a = 1; a <= spec.n; ++a)
    for (int b = a + 1; b <= spec.n; ++b)
      sys.equations.push_back(Expr(sys.sig.jet(b, a)) - Expr(sys.sig.jet(a, b)));
  auto basis = ma_basis(spec.n);
  std::vector<Expr> terms;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!spec.kappas[i].is_zero()) terms.push_back(spec.kappas[i] * basis[i]);
  terms.push_back(spec.kappas.back());
  sys.equations.push_back(Expr::sum(std::move(terms)));
  sys.cleared_factors.assign(sys.equations.size(), {});
  return sys;
}

PDESystem affine_shift(const PDESystem& system, const MASpec& spec, bool shift_args) {
  spec.validate();
  const Signature& s = system.sig;
  if (s != spec.sig()) throw SignatureMismatch("affine_shift: system and spec have different signatures");
  Bindings b;
  for (int a = 1; a <= s.n; ++a) {
    std::vector<Expr> t{Expr(s.dep(a))};
    for (int i = 1; i <= s.n; ++i) t.push_back(spec.alpha(a, i) * Expr(s.indep(i)));
    b.emplace(s.dep(a), Expr::sum(std::move(t)));
    for (int i = 1; i <= s.n; ++i) b.emplace(s.jet(a, i), Expr(s.jet(a, i)) + spec.alpha(a, i));
  }
  PDESystem out = system;
  SubstituteOptions opts;
  opts.into_opaque_args = shift_args;
  for (auto& e : out.equations) e = canonical(substitute(e, b, opts));
  return out;
}

namespace {

Bindings jets_to_zero(const Signature& s) {
  Bindings b;
  for (int a = 1; a <= s.m; ++a)
    for (int i = 1; i <= s.n; ++i) b.emplace(s.jet(a, i), Expr(0LL));
  return b;
}

}  // namespace

Expr homogenization_condition(const MASpec& spec) {
  spec.validate();
  MASpec t = spec;
  SymbolId last = SymbolId::parameter("kappa#last");
  t.kappas.back() = Expr(last);
  PDESystem sys = affine_shift(build_system(t), t);
  Expr deg0 = substitute(sys.equations.back(), jets_to_zero(sys.sig));
  return solve_linear({deg0}, {last}).front().second;
}

MASpec homogenized(const MASpec& spec) {
  MASpec t = spec;
  t.kappas.back() = homogenization_condition(spec);
  return t;
}

std::vector<Expr> hatted_coefficients(const MASpec& spec) {
  spec.validate();
  PDESystem sys = affine_shift(build_system(spec), spec);
  const int K = MASpec::kappa_count(spec.n);
  auto basis = ma_basis(spec.n);
  std::vector<SymbolId> h;
  std::vector<Expr> terms{sys.equations.back()};
  for (int i = 1; i < K; ++i) {
    if (spec.n == 4 && i == 24) continue;
    h.push_back(SymbolId::parameter("hat#" + std::to_string(i)));
    terms.push_back(-(Expr(h.back()) * basis[i - 1]));
  }
  Expr diffe = Expr::sum(std::move(terms));

  std::vector<SymbolId> syms = symbols(diffe);
  Ring ring(syms);
  RatFun r = ring.convert(diffe);
  std::vector<bool> is_jet = jet_mask(ring);
  std::vector<Expr> eqs;
  for (const auto& [m, c] : split_jets(r.num(), is_jet))
    if (m.degree() > 0) eqs.push_back(ring.to_expr(RatFun::make(c, r.den())));
  Solution sol = solve_linear(eqs, h);
  std::vector<Expr> out(K - 1, Expr(0LL));
  std::size_t k = 0;
  for (int i = 1; i < K; ++i) {
    if (spec.n == 4 && i == 24) continue;
    out[i - 1] = sol[k++].second;
  }
  return out;
}

MASpec hatted_spec(const MASpec& spec, const std::string& name) {
  MASpec h = spec;
  const int K = MASpec::kappa_count(spec.n);
  auto args = spec.u_args();
  for (int i = 1; i < K; ++i) h.kappas[i - 1] = Expr(SymbolId::opaque(name + std::to_string(i), {}, args));
  if (spec.n == 4) h.kappas[23] = Expr(0LL);
  h.kappas.back() = Expr(0LL);
  for (auto& a : h.alphas) a = Expr(0LL);
  return h;
}

std::vector<VectorField> ma_fields(const MASpec& spec) {
  Signature s = spec.sig();
  std::vector<VectorField> out;
  for (int i = 1; i <= s.n; ++i) out.push_back(VectorField::translation(s, i));
  VectorField X = VectorField::zero(s);
  for (int i = 1; i <= s.n; ++i) X.xi[i - 1] = Expr(s.indep(i)) - spec.f_derivative({i});
  out.push_back(X);
  return out;
}

ConditionReport derive_conditions(const MASpec& spec, bool solve_original) {
  spec.validate();
  ConditionReport rep;
  MASpec hs = hatted_spec(spec);
  PDESystem sys = build_system(hs);
  VectorField X = ma_fields(hs).back();
  SymmetryCertificate cert = check_symmetry(sys, X, 1);

  std::vector<int> dep = MASpec::dependent_kappas(spec.n);
  std::vector<SymbolId> unknowns;
  for (int i : dep) unknowns.push_back(hs.kappa(i).symbol());

  if (!cert.residual.empty()) {
    std::vector<SymbolId> syms(unknowns);
    for (const auto& r : cert.residual) {
      auto v = symbols(r.value);
      syms.insert(syms.end(), v.begin(), v.end());
    }
    std::sort(syms.begin(), syms.end());
    syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
    Ring ring(syms);
    std::vector<Var> vars;
    for (const auto& u : unknowns) vars.push_back(ring.index(u));
    std::vector<RatFun> eqs;
    for (const auto& r : cert.residual) {
      RatFun v = ring.convert(r.value);
      // Scalar multiples of an earlier row add nothing.
      Poly p = v.num().divexact_scalar(v.num().content());
      if (lc_sign(p) < 0) p = -p;
      bool seen = false;
      for (const auto& e : eqs)
        if (e.num() == p) seen = true;
      if (!seen) eqs.push_back(RatFun(p));
    }
    std::vector<int> col_rank(vars.size());
    for (std::size_t c = 0; c < vars.size(); ++c) col_rank[c] = static_cast<int>(c);
    Elimination el = eliminate(affine_rows(eqs, vars), static_cast<int>(vars.size()), PivotRule::MinimalSize, col_rank);
    if (!el.consistent()) throw Inconsistent("symmetry conditions are inconsistent in the dependent coefficients");
    auto val = el.solve_pivots(vars);
    Bindings impose;
    for (const auto& [c, v] : val) {
      rep.indices.push_back(dep[c]);
      rep.hatted.push_back(canonical(Expr(unknowns[c]) - ring.to_expr(v)));
      impose.emplace(unknowns[c], ring.to_expr(v));
    }
    PDESystem imposed = sys;
    for (auto& e : imposed.equations) e = substitute(e, impose);
    cert = check_symmetry(imposed, X, 1);
    if (!cert.admitted) throw VerificationFailed("imposing the derived conditions does not yield a symmetry");
  }
  rep.certificate = cert;

  rep.hat_map = hatted_coefficients(spec);
  Bindings to_spec;
  for (std::size_t i = 0; i < rep.hat_map.size(); ++i)
    if (hs.kappas[i].kind() == ExprKind::Sym) to_spec.emplace(hs.kappas[i].symbol(), rep.hat_map[i]);
  std::vector<Expr> E;
  for (const auto& c : rep.hatted) {
    Expr e = canonical(substitute(c, to_spec));
    if (!is_zero(e)) E.push_back(e);
  }

  bool free = solve_original;
  std::vector<SymbolId> targets;
  for (int i : rep.indices) {
    const Expr& k = spec.kappa(i);
    if (!is_free_symbol(k)) {
      free = false;
      break;
    }
    targets.push_back(k.symbol());
  }
  if (free && !E.empty()) {
    Solution sol = solve_by_sweeps(E, targets);
    Bindings check = as_bindings(sol);
    for (const auto& e : E)
      if (!is_zero(substitute(e, check))) throw VerificationFailed("solved symmetry conditions leave a residual");
    for (const auto& [k, v] : sol) rep.conditions.push_back(canonical(Expr(k) - v));
    rep.solved = true;
  } else {
    rep.conditions = E;
  }
  return rep;
}

std::vector<Expr> symmetry_conditions(const MASpec& spec) {
  return derive_conditions(spec, MASpec::dependent_kappas(spec.n).size() == 1).conditions;
}

VonKarman von_karman_example() {
  VonKarman vk;
  MASpec spec = MASpec::generic(2);
  Expr s = Expr(SymbolId::opaque("s", {}, {Expr(spec.sig().dep(2))}));
  vk.kappa2 = Expr(SymbolId::opaque("kappa2", {}, {s}));
  vk.b = Expr(SymbolId::opaque("b", {}, {s}));
  spec.kappas = {Expr(1LL), Expr(0LL), Expr(0LL), -vk.b, vk.kappa2};
  vk.spec = spec;

  Expr k5 = homogenization_condition(spec);
  vk.conditions.push_back(canonical(vk.kappa2 - k5));
  MASpec h = homogenized(spec);
  vk.system = affine_shift(build_system(h), h);
  ConditionReport rep = derive_conditions(h, false);
  if (rep.conditions.size() != 1) throw VerificationFailed("expected a single condition for the 1p1 example");
  Expr bval = solve_linear({rep.conditions.front()}, {vk.b.symbol()}).front().second;
  vk.conditions.push_back(canonical(vk.b - bval));
  vk.conditions.push_back(canonical(diff(bval, spec.sig().dep(1))));
  return vk;
}

}  // namespace jetreduce
