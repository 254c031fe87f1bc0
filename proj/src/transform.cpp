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

#include "jetreduce/transform.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "jetreduce/errors.hpp"

namespace jetreduce {

namespace {

using Matrix = std::vector<std::vector<RatFun>>;

std::vector<bool> family_mask(const Ring& ring, const std::string& family) {
  std::vector<bool> m(ring.size());
  for (Var v = 0; v < ring.size(); ++v) {
    const SymbolId& s = ring.symbol(v);
    m[v] = s.kind() == SymbolKind::Jet && s.name() == family;
  }
  return m;
}

std::vector<Var> family_jets(Ring& ring, const Signature& sig) {
  std::vector<Var> out;
  for (int a = 1; a <= sig.m; ++a)
    for (int i = 1; i <= sig.n; ++i) out.push_back(ring.index(sig.jet(a, i)));
  return out;
}

// Jets sorted by the global symbol order, as principal_map expects.
std::vector<Var> sorted_jets(const Ring& ring, std::vector<Var> jets) {
  std::sort(jets.begin(), jets.end(), [&](Var a, Var b) { return ring.symbol(a) < ring.symbol(b); });
  return jets;
}

int popcount(unsigned x) { return __builtin_popcount(x); }

// Minors of a fixed matrix by first-row Laplace expansion, memoised on the
// (row set, column set) bitmasks.
class Minors {
 public:
  explicit Minors(const Matrix& m) : m_(m) {}

  const RatFun& operator()(unsigned rows, unsigned cols) {
    auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    RatFun v;
    if (rows == 0) {
      v = RatFun(1);
    } else {
      int r = __builtin_ctz(rows);
      unsigned rest = rows & (rows - 1);
      std::vector<RatFun> parts;
      int sign = 1;
      for (int c = 0; c < 32; ++c) {
        if (!(cols >> c & 1u)) continue;
        const RatFun& e = m_[r][c];
        if (!e.is_zero()) {
          RatFun t = e * (*this)(rest, cols & ~(1u << c));
          parts.push_back(sign > 0 ? t : -t);
        }
        sign = -sign;
      }
      v = sum(parts);
    }
    return memo_.emplace(key, std::move(v)).first->second;
  }

 private:
  const Matrix& m_;
  std::map<std::pair<unsigned, unsigned>, RatFun> memo_;
};

// N U = R with U[A][i] = u[A,i]: the chain rule for z = Z, w = W.
struct Exchange {
  Matrix N;  // m x m
  Matrix R;  // m x n
};

Exchange exchange_system(Ring& ring, const PointTransformation& t) {
  const Signature& s = t.source;
  const Signature& g = t.target;
  Exchange ex;
  ex.N.assign(s.m, std::vector<RatFun>(s.m));
  ex.R.assign(s.m, std::vector<RatFun>(s.n));
  std::vector<std::vector<RatFun>> dZx(s.n, std::vector<RatFun>(s.n)), dZu(s.n, std::vector<RatFun>(s.m));
  for (int j = 1; j <= s.n; ++j) {
    for (int i = 1; i <= s.n; ++i) dZx[j - 1][i - 1] = ring.convert(diff(t.Z[j - 1], s.indep(i)));
    for (int a = 1; a <= s.m; ++a) dZu[j - 1][a - 1] = ring.convert(diff(t.Z[j - 1], s.dep(a)));
  }
  for (int b = 1; b <= s.m; ++b) {
    std::vector<RatFun> wj;
    for (int j = 1; j <= s.n; ++j) wj.push_back(ring.convert(Expr(g.jet(b, j))));
    for (int a = 1; a <= s.m; ++a) {
      std::vector<RatFun> parts{ring.convert(diff(t.W[b - 1], s.dep(a)))};
      for (int j = 0; j < s.n; ++j)
        if (!dZu[j][a - 1].is_zero()) parts.push_back(-(dZu[j][a - 1] * wj[j]));
      ex.N[b - 1][a - 1] = sum(parts);
    }
    for (int i = 1; i <= s.n; ++i) {
      std::vector<RatFun> parts{-ring.convert(diff(t.W[b - 1], s.indep(i)))};
      for (int j = 0; j < s.n; ++j)
        if (!dZx[j][i - 1].is_zero()) parts.push_back(dZx[j][i - 1] * wj[j]);
      ex.R[b - 1][i - 1] = sum(parts);
    }
  }
  return ex;
}

unsigned full_mask(int k) { return k >= 32 ? ~0u : ((1u << k) - 1u); }

// (adj(N) R)[A][i]; U = that / det N.
Matrix adjugate_times(Minors& nm, const Exchange& ex, int m, int n) {
  Matrix out(m, std::vector<RatFun>(n));
  unsigned all = full_mask(m);
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < n; ++i) {
      std::vector<RatFun> parts;
      for (int b = 0; b < m; ++b) {
        if (ex.R[b][i].is_zero()) continue;
        RatFun adj = nm(all & ~(1u << b), all & ~(1u << a));
        if ((a + b) % 2) adj = -adj;
        parts.push_back(adj * ex.R[b][i]);
      }
      out[a][i] = sum(parts);
    }
  return out;
}

// Images of the source coordinates (and of opaque symbols whose arguments
// mention them) under the inverse point map.
std::unordered_map<Var, RatFun> inverse_images(Ring& ring, const PointTransformation& t) {
  Bindings inv;
  for (int i = 1; i <= t.source.n; ++i) inv.emplace(t.source.indep(i), t.inverse->x_of[i - 1]);
  for (int a = 1; a <= t.source.m; ++a) inv.emplace(t.source.dep(a), t.inverse->u_of[a - 1]);
  std::vector<std::pair<Var, Expr>> todo;
  for (Var v = 0; v < ring.size(); ++v) {
    const SymbolId& s = ring.symbol(v);
    if (inv.count(s)) {
      todo.emplace_back(v, inv.at(s));
    } else if (s.kind() == SymbolKind::Opaque) {
      Expr e = substitute(Expr(s), inv);
      if (e != Expr(s)) todo.emplace_back(v, e);
    }
  }
  std::unordered_map<Var, RatFun> images;
  for (auto& [v, e] : todo) images.emplace(v, ring.convert(e));
  return images;
}

// Subsets of {0..k-1} of a given size as bitmasks.
std::vector<unsigned> subsets(int k, int size) {
  std::vector<unsigned> out;
  for (unsigned s = 0; s <= full_mask(k); ++s)
    if (popcount(s) == size) out.push_back(s);
  return out;
}

int index_sum(unsigned s) {
  int t = 0;
  for (int b = 0; b < 32; ++b)
    if (s >> b & 1u) t += b + 1;
  return t;
}

struct MinorTerm {
  unsigned rows, cols;
  RatFun coef;
};

// p = sum c_IJ minor_IJ(U) modulo the reduction sigma, with U the source jet
// matrix; nullopt when p is outside that span.
std::optional<std::vector<MinorTerm>> minor_decomposition(const RatFun& p, Ring& ring, const Signature& s,
                                                          const std::unordered_map<Var, RatFun>& sigma) {
  Matrix U(s.m, std::vector<RatFun>(s.n));
  for (int a = 1; a <= s.m; ++a)
    for (int i = 1; i <= s.n; ++i) U[a - 1][i - 1] = RatFun(Poly::var(ring.index(s.jet(a, i))));
  Minors um(U);
  std::vector<std::pair<unsigned, unsigned>> cols;
  std::vector<RatFun> reduced;
  int kmax = std::min(s.m, s.n);
  for (int k = 0; k <= kmax; ++k)
    for (unsigned I : subsets(s.m, k))
      for (unsigned J : subsets(s.n, k)) {
        cols.emplace_back(I, J);
        reduced.push_back(compose(um(I, J), sigma));
      }
  std::vector<bool> is_jet = family_mask(ring, s.u);
  RatFun target = compose(p, sigma);
  std::map<Monomial, LinearRow, bool (*)(const Monomial&, const Monomial&)> rows(monomial_greater);
  for (std::size_t c = 0; c < reduced.size(); ++c)
    for (auto& [mu, coef] : split_jets(reduced[c].num(), is_jet))
      rows[mu].a[static_cast<int>(c)] = RatFun::make(coef, reduced[c].den());
  for (auto& [mu, coef] : split_jets(target.num(), is_jet)) rows[mu].rhs = RatFun::make(coef, target.den());
  std::vector<LinearRow> list;
  for (auto& [mu, r] : rows) list.push_back(std::move(r));
  std::vector<int> col_rank(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) col_rank[c] = static_cast<int>(c);
  Elimination el = eliminate(std::move(list), static_cast<int>(cols.size()), PivotRule::MinimalSize, col_rank);
  if (!el.consistent()) return std::nullopt;
  std::vector<RatFun> x = el.solve();
  std::vector<MinorTerm> out;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (!x[c].is_zero()) out.push_back({cols[c].first, cols[c].second, x[c]});
  return out;
}

// det(N) * minor_IJ(N^{-1} R) by Cauchy-Binet and Jacobi's complementary minors.
RatFun scaled_minor(unsigned I, unsigned J, Minors& nm, Minors& rm, int m) {
  int k = popcount(I);
  unsigned all = full_mask(m);
  std::vector<RatFun> parts;
  for (unsigned K : subsets(m, k)) {
    const RatFun& r = rm(K, J);
    if (r.is_zero()) continue;
    RatFun t = nm(all & ~K, all & ~I) * r;
    parts.push_back((index_sum(I) + index_sum(K)) % 2 ? -t : t);
  }
  return sum(parts);
}

Poly strip_content(const Poly& p, const std::vector<bool>& is_jet, Poly& removed) {
  removed = Poly(1);
  if (p.is_zero()) return p;
  JetSplit parts = split_jets(p, is_jet);
  Poly g;
  for (auto& [mu, c] : parts) {
    g = g.is_zero() ? c : gcd(g, c);
    if (g.is_constant() && abs(g.constant_value()).is_one()) break;
  }
  if (g.is_constant() && g.constant_value().is_one()) return p;
  removed = g;
  auto q = divide_exact(p, g);
  if (!q) throw std::logic_error("strip_content: content does not divide");
  return *q;
}

}  // namespace

const Expr& JetMap::at(const SymbolId& jet) const {
  for (const auto& [s, e] : images)
    if (s == jet) return e;
  throw std::out_of_range("jet not in map: " + to_string(jet));
}

JetMap jet_exchange(const PointTransformation& t0) {
  PointTransformation t = with_inverse(t0);
  t.validate();
  const Signature& s = t.source;
  Ring ring;
  Exchange ex = exchange_system(ring, t);
  Minors nm(ex.N);
  RatFun det = nm(full_mask(s.m), full_mask(s.m));
  if (det.is_zero()) throw SingularJetMap("jet exchange determinant normalizes to 0");
  Matrix num = adjugate_times(nm, ex, s.m, s.n);
  // N U - R = 0 with U = num / det.
  for (int b = 0; b < s.m; ++b)
    for (int i = 0; i < s.n; ++i) {
      std::vector<RatFun> parts{-(ex.R[b][i] * det)};
      for (int a = 0; a < s.m; ++a) parts.push_back(ex.N[b][a] * num[a][i]);
      if (!sum(parts).is_zero()) throw VerificationFailed("jet exchange back-substitution residual is nonzero");
    }
  auto images = inverse_images(ring, t);
  RatFun det_t = compose(det, images);
  if (det_t.is_zero()) throw SingularJetMap("jet exchange determinant vanishes in target coordinates");
  JetMap out;
  out.determinant = canonical(ring.to_expr(det_t));
  for (int a = 1; a <= s.m; ++a)
    for (int i = 1; i <= s.n; ++i)
      out.images.emplace_back(s.jet(a, i), canonical(ring.to_expr(compose(num[a - 1][i - 1] / det, images))));
  return out;
}

PDESystem push_forward(const PDESystem& system, const PointTransformation& t0, const PushOptions& opts) {
  PointTransformation t = with_inverse(t0);
  t.validate();
  if (system.sig != t.source) throw SignatureMismatch("system and transformation have different source signatures");
  const Signature& s = t.source;
  const Signature& g = t.target;

  std::vector<SymbolId> syms;
  for (const auto& e : system.equations) {
    auto v = symbols(e);
    syms.insert(syms.end(), v.begin(), v.end());
  }
  std::sort(syms.begin(), syms.end());
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  Ring ring(syms);
  std::vector<Var> ujets = sorted_jets(ring, family_jets(ring, s));
  std::vector<RatFun> D;
  for (const auto& e : system.equations) D.push_back(ring.convert(e));

  Exchange ex = exchange_system(ring, t);
  Minors nm(ex.N), rm(ex.R);
  RatFun det = nm(full_mask(s.m), full_mask(s.m));
  if (det.is_zero()) throw SingularJetMap("jet exchange determinant normalizes to 0");

  std::vector<bool> is_u = family_mask(ring, s.u);
  std::vector<RatFun> lin;
  std::vector<bool> linear(D.size());
  for (std::size_t k = 0; k < D.size(); ++k) {
    if (jet_degree(D[k].den(), is_u) != 0) throw std::invalid_argument("equation is not polynomial in the jets");
    linear[k] = !D[k].is_zero() && jet_degree(D[k].num(), is_u) == 1 && min_jet_degree(D[k].num(), is_u) == 1;
    if (linear[k]) lin.push_back(D[k]);
  }
  auto sigma = principal_map(lin, ujets);

  std::optional<Matrix> direct;
  std::vector<RatFun> pushed(D.size());
  std::vector<std::vector<RatFun>> factors(D.size());
  for (std::size_t k = 0; k < D.size(); ++k) {
    const RatFun& d = D[k];
    if (!d.den().is_constant()) factors[k].push_back(RatFun(d.den()));
    RatFun p(d.num());
    // Jet-linear equations are their own degree-one minor expansion; the
    // others are expanded modulo them.
    static const std::unordered_map<Var, RatFun> none;
    if (auto dec = minor_decomposition(p, ring, s, linear[k] ? none : sigma)) {
      std::vector<RatFun> parts;
      for (const auto& term : *dec) parts.push_back(term.coef * scaled_minor(term.rows, term.cols, nm, rm, s.m));
      pushed[k] = sum(parts);
      factors[k].push_back(det);
    } else {
      if (!direct) {
        direct = adjugate_times(nm, ex, s.m, s.n);
        for (auto& row : *direct)
          for (auto& e : row) e = e / det;
      }
      std::unordered_map<Var, RatFun> img;
      for (int a = 1; a <= s.m; ++a)
        for (int i = 1; i <= s.n; ++i) img.emplace(ring.index(s.jet(a, i)), (*direct)[a - 1][i - 1]);
      RatFun q = compose(p, img);
      if (!q.den().is_constant()) factors[k].push_back(RatFun(q.den()));
      pushed[k] = RatFun(q.num());
    }
  }

  auto images = inverse_images(ring, t);
  for (auto& p : pushed) p = compose(p, images);
  for (auto& fs : factors)
    for (auto& f : fs) f = compose(f, images);
  RatFun det_t = compose(det, images);
  std::vector<Var> wjets = sorted_jets(ring, family_jets(ring, g));
  std::vector<bool> is_w = family_mask(ring, g.u);

  if (opts.reduce_linear && !lin.empty()) {
    // Largest set of jet-linear images generated by their own linear parts;
    // images outside it are kept whole and reduced like the others.
    std::vector<bool> use(D.size());
    for (std::size_t k = 0; k < D.size(); ++k)
      use[k] = linear[k] && jet_part(pushed[k].num(), is_w, 0).is_zero();
    std::unordered_map<Var, RatFun> tau;
    std::vector<RatFun> parts(D.size());
    bool ok = false;
    while (true) {
      std::vector<RatFun> gen;
      for (std::size_t k = 0; k < D.size(); ++k)
        if (use[k]) {
          parts[k] = RatFun::make(jet_part(pushed[k].num(), is_w, 1), pushed[k].den());
          gen.push_back(parts[k]);
        }
      if (gen.empty()) break;
      try {
        tau = principal_map(gen, wjets);
      } catch (const Inconsistent&) {
        break;
      }
      if (tau.size() != gen.size()) break;
      bool stable = true;
      for (std::size_t k = 0; k < D.size(); ++k)
        if (use[k] && !compose(pushed[k], tau).is_zero()) {
          use[k] = false;
          stable = false;
        }
      if (stable) {
        ok = true;
        break;
      }
    }
    if (ok) {
      for (std::size_t k = 0; k < D.size(); ++k) {
        if (use[k]) {
          pushed[k] = parts[k];
        } else {
          RatFun r = compose(pushed[k], tau);
          if (!r.den().is_constant()) factors[k].push_back(RatFun(r.den()));
          pushed[k] = RatFun(r.num());
        }
      }
    }
  }

  PDESystem out;
  out.sig = g;
  for (std::size_t k = 0; k < D.size(); ++k) {
    Poly num = pushed[k].num();
    if (!pushed[k].den().is_constant()) factors[k].push_back(RatFun(pushed[k].den()));
    // Powers of the exchange determinant and jet-free contents are not part
    // of the equation.
    while (!num.is_zero() && !det_t.num().is_constant()) {
      Poly c = gcd(num, det_t.num());
      if (c.is_constant()) break;
      num = *divide_exact(num, c);
      factors[k].push_back(RatFun(1) / RatFun(c));
    }
    Poly removed;
    num = strip_content(num, is_w, removed);
    if (!(removed.is_constant() && removed.constant_value().is_one())) factors[k].push_back(RatFun(1) / RatFun(removed));
    if (lc_sign(num) < 0) num = -num;
    out.equations.push_back(canonical(ring.to_expr(num)));
    std::vector<Expr> fe;
    for (const auto& f : factors[k]) fe.push_back(canonical(ring.to_expr(f)));
    out.cleared_factors.push_back(std::move(fe));
  }
  return out;
}

ClassificationReport classify(const PDESystem& system) {
  const Signature& s = system.sig;
  ClassificationReport rep;
  std::vector<SymbolId> syms;
  for (const auto& e : system.equations) {
    auto v = symbols(e);
    syms.insert(syms.end(), v.begin(), v.end());
  }
  std::sort(syms.begin(), syms.end());
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  Ring ring(syms);
  std::vector<RatFun> D;
  for (const auto& e : system.equations) D.push_back(ring.convert(e));
  for (int a = 1; a <= s.m; ++a)
    for (int i = 1; i <= s.n; ++i) ring.index(s.jet(a, i));
  std::vector<bool> is_jet = family_mask(ring, s.u);

  rep.autonomous = true;
  for (const auto& e : system.equations)
    for (const auto& sym : symbols(canonical(e), true))
      if (sym.kind() == SymbolKind::Independent && sym.name() == s.x) rep.autonomous = false;

  bool all_linear = true;
  bool sources = false;
  std::vector<Expr> residual;
  for (const auto& d : D) {
    const Poly& num = d.num();
    int deg = static_cast<int>(jet_degree(num, is_jet));
    bool hom = !num.is_zero() && deg >= 1 && static_cast<int>(min_jet_degree(num, is_jet)) == deg &&
               jet_degree(d.den(), is_jet) == 0;
    rep.jet_degree.push_back(deg);
    rep.homogeneous_in_jets.push_back(hom);
    all_linear = all_linear && hom && deg == 1;
    Poly free = jet_part(num, is_jet, 0);
    if (!free.is_zero()) sources = true;
    residual.push_back(canonical(ring.to_expr(RatFun::make(free, d.den()))));
  }
  if (sources) rep.residual_source = residual;
  if (all_linear) {
    std::vector<std::vector<std::vector<Expr>>> mats(
        s.n, std::vector<std::vector<Expr>>(D.size(), std::vector<Expr>(s.m, Expr(0LL))));
    for (std::size_t k = 0; k < D.size(); ++k) {
      JetSplit parts = split_jets(D[k].num(), is_jet);
      for (int a = 1; a <= s.m; ++a)
        for (int i = 1; i <= s.n; ++i) {
          auto it = parts.find(Monomial::of(ring.index(s.jet(a, i))));
          if (it != parts.end())
            mats[i - 1][k][a - 1] = canonical(ring.to_expr(RatFun::make(it->second, D[k].den())));
        }
    }
    rep.matrices = std::move(mats);
  }
  rep.quasilinear = all_linear && rep.autonomous;
  return rep;
}

bool same_equation(const Expr& a, const Expr& b) {
  bool za = is_zero(a), zb = is_zero(b);
  if (za || zb) return za && zb;
  for (const auto& s : symbols(canonical(a / b), true))
    if (s.kind() == SymbolKind::Jet) return false;
  return true;
}

namespace {

// Jet-linear equations as a principal map, the rest reduced by it.
struct Reduced {
  std::unordered_map<Var, RatFun> sigma;
  std::vector<RatFun> rest;
};

Reduced reduce_system(Ring& ring, const PDESystem& s) {
  std::vector<RatFun> D;
  for (const auto& e : s.equations) D.push_back(ring.convert(e));
  std::vector<Var> jets = sorted_jets(ring, family_jets(ring, s.sig));
  std::vector<bool> is_jet = family_mask(ring, s.sig.u);
  std::vector<RatFun> lin;
  Reduced r;
  for (const auto& d : D) {
    if (!d.is_zero() && jet_degree(d.den(), is_jet) == 0 && jet_degree(d.num(), is_jet) == 1 &&
        min_jet_degree(d.num(), is_jet) == 1)
      lin.push_back(d);
    else
      r.rest.push_back(d);
  }
  r.sigma = principal_map(lin, jets);
  for (auto& d : r.rest) d = compose(d, r.sigma);
  return r;
}

}  // namespace

bool equivalent_systems(const PDESystem& a, const PDESystem& b) {
  if (a.sig != b.sig) return false;
  std::vector<SymbolId> syms;
  for (const auto* s : {&a, &b})
    for (const auto& e : s->equations) {
      auto v = symbols(e);
      syms.insert(syms.end(), v.begin(), v.end());
    }
  std::sort(syms.begin(), syms.end());
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  Ring ring(syms);
  Reduced ra = reduce_system(ring, a);
  Reduced rb = reduce_system(ring, b);
  if (ra.sigma.size() != rb.sigma.size()) return false;
  for (const auto& [v, e] : ra.sigma) {
    auto it = rb.sigma.find(v);
    if (it == rb.sigma.end() || it->second != e) return false;
  }
  auto drop_zero = [](std::vector<RatFun>& v) {
    v.erase(std::remove_if(v.begin(), v.end(), [](const RatFun& r) { return r.is_zero(); }), v.end());
  };
  drop_zero(ra.rest);
  drop_zero(rb.rest);
  if (ra.rest.size() != rb.rest.size()) return false;
  std::vector<bool> used(rb.rest.size());
  for (const auto& x : ra.rest) {
    Expr ex = ring.to_expr(x);
    bool found = false;
    for (std::size_t j = 0; j < rb.rest.size() && !found; ++j)
      if (!used[j] && same_equation(ex, ring.to_expr(rb.rest[j]))) found = used[j] = true;
    if (!found) return false;
  }
  return true;
}

std::string stage_name(Stage s) {
  switch (s) {
    case Stage::Structure:
      return "structure";
    case Stage::Symmetry:
      return "symmetry";
    case Stage::Canonical:
      return "canonical";
    case Stage::PushForward:
      return "push-forward";
    case Stage::Classification:
      return "classification";
    case Stage::Done:
      return "done";
  }
  return "unknown";
}

ReductionReport reduce(const PDESystem& system, const std::vector<VectorField>& fields, std::optional<int> mult_degree) {
  ReductionReport rep;
  rep.algebra = check_theorem1_structure(fields);
  if (!rep.algebra.structure_ok) {
    rep.message = rep.algebra.failures.empty() ? "algebra structure check failed" : rep.algebra.failures.front();
    return rep;
  }
  rep.reached = Stage::Symmetry;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    rep.symmetry.push_back(check_symmetry(system, fields[k], mult_degree));
    if (!rep.symmetry.back().admitted) {
      rep.message = "field " + std::to_string(k + 1) + " is not a symmetry at multiplier degree <= " +
                    std::to_string(rep.symmetry.back().max_degree);
      return rep;
    }
  }
  rep.reached = Stage::Canonical;
  try {
    rep.transformation = canonical_for_translation_scaling(fields);
  } catch (const Error& e) {
    rep.message = e.what();
    return rep;
  }
  rep.reached = Stage::PushForward;
  try {
    rep.target = push_forward(system, *rep.transformation);
  } catch (const Error& e) {
    rep.message = e.what();
    return rep;
  }
  rep.reached = Stage::Classification;
  rep.classification = classify(*rep.target);
  if (!rep.classification->quasilinear) {
    rep.message = "transformed system is not an autonomous homogeneous quasilinear system";
    return rep;
  }
  rep.reached = Stage::Done;
  rep.success = true;
  return rep;
}

}  // namespace jetreduce
