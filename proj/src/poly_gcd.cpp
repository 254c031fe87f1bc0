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

// Multivariate gcd over Z.
//
// Strategy: strip integer and monomial contents; reduce to contents when a
// variable occurs in one operand only; bound the gcd degree in every variable
// with univariate images modulo a Mersenne prime (an image with non-vanishing
// leading coefficient gives a rigorous upper bound); try the operands
// themselves as candidates; then the heuristic integer-evaluation gcd; fall
// back to the subresultant PRS.

#include <algorithm>
#include <optional>
#include <random>
#include <unordered_map>

#include "jetreduce/poly.hpp"

namespace jetreduce {

namespace {

constexpr uint64_t kP = (1ull << 61) - 1;

uint64_t addm(uint64_t a, uint64_t b) {
  uint64_t r = a + b;
  return r >= kP ? r - kP : r;
}
uint64_t subm(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kP - b; }
uint64_t mulm(uint64_t a, uint64_t b) {
  __uint128_t r = static_cast<__uint128_t>(a) * b;
  uint64_t lo = static_cast<uint64_t>(r & kP);
  uint64_t hi = static_cast<uint64_t>(r >> 61);
  return addm(lo, hi);
}
uint64_t powm(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulm(r, a);
    a = mulm(a, a);
    e >>= 1;
  }
  return r;
}
uint64_t invm(uint64_t a) { return powm(a, kP - 2); }

using UPolyP = std::vector<uint64_t>;

void trim(UPolyP& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Euclidean gcd over F_p; returns the degree of the gcd.
int gcd_degree_modp(UPolyP a, UPolyP b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    if (a.size() < b.size()) std::swap(a, b);
    uint64_t inv = invm(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      uint64_t q = mulm(a.back(), inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = subm(a[shift + k], mulm(q, b[k]));
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// Image of p in F_p[x] after evaluating every other variable at pt.
UPolyP image(const Poly& p, Var x, const std::unordered_map<Var, uint64_t>& pt) {
  UPolyP out(p.degree(x) + 1, 0);
  for (const auto& t : p.terms()) {
    uint64_t v = t.c.mod(kP);
    uint32_t ex = 0;
    for (std::size_t k = 0; k < t.m.size() && v; ++k) {
      Var w = t.m.var(k);
      if (w == x) {
        ex = t.m.exp(k);
        continue;
      }
      v = mulm(v, powm(pt.at(w), t.m.exp(k)));
    }
    out[ex] = addm(out[ex], v);
  }
  return out;
}

Poly positive(Poly p) { return lc_sign(p) < 0 ? -p : p; }

Poly gcd_primitive(const Poly& a, const Poly& b);

// gcd(g, c_0, c_1, ...) over the coefficients of p with respect to x.
Poly gcd_with_coefficients(Poly g, const Poly& p, Var x) {
  auto cs = p.coefficients(x);
  std::sort(cs.begin(), cs.end(), [](const Poly& u, const Poly& v) { return u.size() < v.size(); });
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && g.constant_value().is_one()) break;
  }
  return g;
}

Poly content_in(const Poly& p, Var x) { return gcd_with_coefficients(Poly(), p, x); }

// ----------------------------------------------------- subresultant PRS

using UPoly = std::vector<Poly>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly scale(const UPoly& p, const Poly& c) {
  UPoly r;
  r.reserve(p.size());
  for (const auto& x : p) r.push_back(x * c);
  return r;
}

UPoly divexact_all(const UPoly& p, const Poly& c) {
  if (c.is_constant() && c.constant_value().is_one()) return p;
  UPoly r;
  r.reserve(p.size());
  for (const auto& x : p) r.push_back(*divide_exact(x, c));
  return r;
}

UPoly prem(UPoly r, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const Poly& lb = b.back();
  std::size_t steps = r.size() - 1 - db + 1;
  std::size_t used = 0;
  while (!r.empty() && r.size() - 1 >= db) {
    Poly s = r.back();
    std::size_t shift = r.size() - 1 - db;
    r = scale(r, lb);
    for (std::size_t k = 0; k <= db; ++k) r[shift + k] -= s * b[k];
    trim(r);
    ++used;
  }
  if (used < steps) r = scale(r, lb.pow(static_cast<unsigned>(steps - used)));
  return r;
}

Poly prs_gcd(const Poly& a, const Poly& b, Var x) {
  UPoly A = a.coefficients(x), B = b.coefficients(x);
  Poly ca, cb;
  for (const auto& c : A) ca = gcd(ca, c);
  for (const auto& c : B) cb = gcd(cb, c);
  Poly cg = gcd(ca, cb);
  A = divexact_all(A, ca);
  B = divexact_all(B, cb);
  if (A.size() < B.size()) std::swap(A, B);
  Poly g(1), h(1);
  while (true) {
    std::size_t delta = A.size() - B.size();
    UPoly R = prem(A, B);
    if (R.empty()) break;
    if (R.size() == 1) {
      B = UPoly{Poly(1)};
      break;
    }
    A = B;
    B = divexact_all(R, g * h.pow(static_cast<unsigned>(delta)));
    g = A.back();
    if (delta == 0) {
      // h unchanged
    } else {
      h = *divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  Poly cont;
  for (const auto& c : B) cont = gcd(cont, c);
  B = divexact_all(B, cont);
  return positive(cg * Poly::from_coefficients(B, x));
}


// ------------------------------------------------------ heuristic gcd

mpz_class max_norm(const Poly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) {
    mpz_class c = abs(t.c).to_mpz();
    if (c > m) m = c;
  }
  return m;
}

Poly evaluate_at(const Poly& p, Var x, const mpz_class& xi) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    uint32_t e = t.m.exp_of(x);
    mpz_class v = t.c.to_mpz();
    if (e) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), e);
      v *= pw;
    }
    out.push_back(Term{t.m.without(x), Int(v)});
  }
  return Poly::from_terms(std::move(out));
}

// Inverse of evaluate_at via the balanced xi-adic expansion of the coefficients.
Poly interpolate(Poly h, Var x, const mpz_class& xi) {
  std::vector<Term> out;
  mpz_class half = xi / 2;
  for (uint32_t i = 0; !h.is_zero(); ++i) {
    if (i > 4096) return Poly();
    std::vector<Term> g, rest;
    for (const auto& t : h.terms()) {
      mpz_class c = t.c.to_mpz(), r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) g.push_back(Term{t.m, Int(r)});
      mpz_class q = (c - r) / xi;
      if (q != 0) rest.push_back(Term{t.m, Int(q)});
    }
    Monomial xm = i ? Monomial::of(x, i) : Monomial();
    for (auto& t : g) out.push_back(Term{t.m * xm, t.c});
    h = Poly::from_terms(std::move(rest));
  }
  return Poly::from_terms(std::move(out));
}

Poly primitive(const Poly& p) {
  if (p.is_zero()) return p;
  return positive(p.divexact_scalar(p.content()));
}

// Nested heuristic calls abandon the outermost attempt instead of falling back.
thread_local int heuristic_depth = 0;
struct HeuristicFailed {};

std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b, Var x) {
  struct Depth {
    Depth() { ++heuristic_depth; }
    ~Depth() { --heuristic_depth; }
  } depth;
  const bool outer = heuristic_depth == 1;
  mpz_class na = max_norm(a), nb = max_norm(b);
  mpz_class B = 2 * (na < nb ? na : nb) + 29;
  mpz_class root = sqrt(B);
  mpz_class r99 = 99 * root;
  mpz_class xi = B < r99 ? B : r99;
  mpz_class la = abs(a.lc().to_mpz()), lb = abs(b.lc().to_mpz());
  mpz_class qa = na / la, qb = nb / lb;
  mpz_class alt = 2 * (qa < qb ? qa : qb) + 2;
  if (alt > xi) xi = alt;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * (a.degree(x) + 1) > (1u << 16)) break;
    Poly fa = evaluate_at(a, x, xi), fb = evaluate_at(b, x, xi);
    if (!fa.is_zero() && !fb.is_zero()) {
      Poly h;
      try {
        h = gcd(fa, fb);
      } catch (const HeuristicFailed&) {
        if (!outer) throw;
        return std::nullopt;
      }
      Poly H = primitive(interpolate(h, x, xi));
      if (!H.is_zero() && divide_exact(a, H) && divide_exact(b, H)) return H;
      for (const auto* src : {&a, &b}) {
        const Poly& fs = src == &a ? fa : fb;
        auto cf = divide_exact(fs, h);
        if (!cf) continue;
        Poly C = interpolate(*cf, x, xi);
        if (C.is_zero()) continue;
        auto G = divide_exact(*src, C);
        if (!G) continue;
        Poly Gp = primitive(*G);
        if (divide_exact(src == &a ? b : a, Gp)) return Gp;
      }
    }
    mpz_class r4 = sqrt(sqrt(xi));
    xi = xi * r4 * 73794 / 27011;
  }
  if (!outer) throw HeuristicFailed{};
  return std::nullopt;
}

Poly gcd_primitive(const Poly& a, const Poly& b) {
  if (a == b) return a;
  if (a.is_constant() || b.is_constant()) return Poly(1);
  auto va = a.vars(), vb = b.vars();
  for (Var x : va)
    if (!std::binary_search(vb.begin(), vb.end(), x)) return gcd_with_coefficients(b, a, x);
  for (Var x : vb)
    if (!std::binary_search(va.begin(), va.end(), x)) return gcd_with_coefficients(a, b, x);

  std::mt19937_64 rng(a.hash() ^ (b.hash() * 31));
  std::unordered_map<Var, uint64_t> pt;
  auto reseed = [&] {
    for (Var v : va) pt[v] = 2 + rng() % (kP - 3);
  };
  reseed();
  std::vector<uint32_t> bound(va.size());
  bool all_a = true, all_b = true;
  for (std::size_t k = 0; k < va.size(); ++k) {
    Var x = va[k];
    uint32_t da = a.degree(x), db = b.degree(x);
    uint32_t d = std::min(da, db);
    for (int attempt = 0; attempt < 3; ++attempt) {
      UPolyP ia = image(a, x, pt), ib = image(b, x, pt);
      trim(ia);
      trim(ib);
      if (ia.size() == da + 1 && ib.size() == db + 1) {
        d = static_cast<uint32_t>(gcd_degree_modp(ia, ib));
        break;
      }
      reseed();
    }
    if (d == 0) return gcd(content_in(a, x), content_in(b, x));
    bound[k] = d;
    all_a = all_a && d == da;
    all_b = all_b && d == db;
  }
  if (all_a && a.size() <= b.size() && divide_exact(b, a)) return a;
  if (all_b && divide_exact(a, b)) return b;
  if (all_a && a.size() > b.size() && divide_exact(b, a)) return a;

  // Main variable: smallest combined degree.
  Var best = va[0];
  uint32_t best_deg = ~0u;
  for (Var x : va) {
    uint32_t d = a.degree(x) + b.degree(x);
    if (d < best_deg) {
      best_deg = d;
      best = x;
    }
  }
  if (auto h = heuristic_gcd(a, b, best)) return *h;
  return prs_gcd(a, b, best);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  Int ca = a.content(), cb = b.content();
  Int c = gcd(ca, cb);
  if (a.is_constant() || b.is_constant()) return Poly(c);
  Monomial ma = a.monomial_content(), mb = b.monomial_content();
  Monomial m = min(ma, mb);
  Poly A = positive(a.divexact_scalar(ca).divexact_monomial(ma));
  Poly B = positive(b.divexact_scalar(cb).divexact_monomial(mb));
  Poly g = gcd_primitive(A, B);
  return g.times(m, c);
}

}  // namespace jetreduce
