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

#include "jetreduce/poly.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace jetreduce {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, uint32_t e) {
  Monomial m;
  if (e) m.push(v, e);
  return m;
}

uint32_t Monomial::exp_of(Var v) const {
  for (auto p : d_) {
    Var w = p >> 16;
    if (w == v) return p & 0xffffu;
    if (w > v) break;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.d_.size() && j < b.d_.size()) {
    Var va = a.var(i), vb = b.var(j);
    if (va < vb) {
      r.push(va, a.exp(i++));
    } else if (vb < va) {
      r.push(vb, b.exp(j++));
    } else {
      uint32_t e = a.exp(i++) + b.exp(j++);
      if (e > 0xffffu) throw std::overflow_error("monomial exponent overflow");
      r.push(va, e);
    }
  }
  for (; i < a.d_.size(); ++i) r.push(a.var(i), a.exp(i));
  for (; j < b.d_.size(); ++j) r.push(b.var(j), b.exp(j));
  return r;
}

bool Monomial::divides(const Monomial& b) const {
  if (deg_ > b.deg_ || d_.size() > b.d_.size()) return false;
  std::size_t j = 0;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    Var v = var(i);
    while (j < b.d_.size() && b.var(j) < v) ++j;
    if (j == b.d_.size() || b.var(j) != v || b.exp(j) < exp(i)) return false;
    ++j;
  }
  return true;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t j = 0;
  for (std::size_t i = 0; i < a.d_.size(); ++i) {
    Var v = a.var(i);
    uint32_t e = a.exp(i);
    if (j < b.d_.size() && b.var(j) == v) e -= b.exp(j++);
    if (e) r.push(v, e);
  }
  return r;
}

Monomial min(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.d_.size() && j < b.d_.size()) {
    Var va = a.var(i), vb = b.var(j);
    if (va < vb) {
      ++i;
    } else if (vb < va) {
      ++j;
    } else {
      r.push(va, std::min(a.exp(i++), b.exp(j++)));
    }
  }
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r;
  for (std::size_t k = 0; k < d_.size(); ++k)
    if (var(k) != v) r.push(var(k), exp(k));
  return r;
}

Monomial Monomial::renamed(const std::vector<Var>& map) const {
  std::vector<std::pair<Var, uint32_t>> es;
  es.reserve(d_.size());
  for (std::size_t k = 0; k < d_.size(); ++k) es.emplace_back(map[var(k)], exp(k));
  std::sort(es.begin(), es.end());
  Monomial r;
  for (std::size_t k = 0; k < es.size(); ++k) {
    if (!r.d_.empty() && (r.d_.back() >> 16) == es[k].first) {
      uint32_t e = (r.d_.back() & 0xffffu) + es[k].second;
      r.d_.back() = (es[k].first << 16) | e;
      r.deg_ += es[k].second;
    } else {
      r.push(es[k].first, es[k].second);
    }
  }
  return r;
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.deg_ != b.deg_) return a.deg_ > b.deg_ ? 1 : -1;
  std::size_t n = std::min(a.d_.size(), b.d_.size());
  for (std::size_t k = 0; k < n; ++k) {
    Var va = a.var(k), vb = b.var(k);
    if (va != vb) return va < vb ? 1 : -1;
    uint32_t ea = a.exp(k), eb = b.exp(k);
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  if (a.d_.size() != b.d_.size()) return a.d_.size() > b.d_.size() ? 1 : -1;
  return 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto p : d_) h = (h ^ p) * 0x100000001b3ull;
  return h;
}

// -------------------------------------------------------------------- Poly

namespace {

bool term_greater(const Term& a, const Term& b) { return compare(a.m, b.m) > 0; }

}  // namespace

Poly::Poly(long long c) {
  if (c) t_.push_back(Term{Monomial(), Int(c)});
}

Poly::Poly(Int c) {
  if (!c.is_zero()) t_.push_back(Term{Monomial(), std::move(c)});
}

Poly Poly::var(Var v, uint32_t e) { return monomial(Monomial::of(v, e), Int(1)); }

Poly Poly::monomial(Monomial m, Int c) {
  Poly p;
  if (!c.is_zero()) p.t_.push_back(Term{std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Poly p;
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c += t.c;
      if (p.t_.back().c.is_zero()) p.t_.pop_back();
    } else if (!t.c.is_zero()) {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

Int Poly::constant_value() const {
  if (t_.empty()) return Int(0);
  if (!t_.back().m.is_one()) return Int(0);
  return t_.back().c;
}

uint32_t Poly::total_degree() const { return t_.empty() ? 0 : t_.front().m.degree(); }

uint32_t Poly::degree(Var v) const {
  uint32_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.m.exp_of(v));
  return d;
}

std::vector<Var> Poly::vars() const {
  std::vector<Var> vs;
  for (const auto& t : t_)
    for (std::size_t k = 0; k < t.m.size(); ++k) vs.push_back(t.m.var(k));
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

namespace {

Poly merge(const Poly& a, const Poly& b, bool subtract) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    int c = compare(x[i].m, y[j].m);
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(Term{y[j].m, subtract ? -y[j].c : y[j].c});
      ++j;
    } else {
      Int s = subtract ? x[i].c - y[j].c : x[i].c + y[j].c;
      if (!s.is_zero()) out.push_back(Term{x[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i) out.push_back(x[i]);
  for (; j < y.size(); ++j) out.push_back(Term{y[j].m, subtract ? -y[j].c : y[j].c});
  return Poly::from_sorted(std::move(out));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return merge(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  return merge(a, b, true);
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.size() == 1) return b.times(a.t_[0].m, a.t_[0].c);
  if (b.size() == 1) return a.times(b.t_[0].m, b.t_[0].c);
  const Poly& s = a.size() <= b.size() ? a : b;
  const Poly& l = a.size() <= b.size() ? b : a;
  std::unordered_map<Monomial, Int, MonomialHash> acc;
  acc.reserve(s.size() * l.size());
  for (const auto& ts : s.t_)
    for (const auto& tl : l.t_) {
      auto [it, fresh] = acc.try_emplace(ts.m * tl.m);
      if (fresh)
        it->second = ts.c * tl.c;
      else
        it->second += ts.c * tl.c;
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back(Term{m, std::move(c)});
  std::sort(out.begin(), out.end(), term_greater);
  return Poly::from_sorted(std::move(out));
}

Poly sum(const std::vector<Poly>& ps) {
  std::size_t total = 0, nonzero = 0;
  const Poly* last = nullptr;
  for (const auto& p : ps) {
    total += p.size();
    if (!p.is_zero()) {
      ++nonzero;
      last = &p;
    }
  }
  if (nonzero == 0) return Poly();
  if (nonzero == 1) return *last;
  if (nonzero == 2) {
    const Poly* first = nullptr;
    for (const auto& p : ps)
      if (!p.is_zero()) {
        if (!first)
          first = &p;
        else
          return *first + p;
      }
  }
  std::unordered_map<Monomial, Int, MonomialHash> acc;
  acc.reserve(total);
  for (const auto& p : ps)
    for (const auto& t : p.terms()) {
      auto [it, fresh] = acc.try_emplace(t.m);
      if (fresh)
        it->second = t.c;
      else
        it->second += t.c;
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back(Term{m, std::move(c)});
  std::sort(out.begin(), out.end(), term_greater);
  return Poly::from_sorted(std::move(out));
}

Poly Poly::scaled(const Int& c) const {
  if (c.is_zero()) return Poly();
  if (c.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.t_) t.c *= c;
  return r;
}

Poly Poly::times(const Monomial& m, const Int& c) const {
  if (c.is_zero()) return Poly();
  Poly r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back(Term{t.m * m, t.c * c});
  return r;
}

Poly Poly::divexact_scalar(const Int& c) const {
  if (c.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.t_) t.c = divexact(t.c, c);
  return r;
}

Poly Poly::divexact_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.t_) t.m = t.m / m;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t k = 0; k < a.t_.size(); ++k)
    if (a.t_[k].m != b.t_[k].m || a.t_[k].c != b.t_[k].c) return false;
  return true;
}

std::size_t Poly::hash() const {
  std::size_t h = t_.size();
  for (const auto& t : t_) h = h * 1000003u ^ (t.m.hash() + 31 * t.c.hash());
  return h;
}

Int Poly::content() const {
  Int g(0);
  for (const auto& t : t_) {
    g = gcd(g, t.c);
    if (g.is_one()) break;
  }
  return g;
}

Monomial Poly::monomial_content() const {
  if (t_.empty()) return Monomial();
  Monomial m = t_[0].m;
  for (std::size_t k = 1; k < t_.size() && !m.is_one(); ++k) m = min(m, t_[k].m);
  return m;
}

Poly Poly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& t : t_) {
    uint32_t e = t.m.exp_of(v);
    if (!e) continue;
    out.push_back(Term{t.m / Monomial::of(v), t.c * Int(static_cast<long long>(e))});
  }
  return from_terms(std::move(out));
}

std::vector<Poly> Poly::coefficients(Var v) const {
  std::vector<std::vector<Term>> parts(degree(v) + 1);
  for (const auto& t : t_) parts[t.m.exp_of(v)].push_back(Term{t.m.without(v), t.c});
  std::vector<Poly> out;
  out.reserve(parts.size());
  // Removing v from a sorted sequence of terms with a fixed v-exponent keeps
  // the order, because v contributes equally to every compared pair.
  for (auto& p : parts) out.push_back(from_sorted(std::move(p)));
  return out;
}

Poly Poly::from_coefficients(const std::vector<Poly>& c, Var v) {
  std::vector<Poly> parts;
  parts.reserve(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) parts.push_back(c[k].times(Monomial::of(v, static_cast<uint32_t>(k)), Int(1)));
  return sum(parts);
}

Poly Poly::renamed(const std::vector<Var>& map) const {
  std::vector<Term> out;
  out.reserve(t_.size());
  for (const auto& t : t_) out.push_back(Term{t.m.renamed(map), t.c});
  return from_terms(std::move(out));
}

// ------------------------------------------------------------ exact division

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return Poly();
  const auto& A = a.terms();
  const auto& B = b.terms();
  const Term& lb = B.front();
  if (B.size() == 1) {
    std::vector<Term> q;
    q.reserve(A.size());
    for (const auto& t : A) {
      if (!lb.m.divides(t.m) || !rem(t.c, lb.c).is_zero()) return std::nullopt;
      q.push_back(Term{t.m / lb.m, divexact(t.c, lb.c)});
    }
    return Poly::from_sorted(std::move(q));
  }
  if (a.total_degree() < b.total_degree()) return std::nullopt;

  // Heap division: quotient terms are produced in decreasing order; the heap
  // holds the next pending product Q[j] * B[k] for each quotient term j.
  struct Item {
    Monomial m;
    std::size_t j, k;
  };
  auto less = [](const Item& x, const Item& y) { return compare(x.m, y.m) < 0; };
  std::priority_queue<Item, std::vector<Item>, decltype(less)> heap(less);
  std::vector<Term> Q;
  std::size_t i = 0;
  while (i < A.size() || !heap.empty()) {
    Monomial m;
    if (heap.empty() || (i < A.size() && compare(A[i].m, heap.top().m) >= 0))
      m = A[i].m;
    else
      m = heap.top().m;
    Int c(0);
    if (i < A.size() && A[i].m == m) c = A[i++].c;
    while (!heap.empty() && heap.top().m == m) {
      Item it = heap.top();
      heap.pop();
      c -= Q[it.j].c * B[it.k].c;
      if (it.k + 1 < B.size()) heap.push(Item{Q[it.j].m * B[it.k + 1].m, it.j, it.k + 1});
    }
    if (c.is_zero()) continue;
    if (!lb.m.divides(m) || !rem(c, lb.c).is_zero()) return std::nullopt;
    Q.push_back(Term{m / lb.m, divexact(c, lb.c)});
    heap.push(Item{Q.back().m * B[1].m, Q.size() - 1, 1});
  }
  return Poly::from_sorted(std::move(Q));
}

}  // namespace jetreduce
