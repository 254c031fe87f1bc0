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

#include "jetreduce/normal_form.hpp"

#include <algorithm>
#include <map>

#include "jetreduce/errors.hpp"

namespace jetreduce {

Ring::Ring(const std::vector<SymbolId>& syms) {
  for (const auto& s : syms) index(s);
}

Var Ring::index(const SymbolId& s) {
  auto [it, fresh] = idx_.try_emplace(s, static_cast<Var>(syms_.size()));
  if (fresh) syms_.push_back(s);
  return it->second;
}

std::optional<Var> Ring::find(const SymbolId& s) const {
  auto it = idx_.find(s);
  if (it == idx_.end()) return std::nullopt;
  return it->second;
}

RatFun Ring::convert(const Expr& e) {
  std::unordered_map<const void*, RatFun> memo;
  return convert(e, memo);
}

RatFun Ring::convert(const Expr& e, std::unordered_map<const void*, RatFun>& memo) {
  if (e.kind() != ExprKind::Const && e.kind() != ExprKind::Sym) {
    auto it = memo.find(e.id());
    if (it != memo.end()) return it->second;
  }
  RatFun r;
  switch (e.kind()) {
    case ExprKind::Const:
      r = RatFun::fraction(Int(mpz_class(e.value().get_num())), Int(mpz_class(e.value().get_den())));
      return r;
    case ExprKind::Sym:
      return RatFun(Poly::var(index(e.symbol())));
    case ExprKind::Sum: {
      std::vector<RatFun> parts;
      parts.reserve(e.children().size());
      for (const auto& c : e.children()) parts.push_back(convert(c, memo));
      r = sum(parts);
      break;
    }
    case ExprKind::Product: {
      Poly poly(1);
      RatFun frac(1);
      for (const auto& c : e.children()) {
        RatFun x = convert(c, memo);
        if (x.is_zero()) {
          frac = RatFun();
          break;
        }
        if (x.is_polynomial())
          poly = poly * x.num();
        else
          frac = frac * x;
      }
      r = frac.is_zero() ? RatFun() : (frac * RatFun(poly));
      break;
    }
    case ExprKind::Pow: {
      RatFun b = convert(e.base(), memo);
      if (e.exponent() < 0 && b.is_zero())
        throw DivisionByZeroPolynomial("denominator " + to_string(e.base()) + " normalizes to zero");
      r = b.pow(e.exponent());
      break;
    }
  }
  memo.emplace(e.id(), r);
  return r;
}

Expr Ring::to_expr(const Poly& p) const {
  std::vector<Expr> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<Expr> fs;
    fs.push_back(Expr(mpq_class(t.c.to_mpz())));
    for (std::size_t k = 0; k < t.m.size(); ++k) fs.push_back(Expr::pow(Expr(syms_[t.m.var(k)]), t.m.exp(k)));
    terms.push_back(Expr::product(std::move(fs)));
  }
  return Expr::sum(std::move(terms));
}

Expr Ring::to_expr(const RatFun& r) const {
  if (r.den().is_constant()) {
    mpz_class d = r.den().constant_value().to_mpz();
    if (d == 1) return to_expr(r.num());
    std::vector<Expr> terms;
    for (const auto& t : r.num().terms()) {
      std::vector<Expr> fs;
      fs.push_back(Expr(mpq_class(t.c.to_mpz(), d)));
      for (std::size_t k = 0; k < t.m.size(); ++k) fs.push_back(Expr::pow(Expr(syms_[t.m.var(k)]), t.m.exp(k)));
      terms.push_back(Expr::product(std::move(fs)));
    }
    return Expr::sum(std::move(terms));
  }
  return Expr::product({to_expr(r.num()), Expr::pow(to_expr(r.den()), -1)});
}

bool operator==(const RationalNormalForm& a, const RationalNormalForm& b) {
  return a.vars == b.vars && a.num == b.num && a.den == b.den;
}

RationalNormalForm normalize(const Expr& e) {
  auto syms = symbols(e);
  Ring ring(syms);
  RatFun r = ring.convert(e);
  // Keep only the variables that survive cancellation.
  std::vector<Var> used = r.num().vars();
  auto dv = r.den().vars();
  used.insert(used.end(), dv.begin(), dv.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  RationalNormalForm nf;
  std::vector<Var> map(ring.size(), 0);
  for (std::size_t k = 0; k < used.size(); ++k) {
    map[used[k]] = static_cast<Var>(k);
    nf.vars.push_back(ring.symbol(used[k]));
  }
  bool identity = true;
  for (std::size_t k = 0; k < used.size(); ++k) identity = identity && used[k] == k;
  nf.num = identity ? r.num() : r.num().renamed(map);
  nf.den = identity ? r.den() : r.den().renamed(map);
  return nf;
}

Expr to_expr(const RationalNormalForm& nf) {
  Ring ring(nf.vars);
  return ring.to_expr(RatFun::make(nf.num, nf.den));
}

Expr canonical(const Expr& e) {
  auto syms = symbols(e);
  Ring ring(syms);
  return ring.to_expr(ring.convert(e));
}

bool is_zero(const Expr& e) {
  Ring ring;
  return ring.convert(e).is_zero();
}

bool equivalent(const Expr& a, const Expr& b) { return is_zero(a - b); }

RatFun compose(const Poly& p, const std::unordered_map<Var, RatFun>& images) {
  if (images.empty()) return RatFun(p);
  std::unordered_map<Monomial, std::vector<Term>, MonomialHash> groups;
  std::vector<Monomial> order;
  for (const auto& t : p.terms()) {
    Monomial kept, subst;
    for (std::size_t k = 0; k < t.m.size(); ++k) {
      Var v = t.m.var(k);
      if (images.count(v))
        subst = subst * Monomial::of(v, t.m.exp(k));
      else
        kept = kept * Monomial::of(v, t.m.exp(k));
    }
    auto [it, fresh] = groups.try_emplace(subst);
    if (fresh) order.push_back(subst);
    it->second.push_back(Term{kept, t.c});
  }
  std::map<std::pair<Var, uint32_t>, RatFun> powers;
  auto power = [&](Var v, uint32_t e) -> const RatFun& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, images.at(v).pow(e)).first->second;
  };
  std::vector<RatFun> parts;
  parts.reserve(order.size());
  for (const auto& m : order) {
    RatFun acc(Poly::from_terms(groups[m]));
    for (std::size_t k = 0; k < m.size(); ++k) acc = acc * power(m.var(k), m.exp(k));
    parts.push_back(std::move(acc));
  }
  return sum(parts);
}

RatFun compose(const RatFun& r, const std::unordered_map<Var, RatFun>& images) {
  RatFun n = compose(r.num(), images);
  if (r.is_polynomial()) return n;
  RatFun d = compose(r.den(), images);
  if (d.is_zero()) throw DivisionByZeroPolynomial("denominator vanishes after substitution");
  return n / d;
}

}  // namespace jetreduce
