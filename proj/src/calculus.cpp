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

#include "jetreduce/calculus.hpp"

#include <stdexcept>

#include "jetreduce/errors.hpp"

namespace jetreduce {

namespace {

Expr diff_memo(const Expr& e, const SymbolId& s, std::unordered_map<const void*, Expr>& memo) {
  switch (e.kind()) {
    case ExprKind::Const:
      return Expr(0LL);
    case ExprKind::Sym: {
      const SymbolId& t = e.symbol();
      if (t == s) return Expr(1LL);
      if (t.kind() != SymbolKind::Opaque) return Expr(0LL);
      std::vector<Expr> terms;
      const auto& args = t.args();
      for (std::size_t p = 0; p < args.size(); ++p) {
        Expr da = diff_memo(args[p], s, memo);
        if (da.is_zero()) continue;
        terms.push_back(Expr(t.opaque_derivative(static_cast<int>(p + 1))) * da);
      }
      return Expr::sum(std::move(terms));
    }
    default:
      break;
  }
  auto it = memo.find(e.id());
  if (it != memo.end()) return it->second;
  Expr r;
  switch (e.kind()) {
    case ExprKind::Sum: {
      std::vector<Expr> terms;
      for (const auto& c : e.children()) {
        Expr d = diff_memo(c, s, memo);
        if (!d.is_zero()) terms.push_back(std::move(d));
      }
      r = Expr::sum(std::move(terms));
      break;
    }
    case ExprKind::Product: {
      const auto& ch = e.children();
      std::vector<Expr> terms;
      for (std::size_t k = 0; k < ch.size(); ++k) {
        Expr d = diff_memo(ch[k], s, memo);
        if (d.is_zero()) continue;
        std::vector<Expr> fs;
        fs.reserve(ch.size());
        for (std::size_t j = 0; j < ch.size(); ++j) fs.push_back(j == k ? d : ch[j]);
        terms.push_back(Expr::product(std::move(fs)));
      }
      r = Expr::sum(std::move(terms));
      break;
    }
    case ExprKind::Pow: {
      Expr d = diff_memo(e.base(), s, memo);
      if (d.is_zero()) {
        r = Expr(0LL);
      } else {
        long n = e.exponent();
        r = Expr::product({Expr(static_cast<long long>(n)), Expr::pow(e.base(), n - 1), d});
      }
      break;
    }
    default:
      break;
  }
  memo.emplace(e.id(), r);
  return r;
}

Expr subst_memo(const Expr& e, const Bindings& b, SubstituteOptions opts, std::unordered_map<const void*, Expr>& memo) {
  switch (e.kind()) {
    case ExprKind::Const:
      return e;
    case ExprKind::Sym: {
      auto it = b.find(e.symbol());
      if (it != b.end()) return it->second;
      if (opts.into_opaque_args && e.symbol().kind() == SymbolKind::Opaque) {
        bool changed = false;
        std::vector<Expr> args;
        for (const auto& a : e.symbol().args()) {
          args.push_back(subst_memo(a, b, opts, memo));
          changed = changed || !(args.back() == a);
        }
        if (changed) return Expr(e.symbol().with_args(std::move(args)));
      }
      return e;
    }
    default:
      break;
  }
  auto it = memo.find(e.id());
  if (it != memo.end()) return it->second;
  Expr r;
  if (e.kind() == ExprKind::Pow) {
    Expr nb = subst_memo(e.base(), b, opts, memo);
    r = nb == e.base() ? e : Expr::pow(nb, e.exponent());
  } else {
    bool changed = false;
    std::vector<Expr> ch;
    ch.reserve(e.children().size());
    for (const auto& c : e.children()) {
      ch.push_back(subst_memo(c, b, opts, memo));
      changed = changed || !(ch.back().id() == c.id());
    }
    if (!changed)
      r = e;
    else
      r = e.kind() == ExprKind::Sum ? Expr::sum(std::move(ch)) : Expr::product(std::move(ch));
  }
  memo.emplace(e.id(), r);
  return r;
}

}  // namespace

Expr diff(const Expr& e, const SymbolId& s) {
  std::unordered_map<const void*, Expr> memo;
  return diff_memo(e, s, memo);
}

bool mentions(const Expr& e, SymbolKind kind, const std::string& family) {
  for (const auto& s : symbols(e, true))
    if (s.kind() == kind && (family.empty() || s.name() == family)) return true;
  return false;
}

Expr total_derivative(const Expr& e, int i, const Signature& sig) {
  if (mentions(e, SymbolKind::Jet)) throw InputContainsJets("total derivative of an expression containing jets");
  std::vector<Expr> terms;
  terms.push_back(diff(e, sig.indep(i)));
  for (int a = 1; a <= sig.m; ++a) {
    Expr d = diff(e, sig.dep(a));
    if (!d.is_zero()) terms.push_back(Expr(sig.jet(a, i)) * d);
  }
  return Expr::sum(std::move(terms));
}

Expr substitute(const Expr& e, const Bindings& bindings, SubstituteOptions opts) {
  if (bindings.empty()) return e;
  std::unordered_map<const void*, Expr> memo;
  return subst_memo(e, bindings, opts, memo);
}

Expr instantiate(const Expr& e, const std::string& name, const std::vector<SymbolId>& vars, const Expr& value) {
  Bindings b;
  for (const SymbolId& s : symbols(e, true)) {
    if (s.kind() != SymbolKind::Opaque || s.name() != name) continue;
    if (s.args().size() != vars.size())
      throw std::invalid_argument("instantiate: arity mismatch for " + to_string(s));
    Expr d = value;
    for (int p : s.index()) d = diff(d, vars.at(p - 1));
    Bindings at;
    for (std::size_t k = 0; k < vars.size(); ++k) at.emplace(vars[k], s.args()[k]);
    b.emplace(s, substitute(d, at));
  }
  return b.empty() ? e : substitute(e, b);
}

}  // namespace jetreduce
