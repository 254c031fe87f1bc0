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

#include "jetreduce/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "jetreduce/normal_form.hpp"

namespace jetreduce {

// ------------------------------------------------------------------ symbols

struct SymbolId::Data {
  SymbolKind kind;
  std::string name;
  int a = 0, i = 0;
  std::vector<int> index;
  std::vector<Expr> args;
  std::string key;
  std::size_t hash = 0;
};

int natural_compare(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      std::string na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
      if (na.size() != nb.size()) return na.size() < nb.size() ? -1 : 1;
      if (int c = na.compare(nb)) return c < 0 ? -1 : 1;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j] ? -1 : 1;
      ++i;
      ++j;
    }
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
}

SymbolId SymbolId::parameter(const std::string& name) {
  auto d = std::make_shared<Data>();
  d->kind = SymbolKind::Parameter;
  d->name = name;
  d->key = "p:" + name;
  d->hash = std::hash<std::string>()(d->key);
  SymbolId s;
  s.d_ = d;
  return s;
}

SymbolId SymbolId::independent(const std::string& family, int i) {
  auto d = std::make_shared<Data>();
  d->kind = SymbolKind::Independent;
  d->name = family;
  d->i = i;
  d->key = "x:" + family + ":" + std::to_string(i);
  d->hash = std::hash<std::string>()(d->key);
  SymbolId s;
  s.d_ = d;
  return s;
}

SymbolId SymbolId::dependent(const std::string& family, int a) {
  auto d = std::make_shared<Data>();
  d->kind = SymbolKind::Dependent;
  d->name = family;
  d->a = a;
  d->key = "u:" + family + ":" + std::to_string(a);
  d->hash = std::hash<std::string>()(d->key);
  SymbolId s;
  s.d_ = d;
  return s;
}

SymbolId SymbolId::jet(const std::string& family, int a, int i) {
  auto d = std::make_shared<Data>();
  d->kind = SymbolKind::Jet;
  d->name = family;
  d->a = a;
  d->i = i;
  d->key = "j:" + family + ":" + std::to_string(a) + ":" + std::to_string(i);
  d->hash = std::hash<std::string>()(d->key);
  SymbolId s;
  s.d_ = d;
  return s;
}

SymbolId SymbolId::opaque(const std::string& name, std::vector<int> index, std::vector<Expr> args) {
  if (args.empty()) throw std::invalid_argument("opaque function '" + name + "' needs at least one argument");
  std::sort(index.begin(), index.end());
  for (int p : index)
    if (p < 1 || p > static_cast<int>(args.size()))
      throw std::invalid_argument("derivative index out of range for '" + name + "'");
  for (auto& e : args)
    if (e.kind() != ExprKind::Sym && e.kind() != ExprKind::Const) e = canonical(e);
  auto d = std::make_shared<Data>();
  d->kind = SymbolKind::Opaque;
  d->name = name;
  d->index = std::move(index);
  d->args = std::move(args);
  std::string k = "f:" + name + ":";
  for (std::size_t t = 0; t < d->index.size(); ++t) k += (t ? "," : "") + std::to_string(d->index[t]);
  k += "(";
  for (std::size_t t = 0; t < d->args.size(); ++t) {
    if (t) k += ",";
    const Expr& e = d->args[t];
    k += e.kind() == ExprKind::Sym ? e.symbol().key() : to_string(e);
  }
  k += ")";
  d->key = std::move(k);
  d->hash = std::hash<std::string>()(d->key);
  SymbolId s;
  s.d_ = d;
  return s;
}

SymbolKind SymbolId::kind() const { return d_->kind; }
const std::string& SymbolId::name() const { return d_->name; }
int SymbolId::a() const { return d_->a; }
int SymbolId::i() const { return d_->i; }
const std::vector<int>& SymbolId::index() const { return d_->index; }
const std::vector<Expr>& SymbolId::args() const { return d_->args; }
const std::string& SymbolId::key() const { return d_->key; }
std::size_t SymbolId::hash() const { return d_ ? d_->hash : 0; }

SymbolId SymbolId::opaque_derivative(int p) const {
  auto idx = d_->index;
  idx.push_back(p);
  return opaque(d_->name, std::move(idx), d_->args);
}

SymbolId SymbolId::with_args(std::vector<Expr> args) const { return opaque(d_->name, d_->index, std::move(args)); }

bool operator==(const SymbolId& a, const SymbolId& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return a.d_->hash == b.d_->hash && a.d_->key == b.d_->key;
}

int compare(const SymbolId& a, const SymbolId& b) {
  if (a.d_ == b.d_) return 0;
  const auto& x = *a.d_;
  const auto& y = *b.d_;
  if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind) ? -1 : 1;
  if (int c = natural_compare(x.name, y.name)) return c;
  switch (x.kind) {
    case SymbolKind::Parameter:
      return 0;
    case SymbolKind::Independent:
      return (x.i > y.i) - (x.i < y.i);
    case SymbolKind::Dependent:
      return (x.a > y.a) - (x.a < y.a);
    case SymbolKind::Jet:
      if (x.a != y.a) return x.a < y.a ? -1 : 1;
      return (x.i > y.i) - (x.i < y.i);
    case SymbolKind::Opaque:
      if (x.index.size() != y.index.size()) return x.index.size() < y.index.size() ? -1 : 1;
      if (x.index != y.index) return x.index < y.index ? -1 : 1;
      if (x.key == y.key) return 0;
      return x.key < y.key ? -1 : 1;
  }
  return 0;
}

// --------------------------------------------------------------- expression

struct Expr::Node {
  ExprKind kind = ExprKind::Const;
  mpq_class value;
  SymbolId sym;
  std::vector<Expr> ch;
  long exp = 0;
  std::size_t hash = 0;
  std::size_t count = 1;
};

namespace {

std::size_t mpq_hash(const mpq_class& q) {
  std::size_t h = mpz_get_ui(q.get_num_mpz_t()) * 1000003u ^ mpz_get_ui(q.get_den_mpz_t());
  return h ^ static_cast<std::size_t>(mpq_sgn(q.get_mpq_t()) + 7);
}

}  // namespace

Expr::Expr() : Expr(0LL) {}

Expr::Expr(long long c) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Const;
  n->value = mpq_class(static_cast<long>(c));
  n->hash = mpq_hash(n->value);
  n_ = std::move(n);
}

Expr::Expr(const mpq_class& c) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Const;
  n->value = c;
  n->value.canonicalize();
  n->hash = mpq_hash(n->value);
  n_ = std::move(n);
}

Expr::Expr(const SymbolId& s) {
  if (!s.valid()) throw std::invalid_argument("invalid symbol");
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Sym;
  n->sym = s;
  n->hash = s.hash() * 0x9e3779b97f4a7c15ull + 1;
  n_ = std::move(n);
}

Expr Expr::rational(long long num, long long den) {
  mpq_class q(static_cast<long>(num), static_cast<unsigned long>(den < 0 ? -den : den));
  if (den < 0) q = -q;
  q.canonicalize();
  return Expr(q);
}

ExprKind Expr::kind() const { return n_->kind; }
const mpq_class& Expr::value() const { return n_->value; }
const SymbolId& Expr::symbol() const { return n_->sym; }
const std::vector<Expr>& Expr::children() const { return n_->ch; }
const Expr& Expr::base() const { return n_->ch.front(); }
long Expr::exponent() const { return n_->exp; }
bool Expr::is_zero() const { return n_->kind == ExprKind::Const && sgn(n_->value) == 0; }
bool Expr::is_one() const { return n_->kind == ExprKind::Const && n_->value == 1; }
std::size_t Expr::node_count() const { return n_->count; }
std::size_t Expr::hash() const { return n_->hash; }

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  mpq_class c(0);
  for (auto& t : terms) {
    if (t.kind() == ExprKind::Sum) {
      for (const auto& s : t.children()) {
        if (s.is_const())
          c += s.value();
        else
          flat.push_back(s);
      }
    } else if (t.is_const()) {
      c += t.value();
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (sgn(c) != 0) flat.push_back(Expr(c));
  if (flat.empty()) return Expr(0LL);
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Sum;
  n->hash = 0x51ed27;
  for (const auto& t : flat) {
    n->hash = n->hash * 31 + t.hash();
    n->count += t.node_count();
  }
  n->ch = std::move(flat);
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  mpq_class c(1);
  for (auto& t : factors) {
    if (t.kind() == ExprKind::Product) {
      for (const auto& s : t.children()) {
        if (s.is_const())
          c *= s.value();
        else
          flat.push_back(s);
      }
    } else if (t.is_const()) {
      c *= t.value();
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (sgn(c) == 0) return Expr(0LL);
  if (c != 1) flat.insert(flat.begin(), Expr(c));
  if (flat.empty()) return Expr(1LL);
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Product;
  n->hash = 0x2545f4;
  for (const auto& t : flat) {
    n->hash = n->hash * 37 + t.hash();
    n->count += t.node_count();
  }
  n->ch = std::move(flat);
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::pow(const Expr& base, long exponent) {
  if (exponent == 0) return Expr(1LL);
  if (exponent == 1) return base;
  if (base.is_const()) {
    const mpq_class& v = base.value();
    if (sgn(v) != 0 || exponent > 0) {
      mpq_class r(1);
      mpq_class b = exponent > 0 ? v : mpq_class(1) / v;
      for (long k = 0; k < std::labs(exponent); ++k) r *= b;
      return Expr(r);
    }
  }
  if (base.kind() == ExprKind::Pow) return pow(base.base(), base.exponent() * exponent);
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Pow;
  n->ch.push_back(base);
  n->exp = exponent;
  n->hash = base.hash() * 41 + static_cast<std::size_t>(exponent) + 0x7f4a;
  n->count = 1 + base.node_count();
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.n_ == b.n_) return true;
  const auto& x = *a.n_;
  const auto& y = *b.n_;
  if (x.kind != y.kind || x.hash != y.hash) return false;
  switch (x.kind) {
    case ExprKind::Const:
      return x.value == y.value;
    case ExprKind::Sym:
      return x.sym == y.sym;
    case ExprKind::Pow:
      return x.exp == y.exp && x.ch[0] == y.ch[0];
    default:
      return x.ch == y.ch;
  }
}

Expr Expr::operator-() const { return product({Expr(-1LL), *this}); }
Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::product({a, Expr::pow(b, -1)}); }

// ----------------------------------------------------------------- printing

namespace {

std::string print(const Expr& e, int level, const PrintOptions* opts);

std::string const_str(const mpq_class& q) { return q.get_str(); }

bool negative_leading(const Expr& e) {
  if (e.is_const()) return sgn(e.value()) < 0;
  if (e.kind() == ExprKind::Product) return e.children()[0].is_const() && sgn(e.children()[0].value()) < 0;
  return false;
}

std::string print_product(const std::vector<Expr>& fs, const PrintOptions* opts) {
  mpq_class c(1);
  std::vector<std::string> num, den;
  std::size_t den_items = 0;
  for (const auto& f : fs) {
    if (f.is_const()) {
      c *= f.value();
    } else if (f.kind() == ExprKind::Pow && f.exponent() < 0) {
      ++den_items;
      den.push_back(f.exponent() == -1 ? print(f.base(), 2, opts)
                                        : print(f.base(), 2, opts) + "^" + std::to_string(-f.exponent()));
    } else {
      num.push_back(print(f, 2, opts));
    }
  }
  std::string s;
  if (sgn(c) < 0) {
    s = "-";
    c = -c;
  }
  mpz_class cn = c.get_num(), cd = c.get_den();
  if (cn != 1 || num.empty()) num.insert(num.begin(), cn.get_str());
  if (cd != 1) {
    den.insert(den.begin(), cd.get_str());
    ++den_items;
  }
  for (std::size_t k = 0; k < num.size(); ++k) s += (k ? "*" : "") + num[k];
  if (!den.empty()) {
    s += "/";
    if (den_items == 1) {
      s += den[0];
    } else {
      s += "(";
      for (std::size_t k = 0; k < den.size(); ++k) s += (k ? "*" : "") + den[k];
      s += ")";
    }
  }
  return s;
}

// level 0: top/sum, 1: product factor, 2: power base / atom.
std::string print(const Expr& e, int level, const PrintOptions* opts) {
  switch (e.kind()) {
    case ExprKind::Const: {
      const mpq_class& q = e.value();
      bool atomic = sgn(q) >= 0 && q.get_den() == 1;
      std::string s = const_str(q);
      return (level >= 1 && !atomic) ? "(" + s + ")" : s;
    }
    case ExprKind::Sym:
      return to_string(e.symbol(), opts);
    case ExprKind::Sum: {
      std::string s;
      bool first = true;
      for (const auto& t : e.children()) {
        if (first) {
          s = print(t, 0, opts);
          first = false;
        } else if (negative_leading(t)) {
          Expr neg = -t;
          s += " - " + print(neg, neg.kind() == ExprKind::Sum ? 1 : 0, opts);
        } else {
          s += " + " + print(t, 0, opts);
        }
      }
      return level >= 1 ? "(" + s + ")" : s;
    }
    case ExprKind::Product: {
      std::string s = print_product(e.children(), opts);
      return level >= 2 ? "(" + s + ")" : s;
    }
    case ExprKind::Pow: {
      if (e.exponent() < 0) {
        std::string s = print_product({e}, opts);
        return level >= 2 ? "(" + s + ")" : s;
      }
      return print(e.base(), 2, opts) + "^" + std::to_string(e.exponent());
    }
  }
  return "";
}

}  // namespace

std::string to_string(const SymbolId& s, const PrintOptions* opts) {
  switch (s.kind()) {
    case SymbolKind::Parameter:
      return s.name();
    case SymbolKind::Independent:
      return s.name() + std::to_string(s.i());
    case SymbolKind::Dependent:
      return s.name() + std::to_string(s.a());
    case SymbolKind::Jet:
      return s.name() + "[" + std::to_string(s.a()) + "," + std::to_string(s.i()) + "]";
    case SymbolKind::Opaque: {
      if (opts && opts->abbreviate)
        if (auto r = opts->abbreviate(s)) return *r;
      std::string r = s.name();
      if (!s.index().empty()) {
        bool wide = std::any_of(s.index().begin(), s.index().end(), [](int p) { return p > 9; });
        r += wide ? ";{" : ";";
        for (std::size_t k = 0; k < s.index().size(); ++k)
          r += (wide && k ? "," : "") + std::to_string(s.index()[k]);
        if (wide) r += "}";
      }
      r += "(";
      for (std::size_t k = 0; k < s.args().size(); ++k) r += (k ? "," : "") + to_string(s.args()[k], opts);
      return r + ")";
    }
  }
  return "";
}

std::string to_string(const Expr& e, const PrintOptions* opts) { return print(e, 0, opts); }

std::vector<SymbolId> symbols(const Expr& e, bool deep) {
  std::vector<SymbolId> out;
  std::unordered_set<const void*> seen;
  std::unordered_set<std::string> keys;
  std::function<void(const Expr&)> walk = [&](const Expr& x) {
    if (!seen.insert(x.id()).second) return;
    switch (x.kind()) {
      case ExprKind::Const:
        return;
      case ExprKind::Sym:
        if (keys.insert(x.symbol().key()).second) out.push_back(x.symbol());
        if (deep && x.symbol().kind() == SymbolKind::Opaque)
          for (const auto& a : x.symbol().args()) walk(a);
        return;
      default:
        for (const auto& c : x.children()) walk(c);
    }
  };
  walk(e);
  std::sort(out.begin(), out.end());
  return out;
}

mpq_class evaluate(const Expr& e, const std::function<mpq_class(const SymbolId&)>& value) {
  switch (e.kind()) {
    case ExprKind::Const:
      return e.value();
    case ExprKind::Sym:
      return value(e.symbol());
    case ExprKind::Sum: {
      mpq_class s(0);
      for (const auto& c : e.children()) s += evaluate(c, value);
      return s;
    }
    case ExprKind::Product: {
      mpq_class s(1);
      for (const auto& c : e.children()) s *= evaluate(c, value);
      return s;
    }
    case ExprKind::Pow: {
      mpq_class b = evaluate(e.base(), value);
      long ex = e.exponent();
      if (ex < 0) {
        if (sgn(b) == 0) throw std::domain_error("evaluation at a pole");
        b = 1 / b;
        ex = -ex;
      }
      mpq_class r(1);
      for (long k = 0; k < ex; ++k) r *= b;
      return r;
    }
  }
  return 0;
}

}  // namespace jetreduce
