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

#include "jetreduce/io/parser.hpp"

#include <cctype>
#include <optional>

#include "jetreduce/errors.hpp"
#include "jetreduce/normal_form.hpp"

namespace jetreduce {

namespace {

// "x12" -> ("x", 12) when the tail is a positive decimal number.
std::optional<std::pair<std::string, int>> split_indexed(const std::string& id) {
  std::size_t k = id.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(id[k - 1]))) --k;
  if (k == 0 || k == id.size() || id[k] == '0' || id.size() - k > 6) return std::nullopt;
  return std::make_pair(id.substr(0, k), std::stoi(id.substr(k)));
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(const std::string& text, const Declarations& decl, int line, int column)
      : s_(text), decl_(decl), line0_(line), col0_(column) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(p_, msg); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    int line = line0_, col = col0_;
    for (std::size_t k = 0; k < pos && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(msg, line, col);
  }

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }

  bool accept(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek(char c) {
    skip();
    return p_ < s_.size() && s_[p_] == c;
  }

  Expr sum() {
    std::vector<Expr> terms{product()};
    for (;;) {
      if (accept('+'))
        terms.push_back(product());
      else if (accept('-'))
        terms.push_back(-product());
      else
        break;
    }
    return terms.size() == 1 ? terms[0] : Expr::sum(std::move(terms));
  }

  Expr product() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) {
        e = e * unary();
      } else if (peek('/')) {
        std::size_t at = p_;
        ++p_;
        Expr d = unary();
        if (d.is_const() && d.is_zero()) fail_at(at, "division by zero");
        e = e / d;
      } else {
        break;
      }
    }
    return e;
  }

  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr b = atom();
    if (accept('^')) {
      skip();
      bool paren = accept('(');
      bool neg = accept('-');
      skip();
      std::size_t at = p_;
      long e = integer_literal();
      if (paren) expect(')');
      if (neg) e = -e;
      if (e < 0 && b.is_const() && b.is_zero()) fail_at(at, "division by zero");
      b = Expr::pow(b, e);
    }
    return b;
  }

  long integer_literal() {
    skip();
    std::size_t start = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (start == p_) fail("expected an integer");
    if (p_ - start > 9) fail_at(start, "exponent too large");
    return std::stol(s_.substr(start, p_ - start));
  }

  std::string identifier() {
    skip();
    std::size_t start = p_;
    if (p_ >= s_.size() || !ident_start(s_[p_])) fail("expected an identifier");
    while (p_ < s_.size() && ident_char(s_[p_])) ++p_;
    return s_.substr(start, p_ - start);
  }

  std::vector<int> derivative_index() {
    std::vector<int> idx;
    if (p_ < s_.size() && s_[p_] == '{') {
      ++p_;
      do {
        idx.push_back(static_cast<int>(integer_literal()));
      } while (accept(','));
      expect('}');
      return idx;
    }
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) idx.push_back(s_[p_++] - '0');
    if (idx.empty()) fail("expected derivative indices after ';'");
    return idx;
  }

  Expr function_ref(const std::string& name, std::size_t at) {
    const FunctionDecl* f = decl_.function(name);
    if (!f) fail_at(at, "undeclared function");
    std::vector<int> idx;
    if (p_ < s_.size() && s_[p_] == ';') {
      ++p_;
      idx = derivative_index();
    }
    std::vector<Expr> args = f->args;
    if (peek('(')) {
      std::size_t open = p_;
      ++p_;
      args.clear();
      if (!peek(')')) do
          args.push_back(sum());
        while (accept(','));
      expect(')');
      if (args.size() != f->args.size())
        fail_at(open, "function '" + name + "' takes " + std::to_string(f->args.size()) + " arguments");
    }
    for (int q : idx)
      if (q < 1 || q > static_cast<int>(args.size())) fail_at(at, "derivative index out of range for '" + name + "'");
    return Expr(SymbolId::opaque(name, idx, args));
  }

  Expr atom() {
    skip();
    if (p_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[p_];
    if (c == '(') {
      ++p_;
      Expr e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      return Expr(mpq_class(mpz_class(s_.substr(start, p_ - start))));
    }
    if (!ident_start(c)) fail("unexpected '" + std::string(1, c) + "'");
    std::size_t at = p_;
    std::string id = identifier();

    if (decl_.function(id)) return function_ref(id, at);
    if (id == "D" && peek('(') && !decl_.has_name("D")) {
      ++p_;
      skip();
      std::size_t fat = p_;
      std::string fn = identifier();
      if (!decl_.function(fn)) throw UndeclaredSymbol("undeclared function '" + fn + "'");
      Expr e = function_ref(fn, fat);
      expect(')');
      return e;
    }
    if (const Expr* v = decl_.named(id)) return *v;
    if (decl_.is_parameter(id)) return Expr(SymbolId::parameter(id));
    if (decl_.is_dependent_family(id) && peek('[')) {
      ++p_;
      int a = static_cast<int>(integer_literal());
      expect(',');
      int i = static_cast<int>(integer_literal());
      expect(']');
      for (const auto& sg : decl_.signatures())
        if (sg.u == id && (a < 1 || a > sg.m || i < 1 || i > sg.n)) fail_at(at, "jet index out of range");
      return Expr(SymbolId::jet(id, a, i));
    }
    if (auto parts = split_indexed(id)) {
      const auto& [fam, k] = *parts;
      for (const auto& sg : decl_.signatures()) {
        if (sg.x == fam) {
          if (k > sg.n) fail_at(at, "independent index out of range");
          return Expr(SymbolId::independent(fam, k));
        }
        if (sg.u == fam) {
          if (k > sg.m) fail_at(at, "dependent index out of range");
          return Expr(SymbolId::dependent(fam, k));
        }
      }
    }
    throw UndeclaredSymbol("undeclared symbol '" + id + "'");
  }

  const std::string& s_;
  const Declarations& decl_;
  int line0_, col0_;
  std::size_t p_ = 0;
};

}  // namespace

void Declarations::add_signature(const Signature& sig) {
  for (const auto& s : sigs_) {
    if (s == sig) return;
    for (const auto& f : {sig.x, sig.u})
      if (f == s.x || f == s.u) throw SessionError("coordinate family '" + f + "' declared twice");
  }
  if (sig.x == sig.u) throw SessionError("independent and dependent families must differ");
  for (const auto& f : {sig.x, sig.u})
    if (has_name(f)) throw SessionError("family name '" + f + "' is already used");
  sigs_.push_back(sig);
}

const Signature& Declarations::primary() const {
  if (sigs_.empty()) throw SessionError("no signature declared");
  return sigs_.front();
}

bool Declarations::has_name(const std::string& name) const {
  return params_.count(name) || funcs_.count(name) || named_.count(name);
}

static void check_fresh(const Declarations& d, const std::string& name) {
  if (name.empty() || !ident_start(name[0]))
    throw SessionError("'" + name + "' is not an identifier");
  for (char c : name)
    if (!ident_char(c)) throw SessionError("'" + name + "' is not an identifier");
  if (d.has_name(name)) throw SessionError("duplicate name '" + name + "'");
  if (auto parts = split_indexed(name))
    if (d.is_independent_family(parts->first) || d.is_dependent_family(parts->first))
      throw SessionError("'" + name + "' collides with a coordinate");
  if (d.is_independent_family(name) || d.is_dependent_family(name))
    throw SessionError("'" + name + "' collides with a coordinate family");
}

void Declarations::add_parameter(const std::string& name) {
  if (params_.count(name)) return;
  check_fresh(*this, name);
  params_.insert(name);
}

void Declarations::add_function(const std::string& name, std::vector<Expr> args) {
  if (args.empty()) throw SessionError("function '" + name + "' needs at least one argument");
  check_fresh(*this, name);
  for (auto& a : args)
    if (a.kind() != ExprKind::Sym && a.kind() != ExprKind::Const) a = canonical(a);
  funcs_.emplace(name, FunctionDecl{name, std::move(args)});
}

void Declarations::add_named(const std::string& name, const Expr& value) {
  check_fresh(*this, name);
  named_.emplace(name, value);
}

const FunctionDecl* Declarations::function(const std::string& name) const {
  auto it = funcs_.find(name);
  return it == funcs_.end() ? nullptr : &it->second;
}

const Expr* Declarations::named(const std::string& name) const {
  auto it = named_.find(name);
  return it == named_.end() ? nullptr : &it->second;
}

bool Declarations::is_independent_family(const std::string& f) const {
  for (const auto& s : sigs_)
    if (s.x == f) return true;
  return false;
}

bool Declarations::is_dependent_family(const std::string& f) const {
  for (const auto& s : sigs_)
    if (s.u == f) return true;
  return false;
}

void Declarations::absorb(const Expr& e) {
  for (const auto& s : symbols(e, true)) {
    if (s.kind() == SymbolKind::Parameter && !params_.count(s.name())) {
      add_parameter(s.name());
    } else if (s.kind() == SymbolKind::Opaque && !funcs_.count(s.name())) {
      for (const auto& a : s.args()) absorb(a);
      add_function(s.name(), s.args());
    }
  }
}

Expr parse_expr(const std::string& text, const Declarations& decl, int line, int column) {
  return Parser(text, decl, line, column).parse();
}

std::string print_expr(const Expr& e, const Declarations& decl) {
  PrintOptions opts;
  opts.abbreviate = [&decl](const SymbolId& s) -> std::optional<std::string> {
    const FunctionDecl* f = decl.function(s.name());
    if (!f || f->args.size() != s.args().size()) return std::nullopt;
    for (std::size_t k = 0; k < f->args.size(); ++k)
      if (f->args[k] != s.args()[k]) return std::nullopt;
    std::string r = s.name();
    if (s.index().empty()) return r;
    bool wide = false;
    for (int p : s.index()) wide = wide || p > 9;
    r += wide ? ";{" : ";";
    for (std::size_t k = 0; k < s.index().size(); ++k) r += (wide && k ? "," : "") + std::to_string(s.index()[k]);
    if (wide) r += "}";
    return r;
  };
  return to_string(e, &opts);
}

}  // namespace jetreduce
