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

#ifndef JETREDUCE_EXPR_HPP
#define JETREDUCE_EXPR_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace jetreduce {

class Expr;

// Kinds listed in the global symbol order.
enum class SymbolKind { Parameter = 0, Independent = 1, Dependent = 2, Jet = 3, Opaque = 4 };

// Identity of an indeterminate. Independent, dependent and jet symbols carry
// a family name ("x", "u", "z", "w", ...) so that source and target
// coordinates can coexist. Opaque symbols stand for the derivative
// f;I(args) of an unspecified function; I is sorted ascending and refers to
// argument positions (1-based).
class SymbolId {
 public:
  SymbolId() = default;
  static SymbolId parameter(const std::string& name);
  static SymbolId independent(const std::string& family, int i);
  static SymbolId dependent(const std::string& family, int a);
  static SymbolId jet(const std::string& family, int a, int i);
  static SymbolId opaque(const std::string& name, std::vector<int> index, std::vector<Expr> args);

  bool valid() const { return static_cast<bool>(d_); }
  SymbolKind kind() const;
  const std::string& name() const;  // parameter / function name, or family
  int a() const;                    // dependent index A (dependent, jet)
  int i() const;                    // independent index i (independent, jet)
  const std::vector<int>& index() const;
  const std::vector<Expr>& args() const;
  const std::string& key() const;
  std::size_t hash() const;

  // Opaque symbol differentiated once more with respect to argument p.
  SymbolId opaque_derivative(int p) const;
  SymbolId with_args(std::vector<Expr> args) const;

  friend bool operator==(const SymbolId& a, const SymbolId& b);
  friend bool operator!=(const SymbolId& a, const SymbolId& b) { return !(a == b); }
  // Global order: Parameter < Independent < Dependent < Jet < Opaque.
  friend int compare(const SymbolId& a, const SymbolId& b);
  friend bool operator<(const SymbolId& a, const SymbolId& b) { return compare(a, b) < 0; }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

struct SymbolHash {
  std::size_t operator()(const SymbolId& s) const { return s.hash(); }
};

// Natural comparison of identifiers: digit runs compare numerically.
int natural_compare(const std::string& a, const std::string& b);

enum class ExprKind { Const, Sym, Sum, Product, Pow };

// Immutable expression tree with shared subtrees.
class Expr {
 public:
  Expr();
  Expr(long long c);  // NOLINT(google-explicit-constructor)
  Expr(int c) : Expr(static_cast<long long>(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Expr(const mpq_class& c);
  Expr(const SymbolId& s);  // NOLINT(google-explicit-constructor)

  static Expr rational(long long num, long long den);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr pow(const Expr& base, long exponent);

  ExprKind kind() const;
  const mpq_class& value() const;
  const SymbolId& symbol() const;
  const std::vector<Expr>& children() const;
  const Expr& base() const;
  long exponent() const;

  bool is_const() const { return kind() == ExprKind::Const; }
  bool is_zero() const;
  bool is_one() const;
  std::size_t node_count() const;
  std::size_t hash() const;
  const void* id() const { return n_.get(); }

  friend bool operator==(const Expr& a, const Expr& b);  // structural
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  Expr operator-() const;
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct ExprHash {
  std::size_t operator()(const Expr& e) const { return e.hash(); }
};

// Printing. An abbreviation hook may return the short spelling of an opaque
// symbol (e.g. "f;12" when the arguments are the declared defaults).
struct PrintOptions {
  std::function<std::optional<std::string>(const SymbolId&)> abbreviate;
};
std::string to_string(const SymbolId& s, const PrintOptions* opts = nullptr);
std::string to_string(const Expr& e, const PrintOptions* opts = nullptr);

// Symbols occurring in e, including those inside opaque arguments when deep.
std::vector<SymbolId> symbols(const Expr& e, bool deep = false);

// Exact evaluation; opaque symbols are looked up as a whole.
mpq_class evaluate(const Expr& e, const std::function<mpq_class(const SymbolId&)>& value);

}  // namespace jetreduce

#endif  // JETREDUCE_EXPR_HPP
