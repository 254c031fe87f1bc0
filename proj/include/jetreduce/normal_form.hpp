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

#ifndef JETREDUCE_NORMAL_FORM_HPP
#define JETREDUCE_NORMAL_FORM_HPP

#include <unordered_map>
#include <vector>

#include "jetreduce/expr.hpp"
#include "jetreduce/ratfun.hpp"

namespace jetreduce {

// Variable table for one computation. Variables are appended on demand, so
// the order inside a ring follows insertion; public normal forms are always
// rebuilt over the global symbol order.
class Ring {
 public:
  Ring() = default;
  explicit Ring(const std::vector<SymbolId>& syms);

  Var index(const SymbolId& s);
  std::optional<Var> find(const SymbolId& s) const;
  const SymbolId& symbol(Var v) const { return syms_[v]; }
  std::size_t size() const { return syms_.size(); }

  // Throws DivisionByZeroPolynomial for a vanishing denominator.
  RatFun convert(const Expr& e);
  Expr to_expr(const Poly& p) const;
  Expr to_expr(const RatFun& r) const;

 private:
  RatFun convert(const Expr& e, std::unordered_map<const void*, RatFun>& memo);
  std::vector<SymbolId> syms_;
  std::unordered_map<SymbolId, Var, SymbolHash> idx_;
};

// Canonical form over exactly the symbols that occur, in global order.
// Coefficients are integers; the rational content is absorbed so that
// gcd(num, den) = 1 over Z[vars] and lc(den) > 0.
struct RationalNormalForm {
  std::vector<SymbolId> vars;
  Poly num;
  Poly den;

  bool is_zero() const { return num.is_zero(); }
  friend bool operator==(const RationalNormalForm& a, const RationalNormalForm& b);
  friend bool operator!=(const RationalNormalForm& a, const RationalNormalForm& b) { return !(a == b); }
};

RationalNormalForm normalize(const Expr& e);
Expr to_expr(const RationalNormalForm& nf);
// Expanded canonical expression equal to e.
Expr canonical(const Expr& e);
bool is_zero(const Expr& e);
bool equivalent(const Expr& a, const Expr& b);

// p with variables replaced by images; variables without an image stay.
RatFun compose(const Poly& p, const std::unordered_map<Var, RatFun>& images);
RatFun compose(const RatFun& r, const std::unordered_map<Var, RatFun>& images);

}  // namespace jetreduce

#endif  // JETREDUCE_NORMAL_FORM_HPP
