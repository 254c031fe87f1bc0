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

#ifndef JETREDUCE_CALCULUS_HPP
#define JETREDUCE_CALCULUS_HPP

#include <string>
#include <unordered_map>

#include "jetreduce/expr.hpp"

namespace jetreduce {

// Jet-space signature: n independent and m dependent variables with their
// family names.
struct Signature {
  int n = 0;
  int m = 0;
  std::string x = "x";
  std::string u = "u";

  SymbolId indep(int i) const { return SymbolId::independent(x, i); }
  SymbolId dep(int a) const { return SymbolId::dependent(u, a); }
  SymbolId jet(int a, int i) const { return SymbolId::jet(u, a, i); }
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.n == b.n && a.m == b.m && a.x == b.x && a.u == b.u;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

using Bindings = std::unordered_map<SymbolId, Expr, SymbolHash>;

// Formal partial derivative; opaque symbols follow the chain rule through
// their arguments.
Expr diff(const Expr& e, const SymbolId& s);

// D_i e = de/dx_i + sum_A u_{A,i} de/du_A. Throws InputContainsJets.
Expr total_derivative(const Expr& e, int i, const Signature& sig);

struct SubstituteOptions {
  bool into_opaque_args = true;
};

// Simultaneous replacement of bound symbols.
Expr substitute(const Expr& e, const Bindings& bindings, SubstituteOptions opts = {});

bool mentions(const Expr& e, SymbolKind kind, const std::string& family = "");

// Replaces every occurrence of the opaque function `name` (and its formal
// derivatives) by value, a closed form in vars, evaluated at the arguments.
Expr instantiate(const Expr& e, const std::string& name, const std::vector<SymbolId>& vars, const Expr& value);

}  // namespace jetreduce

#endif  // JETREDUCE_CALCULUS_HPP
