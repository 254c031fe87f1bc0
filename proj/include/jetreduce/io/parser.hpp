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

#ifndef JETREDUCE_IO_PARSER_HPP
#define JETREDUCE_IO_PARSER_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "jetreduce/calculus.hpp"

namespace jetreduce {

struct FunctionDecl {
  std::string name;
  std::vector<Expr> args;  // default arguments
};

// Symbols an expression may reference.
//
//   x1, u2        independent / dependent of a declared family
//   u[1,2]        jet of dependent 1 in direction 2
//   f, f;12       declared function (or derivative) at its default arguments
//   f;12(w1,w2)   the same at explicit arguments; f;{10,12}(..) for indices > 9
//   D(f;1)        explicit spelling of f;1
//   a1            declared parameter, or a named expression
class Declarations {
 public:
  Declarations() = default;
  explicit Declarations(const Signature& sig) { add_signature(sig); }

  // Throws SessionError on conflicting family names.
  void add_signature(const Signature& sig);
  void add_parameter(const std::string& name);
  void add_function(const std::string& name, std::vector<Expr> args);
  void add_named(const std::string& name, const Expr& value);

  const std::vector<Signature>& signatures() const { return sigs_; }
  const Signature& primary() const;
  bool has_name(const std::string& name) const;
  bool is_parameter(const std::string& name) const { return params_.count(name) > 0; }
  const FunctionDecl* function(const std::string& name) const;
  const Expr* named(const std::string& name) const;
  bool is_independent_family(const std::string& f) const;
  bool is_dependent_family(const std::string& f) const;
  const std::set<std::string>& parameters() const { return params_; }
  const std::map<std::string, FunctionDecl>& functions() const { return funcs_; }

  // Declares every parameter and opaque function occurring in e (arguments
  // of first occurrence become the defaults).
  void absorb(const Expr& e);

 private:
  std::vector<Signature> sigs_;
  std::set<std::string> params_;
  std::map<std::string, FunctionDecl> funcs_;
  std::map<std::string, Expr> named_;
};

// Throws SyntaxError (1-based line/column relative to the text, shifted by
// the given origin) and UndeclaredSymbol.
Expr parse_expr(const std::string& text, const Declarations& decl, int line = 1, int column = 1);

// Printing with f;I abbreviated when the arguments are the declared defaults.
std::string print_expr(const Expr& e, const Declarations& decl);

}  // namespace jetreduce

#endif  // JETREDUCE_IO_PARSER_HPP
