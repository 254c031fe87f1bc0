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

#ifndef JETREDUCE_IO_SESSION_HPP
#define JETREDUCE_IO_SESSION_HPP

#include <map>
#include <string>
#include <vector>

#include "jetreduce/canonical.hpp"
#include "jetreduce/io/parser.hpp"
#include "jetreduce/monge_ampere.hpp"

namespace jetreduce {

// Plain-text session: one statement per line, '#' starts a comment, and a
// line continues while brackets are open or it ends in an operator or ','.
//
//   signature 2 2 [x u]
//   param a1 a2
//   function f(u1,u2) k1(u1,u2)
//   let K = a1*u1
//   field X1 = [1, 0 | 0, 0]            (xi | eta, eta optional)
//   system S                            ... end
//     eq <expr>
//     ma 1p1 [kappa=k] [alpha=a] [f=f] [homogeneous]
//     impose <symbol>: <expr>           (solve expr = 0 for symbol, substitute)
//   transform T [z w]                   ... end
//     z1 = <expr>   w1 = <expr>         (forward map in x, u)
//     x1 = <expr>   u1 = <expr>         (optional inverse in z, w)
//   maspec M 1p1 [kappa=k] [alpha=a] [f=f]   ... end
//     kappa 5 = <expr>
//     alpha 2 = <expr>
//     f = <expr in u>                   (closed form for the function)
struct Session {
  std::string origin;
  Declarations decl;
  std::map<std::string, VectorField> fields;
  std::map<std::string, PDESystem> systems;
  std::map<std::string, PointTransformation> transforms;
  std::map<std::string, MASpec> maspecs;
  std::map<std::string, Expr> closed_forms;  // maspec name -> f(u)

  // Throw SessionError for unknown names.
  const VectorField& field(const std::string& name) const;
  const PDESystem& system(const std::string& name) const;
  const PointTransformation& transform(const std::string& name) const;
  const MASpec& maspec(const std::string& name) const;
};

// Throws SyntaxError, UndeclaredSymbol, SessionError.
Session parse_session(const std::string& text, const std::string& origin = "<input>");

// Directories searched for relative session paths: JETREDUCE_SESSION_PATH
// (':'-separated), then the bundled sessions directory.
std::vector<std::string> session_search_path();
std::string resolve_session_path(const std::string& path);
Session load_session(const std::string& path);

}  // namespace jetreduce

#endif  // JETREDUCE_IO_SESSION_HPP
