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

#ifndef JETREDUCE_REGRESSION_HPP
#define JETREDUCE_REGRESSION_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "jetreduce/io/session.hpp"
#include "jetreduce/transform.hpp"

namespace jetreduce {

// Reference checks against the reference Monge-Ampere results, shared by
// `jetreduce selftest` and the acceptance runner.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  std::vector<std::string> details;
};

inline constexpr int kCriterionCount = 9;

// Runs criterion id (1..9). Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids,
                                          const std::function<void(const CriterionResult&)>& on_done = {});
std::string format_result(const CriterionResult& r);

// Path of a file below the source tree (fixtures and bundled sessions).
std::string source_path(const std::string& relative);

// Nonzero constant ratio.
bool proportional(const Expr& a, const Expr& b);

// Renames x -> to.x, u -> to.u everywhere, opaque arguments included.
Expr rename_coordinates(const Expr& e, const Signature& from, const Signature& to);
PDESystem rename_coordinates(const PDESystem& s, const Signature& to);

// Opaque symbol names name<i> -> renamed<i>.
Expr rename_functions(const Expr& e, const std::string& name, const std::string& renamed);

// "label: expression" lines, '#' comments skipped.
std::vector<std::pair<std::string, Expr>> read_relations(const std::string& path, const Declarations& decl);

// Generators for the property suites.
Expr random_polynomial(std::mt19937_64& rng, const std::vector<Expr>& vars, int degree, int terms);
VectorField random_field(std::mt19937_64& rng, const Signature& sig, int degree);
// Sums, products and small powers of coordinates, a parameter and the
// opaque function g(u).
Expr random_expr(std::mt19937_64& rng, const Signature& sig, int depth);
PDESystem random_quasilinear(std::mt19937_64& rng);
// z = x - grad-like g(u), w = u, with its inverse.
PointTransformation random_translation_map(std::mt19937_64& rng, const Signature& sig);

// Pushes forward, then back through the inverse, and compares.
bool push_round_trip(const PDESystem& s, const PointTransformation& t);

}  // namespace jetreduce

#endif  // JETREDUCE_REGRESSION_HPP
