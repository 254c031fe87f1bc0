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

#ifndef JETREDUCE_LIEGEOM_HPP
#define JETREDUCE_LIEGEOM_HPP

#include <optional>
#include <string>
#include <vector>

#include "jetreduce/linear.hpp"
#include "jetreduce/system.hpp"

namespace jetreduce {

// sum_j xi_j d/dx_j + sum_A eta_A d/du_A with coefficients in (x, u).
struct VectorField {
  Signature sig;
  std::vector<Expr> xi;
  std::vector<Expr> eta;

  static VectorField zero(const Signature& sig);
  static VectorField translation(const Signature& sig, int i);
  // Throws std::invalid_argument on size mismatch or jet-dependent coefficients.
  void validate() const;
  // X(f) for f in (x, u), opaque chain rule included.
  Expr apply(const Expr& f) const;
  VectorField scaled(const Expr& c) const;
  VectorField plus(const VectorField& o) const;
  // Componentwise canonical form.
  VectorField canonical() const;
  bool is_zero() const;
};

struct ProlongedField {
  VectorField base;
  std::vector<std::vector<Expr>> zeta;  // zeta[A-1][i-1]

  Expr apply(const Expr& f) const;
};

VectorField lie_bracket(const VectorField& X, const VectorField& Y);
ProlongedField prolong1(const VectorField& X);

struct RankReport {
  int rank = 0;
  std::vector<Expr> pivots;  // generic rank holds off the zero set of these
};
RankReport distribution_rank_report(const std::vector<VectorField>& fields);
int distribution_rank(const std::vector<VectorField>& fields);

struct CommutatorEntry {
  int i = 0, j = 0;  // 1-based, i < j
  VectorField bracket;
  bool resolved = false;
  std::vector<Expr> coefficients;  // bracket = sum_l c_l Xi_l when resolved
  bool verified = false;           // bracket - sum_l c_l Xi_l normalizes to 0
};

struct AlgebraReport {
  int k = 0;
  std::vector<CommutatorEntry> table;
  bool structure_ok = false;
  int distribution_rank = 0;
  std::vector<Expr> rank_pivots;
  std::vector<std::string> failures;

  const CommutatorEntry& entry(int i, int j) const;
};

AlgebraReport check_theorem1_structure(const std::vector<VectorField>& fields);

struct SymmetryCertificate {
  bool admitted = false;
  int degree = 0;      // multiplier degree that succeeded, or the last one tried
  int max_degree = 0;  // requested bound
  // lambda[k][l]: multiplier of equation l in pr X(Delta_k); zero columns for
  // linear constraints, which are handled by the reduction below.
  std::vector<std::vector<Expr>> lambda;
  // Linear jet constraints solved for principal jets, applied before the
  // multiplier ansatz.
  Solution linear_reduction;
  std::vector<int> linear_equations;  // 0-based indices
  struct Residual {
    int equation = 0;
    Expr value;
  };
  std::vector<Residual> residual;
};

// Decides pr X(Delta_k) = sum_l lambda_kl Delta_l modulo the linear jet
// constraints of the system, trying multiplier degrees 0..mult_degree.
// The default bound is the highest jet degree among the equations.
SymmetryCertificate check_symmetry(const PDESystem& system, const VectorField& X,
                                   std::optional<int> mult_degree = std::nullopt);

}  // namespace jetreduce

#endif  // JETREDUCE_LIEGEOM_HPP
