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

#ifndef JETREDUCE_MONGE_AMPERE_HPP
#define JETREDUCE_MONGE_AMPERE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jetreduce/liegeom.hpp"

namespace jetreduce {

// Completely exceptional second-order equation for a scalar potential in n
// independent variables (n = 2, 3, 4), written as a first-order system for
// the gradient u_1..u_n.
struct MASpec {
  int n = 2;
  std::vector<Expr> kappas;  // kappas[i-1] is kappa_i
  std::vector<Expr> alphas;  // upper triangle of the symmetric shift matrix, row-major
  std::string f = "f";

  // kappa_i = k<i>(u_1..u_n), alpha_i = a<i>; kappa_24 = 0 when n = 4.
  static MASpec generic(int n, const std::string& kappa = "k", const std::string& alpha = "a",
                        const std::string& f = "f");
  static int kappa_count(int n);  // 5, 14, 43
  static int alpha_count(int n);  // 3, 6, 10
  // Coefficients fixed by the symmetry conditions: all but the quasilinear ones.
  static std::vector<int> dependent_kappas(int n);
  // "1p1", "2p1", "3p1" <-> n = 2, 3, 4. Throws std::invalid_argument.
  static int dimension(const std::string& name);
  std::string name() const;

  Signature sig() const { return Signature{n, n}; }
  const Expr& kappa(int i) const { return kappas.at(i - 1); }
  Expr alpha(int a, int i) const;
  std::vector<Expr> u_args() const;
  Expr f_derivative(std::vector<int> index) const;
  // Throws std::invalid_argument on wrong sizes or kappas depending on x or jets.
  void validate() const;
};

struct HessianPack {
  int k = 0;
  std::vector<std::vector<Expr>> matrix;  // u[min(i,j), max(i,j)]
  Expr H;
  std::map<std::pair<int, int>, Expr> dH;  // i <= j, derivative in the single symbol u[i,j]
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, Expr> d2H;
  std::map<std::pair<int, int>, Expr> cofactor;    // of the jet Hessian
  std::map<std::pair<int, int>, Expr> f_cofactor;  // of the Hessian of f in f;ij
};

HessianPack hessian_pack(int k, const std::string& f = "f");

Expr determinant(const std::vector<std::vector<Expr>>& m);

struct IndexMaps {
  int r = 0;
  int s = 0;
  int sigma_kl = 0;
  int sigma_mn = 0;
};

// r = i(9-i)/2 + j - 3, sigma_ab = 4(a-1) - a(a+1)/2 + b,
// s = sigma_mn + sigma_kl(13 - sigma_kl)/2 + 5 with the pairs ordered so that
// sigma_kl <= sigma_mn. The offset 5 places the 21 second-derivative
// coefficients on kappa_12..kappa_32, between the gradient and linear ranges.
// Throws IndexOutOfRange.
IndexMaps index_maps(int i, int j, int k, int l, int m, int n);
int r_index(int i, int j);
int sigma_index(int a, int b);
int s_index(int k, int l, int m, int n);

// Basis b_1..b_{K-1} with equation sum_i kappa_i b_i + kappa_K.
std::vector<Expr> ma_basis(int n);
// Exchange equations u[b,a] - u[a,b] (a < b), then the second-order equation.
PDESystem build_system(const MASpec& spec);
// u_A -> u_A + sum_i alpha_{A,i} x_i and u[A,i] -> u[A,i] + alpha_{A,i}.
// shift_args also shifts the arguments of kappa and f.
PDESystem affine_shift(const PDESystem& system, const MASpec& spec, bool shift_args = false);

// Value of the last kappa that removes the jet-free part of the shifted equation.
Expr homogenization_condition(const MASpec& spec);
MASpec homogenized(const MASpec& spec);

// kappa-hat_i (i < K) of the shifted equation in the basis, as Exprs in the
// kappas and alphas.
std::vector<Expr> hatted_coefficients(const MASpec& spec);
// Spec with kappa_i = kh<i>(u), alpha = 0 and last kappa 0.
MASpec hatted_spec(const MASpec& spec, const std::string& name = "kh");

// Translations d/dx_i and the field sum_i (x_i - f;i) d/dx_i.
std::vector<VectorField> ma_fields(const MASpec& spec);

struct ConditionReport {
  // In the hatted symbols: kh_i - S_i for each dependent index, ascending.
  std::vector<Expr> hatted;
  std::vector<int> indices;
  std::vector<Expr> hat_map;  // hatted_coefficients(spec)
  // In the spec's own kappas: kappa_i - S_i when they are free symbols, otherwise
  // the nonzero hatted conditions with the hat map substituted.
  std::vector<Expr> conditions;
  bool solved = false;
  // check_symmetry on the hatted system with the conditions imposed.
  SymmetryCertificate certificate;
};

// Derives the conditions under which the last field of ma_fields is a symmetry
// of the homogeneous shifted system. solve_original = false skips solving for
// the spec's kappas (conditions then carries the substituted hatted relations).
ConditionReport derive_conditions(const MASpec& spec, bool solve_original = true);
std::vector<Expr> symmetry_conditions(const MASpec& spec);

struct VonKarman {
  MASpec spec;
  PDESystem system;  // shifted, homogeneous
  // kappa^2 - value, b - value, d/du_1 of the b-expression without alpha_1.
  std::vector<Expr> conditions;
  Expr kappa2;  // kappa^2(s(u_2))
  Expr b;       // b(s(u_2))
};

VonKarman von_karman_example();

}  // namespace jetreduce

#endif  // JETREDUCE_MONGE_AMPERE_HPP
