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

#ifndef JETREDUCE_TRANSFORM_HPP
#define JETREDUCE_TRANSFORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "jetreduce/canonical.hpp"

namespace jetreduce {

// Old jets u[A,i] as rational functions of (z, w, w-jets), keyed like the
// jets of the source signature (A-major).
struct JetMap {
  std::vector<std::pair<SymbolId, Expr>> images;
  Expr determinant;  // of the linear system solved per column i

  const Expr& at(const SymbolId& jet) const;
};

// Throws SingularJetMap, UnsupportedShape (no derivable inverse).
JetMap jet_exchange(const PointTransformation& t);

struct PushOptions {
  // Replace the images of jet-linear equations by their linear parts when
  // these generate the same equations, then reduce the remaining equations
  // modulo them.
  bool reduce_linear = true;
};

// Transformed system in (z, w). Equation k of the result corresponds to
// equation k of the input; cleared_factors records what was multiplied in
// (entries 1/c for removed contents).
PDESystem push_forward(const PDESystem& system, const PointTransformation& t, const PushOptions& opts = {});

struct ClassificationReport {
  bool autonomous = false;
  std::vector<int> jet_degree;
  std::vector<bool> homogeneous_in_jets;
  bool quasilinear = false;
  // matrices[i-1][k][A-1]: coefficient of the jet (A, i) in equation k.
  std::optional<std::vector<std::vector<std::vector<Expr>>>> matrices;
  // Jet-free part of each equation when some is nonzero.
  std::optional<std::vector<Expr>> residual_source;
};

ClassificationReport classify(const PDESystem& system);

// Per-equation comparison up to nonzero rational-function factors, after
// reducing both systems modulo their jet-linear equations.
bool same_equation(const Expr& a, const Expr& b);
bool equivalent_systems(const PDESystem& a, const PDESystem& b);

enum class Stage { Structure, Symmetry, Canonical, PushForward, Classification, Done };
std::string stage_name(Stage s);

struct ReductionReport {
  Stage reached = Stage::Structure;  // first failing stage, or Done
  bool success = false;
  std::string message;
  AlgebraReport algebra;
  std::vector<SymmetryCertificate> symmetry;
  std::optional<PointTransformation> transformation;
  std::optional<PDESystem> target;
  std::optional<ClassificationReport> classification;
};

ReductionReport reduce(const PDESystem& system, const std::vector<VectorField>& fields,
                       std::optional<int> mult_degree = std::nullopt);

}  // namespace jetreduce

#endif  // JETREDUCE_TRANSFORM_HPP
