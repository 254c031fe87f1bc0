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

#ifndef JETREDUCE_CANONICAL_HPP
#define JETREDUCE_CANONICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "jetreduce/liegeom.hpp"

namespace jetreduce {

struct InverseMap {
  std::vector<Expr> x_of;  // x_i(z, w)
  std::vector<Expr> u_of;  // u_A(z, w)
};

// z = Z(x, u), w = W(x, u).
struct PointTransformation {
  Signature source;
  Signature target;
  std::vector<Expr> Z;
  std::vector<Expr> W;
  std::optional<InverseMap> inverse;

  static PointTransformation identity(const Signature& source, const std::string& z = "z",
                                      const std::string& w = "w");
  // Throws std::invalid_argument on size mismatch or jets in the maps.
  void validate() const;
  // The map read backwards; requires an inverse.
  PointTransformation inverted() const;
};

// Inverse for W = u and Z affine in x. Throws UnsupportedShape otherwise.
InverseMap derive_inverse(const PointTransformation& t);
PointTransformation with_inverse(PointTransformation t);

// Fields d/dx_1..d/dx_n followed by sum_i (x_i - g_i(u)) d/dx_i give
// z_i = x_i - g_i(u), w = u. Throws UnsupportedShape, VerificationFailed.
PointTransformation canonical_for_translation_scaling(const std::vector<VectorField>& fields,
                                                      const std::string& z = "z", const std::string& w = "w");

struct CanonicalCheck {
  bool translations = false;  // Xi_i(z_j) = delta_ij, i <= n
  bool invariants = false;    // Xi_i(w_A) = 0, i <= n
  bool scaling_w = false;     // Xi_{n+1}(w_A) = 0
  bool scaling_z = false;     // Xi_{n+1}(z_j) = z_j
  std::vector<std::string> witnesses;

  bool theorem() const { return translations && invariants && scaling_w; }
  bool ok() const { return theorem() && scaling_z; }
};

CanonicalCheck verify_canonical(const PointTransformation& t, const std::vector<VectorField>& fields);

// Composition with the inverse in both directions; mismatches as text.
std::vector<std::string> round_trip_failures(const PointTransformation& t);

// Generic rank of d(Z, W)/d(x, u).
RankReport jacobian_rank(const PointTransformation& t);

}  // namespace jetreduce

#endif  // JETREDUCE_CANONICAL_HPP
