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


#include "doctest.h"
#include "jetreduce/canonical.hpp"
#include "jetreduce/errors.hpp"
#include "jetreduce/io/session.hpp"
#include "jetreduce/normal_form.hpp"

using namespace jetreduce;

namespace {

std::vector<VectorField> fields(const Session& s, std::initializer_list<const char*> names) {
  std::vector<VectorField> out;
  for (const char* n : names) out.push_back(s.field(n));
  return out;
}

}  // namespace

TEST_CASE("canonical variables for the plane fields") {
  Session s = load_session("ma1p1");
  auto fs = fields(s, {"X1", "X2", "X3"});
  PointTransformation t = canonical_for_translation_scaling(fs);
  Declarations d = s.decl;
  d.add_signature(t.target);
  CHECK(is_zero(t.Z[0] - parse_expr("x1 - f;1", d)));
  CHECK(is_zero(t.Z[1] - parse_expr("x2 - f;2", d)));
  CHECK(t.W[0] == parse_expr("u1", d));
  REQUIRE(t.inverse);
  CHECK(is_zero(t.inverse->x_of[0] - parse_expr("z1 + f;1(w1,w2)", d)));

  CanonicalCheck c = verify_canonical(t, fs);
  CHECK(c.translations);
  CHECK(c.invariants);
  CHECK(c.scaling_w);
  CHECK(c.scaling_z);
  CHECK(c.ok());
  CHECK(round_trip_failures(t).empty());
  CHECK(jacobian_rank(t).rank == 4);
}

TEST_CASE("session transform agrees with the derived one") {
  Session s = load_session("ma2p1");
  auto fs = fields(s, {"X1", "X2", "X3", "X4"});
  PointTransformation derived = canonical_for_translation_scaling(fs);
  PointTransformation given = with_inverse(s.transform("CANON"));
  for (std::size_t i = 0; i < derived.Z.size(); ++i) CHECK(is_zero(derived.Z[i] - given.Z[i]));
  CHECK(verify_canonical(given, fs).ok());
}

TEST_CASE("canonical check reports a wrong map") {
  Session s = load_session("ma1p1");
  auto fs = fields(s, {"X1", "X2", "X3"});
  PointTransformation t = PointTransformation::identity(Signature{2, 2});
  CanonicalCheck c = verify_canonical(t, fs);
  CHECK(c.translations);
  CHECK(c.invariants);
  CHECK_FALSE(c.scaling_z);
  CHECK_FALSE(c.ok());
  CHECK_FALSE(c.witnesses.empty());
}

TEST_CASE("inverse of an affine map") {
  Signature src{2, 1};
  Declarations d(src);
  PointTransformation t = PointTransformation::identity(src);
  d.add_signature(t.target);
  t.Z = {parse_expr("2*x1 + x2 - u1^2", d), parse_expr("x1 - x2", d)};
  t.inverse.reset();
  InverseMap inv = derive_inverse(t);
  CHECK(is_zero(inv.x_of[0] - parse_expr("(z1 + z2 + w1^2)/3", d)));
  CHECK(round_trip_failures(with_inverse(t)).empty());
}

TEST_CASE("non-affine maps have no derivable inverse") {
  Signature src{1, 1};
  Declarations d(src);
  PointTransformation t = PointTransformation::identity(src);
  t.Z = {parse_expr("x1^2", d)};
  CHECK_THROWS_AS(derive_inverse(t), UnsupportedShape);
  t = PointTransformation::identity(src);
  t.W = {parse_expr("u1 + x1", d)};
  CHECK_THROWS_AS(derive_inverse(t), UnsupportedShape);
}

TEST_CASE("fields outside the translation-scaling shape are refused") {
  Signature sig{2, 1};
  Declarations d(sig);
  VectorField rot = VectorField::zero(sig);
  rot.xi = {parse_expr("-x2", d), parse_expr("x1", d)};
  CHECK_THROWS(canonical_for_translation_scaling({VectorField::translation(sig, 1), VectorField::translation(sig, 2), rot}));
}

TEST_CASE("a rank-deficient map is detected") {
  Signature src{1, 1};
  Declarations d(src);
  PointTransformation t = PointTransformation::identity(src);
  t.Z = {parse_expr("x1 + u1", d)};
  t.W = {parse_expr("2*x1 + 2*u1", d)};
  CHECK(jacobian_rank(t).rank == 1);
}
