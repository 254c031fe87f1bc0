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
#include "jetreduce/io/session.hpp"
#include "jetreduce/normal_form.hpp"
#include "jetreduce/regression.hpp"
#include "jetreduce/transform.hpp"

using namespace jetreduce;

namespace {

PDESystem one_equation(const Signature& sig, const std::string& text) {
  Declarations d(sig);
  return PDESystem{sig, {parse_expr(text, d)}, {{}}};
}

}  // namespace

TEST_CASE("jet exchange under the identity") {
  Signature sig{2, 1};
  JetMap m = jet_exchange(PointTransformation::identity(sig));
  CHECK(m.at(sig.jet(1, 2)) == Expr(SymbolId::jet("w", 1, 2)));
  CHECK(is_zero(m.determinant - Expr(1)));
}

TEST_CASE("push forward under a hodograph-like shear") {
  // z = x + u, w = u gives u_x = w_z / (1 - w_z).
  Signature sig{1, 1};
  Declarations d(sig);
  PointTransformation t = PointTransformation::identity(sig);
  t.Z = {parse_expr("x1 + u1", d)};
  t.inverse.reset();
  t = with_inverse(t);
  d.add_signature(t.target);

  PDESystem a = push_forward(one_equation(sig, "u[1,1]"), t);
  CHECK(proportional(a.equations[0], parse_expr("w[1,1]", d)));
  PDESystem b = push_forward(one_equation(sig, "u[1,1] - 1"), t);
  CHECK(proportional(b.equations[0], parse_expr("2*w[1,1] - 1", d)));
  CHECK_FALSE(b.cleared_factors[0].empty());
}

TEST_CASE("classification flags") {
  Signature sig{2, 1};
  ClassificationReport q = classify(one_equation(sig, "u[1,1] + u1*u[1,2]"));
  CHECK(q.autonomous);
  CHECK(q.quasilinear);
  CHECK(q.homogeneous_in_jets[0]);
  REQUIRE(q.matrices);
  CHECK((*q.matrices)[1][0][0] == Expr(SymbolId::dependent("u", 1)));
  CHECK_FALSE(q.residual_source);

  CHECK_FALSE(classify(one_equation(sig, "x1*u[1,1]")).autonomous);
  ClassificationReport nl = classify(one_equation(sig, "u[1,1]^2 - u[1,2]"));
  CHECK_FALSE(nl.quasilinear);
  CHECK(nl.jet_degree[0] == 2);
  ClassificationReport inh = classify(one_equation(sig, "u[1,1] + 1"));
  CHECK_FALSE(inh.homogeneous_in_jets[0]);
  REQUIRE(inh.residual_source);
  CHECK((*inh.residual_source)[0] == Expr(1));
}

TEST_CASE("plane system reduces to its expected target") {
  Session s = load_session("ma1p1");
  ReductionReport r = reduce(s.system("MA"), {s.field("X1"), s.field("X2"), s.field("X3")});
  REQUIRE(r.success);
  CHECK(r.reached == Stage::Done);
  REQUIRE(r.target);
  REQUIRE(r.classification);
  CHECK(r.classification->quasilinear);
  CHECK(r.classification->autonomous);
  PDESystem expected = rename_coordinates(s.system("TARGET"), r.target->sig);
  CHECK(equivalent_systems(*r.target, expected));
}

TEST_CASE("given map and derived map push to the same system") {
  Session s = load_session("ma1p1");
  PointTransformation t = with_inverse(s.transform("CANON"));
  PDESystem pushed = push_forward(s.system("MA"), t);
  ReductionReport r = reduce(s.system("MA"), {s.field("X1"), s.field("X2"), s.field("X3")});
  REQUIRE(r.target);
  CHECK(equivalent_systems(pushed, *r.target));
}

TEST_CASE("reduction stops at the structure stage for a bad algebra") {
  Session s = load_session("ma1p1");
  ReductionReport r = reduce(s.system("MA"), {s.field("X1"), s.field("X3")});
  CHECK_FALSE(r.success);
  CHECK(r.reached == Stage::Structure);
  CHECK(stage_name(r.reached) == "structure");
  CHECK_FALSE(r.message.empty());
}

TEST_CASE("reduction stops at the symmetry stage when a field is not admitted") {
  Session s = load_session("ma1p1");
  ReductionReport r = reduce(s.system("MA"), {s.field("Y1"), s.field("Y2"), s.field("Y3")});
  CHECK_FALSE(r.success);
  CHECK(r.reached == Stage::Symmetry);
}

TEST_CASE("Von Karman system reaches a quasilinear target") {
  Session s = load_session("von_karman");
  ReductionReport r = reduce(s.system("VK_H"), {s.field("X1"), s.field("X2"), s.field("X3")});
  CHECK(r.success);
  REQUIRE(r.classification);
  CHECK(r.classification->quasilinear);
}

TEST_CASE("equation comparison ignores nonzero factors") {
  Signature sig{2, 1};
  Declarations d(sig);
  CHECK(same_equation(parse_expr("u[1,1] - u[1,2]", d), parse_expr("(u1 + 1)*(u[1,2] - u[1,1])", d)));
  CHECK_FALSE(same_equation(parse_expr("u[1,1] - u[1,2]", d), parse_expr("u[1,1] + u[1,2]", d)));
}
