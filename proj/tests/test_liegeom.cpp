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
#include "jetreduce/liegeom.hpp"
#include "jetreduce/normal_form.hpp"

using namespace jetreduce;

namespace {

const Session& ma1() {
  static const Session s = load_session("ma1p1");
  return s;
}

VectorField field_of(const Signature& sig, std::vector<std::string> xi, std::vector<std::string> eta) {
  Declarations d(sig);
  VectorField X = VectorField::zero(sig);
  for (std::size_t k = 0; k < xi.size(); ++k) X.xi[k] = parse_expr(xi[k], d);
  for (std::size_t k = 0; k < eta.size(); ++k) X.eta[k] = parse_expr(eta[k], d);
  return X;
}

}  // namespace

TEST_CASE("bracket of a translation with the radial scaling") {
  Signature sig{2, 1};
  VectorField T = VectorField::translation(sig, 1);
  VectorField R = field_of(sig, {"x1", "x2"}, {"0"});
  VectorField B = lie_bracket(T, R).canonical();
  CHECK(B.plus(T.scaled(Expr(-1))).canonical().is_zero());
  CHECK(lie_bracket(R, R).canonical().is_zero());
}

TEST_CASE("bracket acts as the commutator of derivations") {
  Signature sig{1, 1};
  Declarations d(sig);
  VectorField X = field_of(sig, {"x1^2"}, {"u1*x1"});
  VectorField Y = field_of(sig, {"u1"}, {"x1 + 1"});
  Expr g = parse_expr("x1^3*u1 + u1^2", d);
  Expr lhs = lie_bracket(X, Y).apply(g);
  Expr rhs = X.apply(Y.apply(g)) - Y.apply(X.apply(g));
  CHECK(is_zero(lhs - rhs));
}

TEST_CASE("first prolongation of a scaling") {
  Signature sig{1, 1};
  Declarations d(sig);
  ProlongedField P = prolong1(field_of(sig, {"x1"}, {"2*u1"}));
  REQUIRE(P.zeta.size() == 1);
  CHECK(is_zero(P.zeta[0][0] - parse_expr("u[1,1]", d)));
}

TEST_CASE("translations plus scaling in the plane pass the structure check") {
  const Session& s = ma1();
  AlgebraReport r = check_theorem1_structure({s.field("X1"), s.field("X2"), s.field("X3")});
  CHECK(r.structure_ok);
  CHECK(r.distribution_rank == 2);
  CHECK(r.table.size() == 3);
  CHECK(r.entry(1, 2).bracket.is_zero());
  CHECK(r.entry(1, 3).resolved);
  CHECK(r.entry(1, 3).verified);
  CHECK(r.failures.empty());
}

TEST_CASE("structure check rejects a non-solvable triple") {
  Signature sig{2, 1};
  VectorField X1 = field_of(sig, {"1", "0"}, {"0"});
  VectorField X2 = field_of(sig, {"x1", "0"}, {"0"});
  VectorField X3 = field_of(sig, {"x1^2", "0"}, {"0"});
  AlgebraReport r = check_theorem1_structure({X1, X2, X3});
  CHECK_FALSE(r.structure_ok);
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("structure check rejects the wrong number of fields") {
  const Session& s = ma1();
  AlgebraReport r = check_theorem1_structure({s.field("X1"), s.field("X3")});
  CHECK_FALSE(r.structure_ok);
}

TEST_CASE("rank of dependent fields") {
  Signature sig{2, 1};
  VectorField X = field_of(sig, {"1", "u1"}, {"0"});
  VectorField Y = field_of(sig, {"x1", "x1*u1"}, {"0"});
  RankReport r = distribution_rank_report({X, Y});
  CHECK(r.rank == 1);
  CHECK(distribution_rank({X, VectorField::translation(sig, 2)}) == 2);
}

TEST_CASE("symmetry certificates on the plane system") {
  const Session& s = ma1();
  const PDESystem& sys = s.system("MA");
  for (const char* name : {"X1", "X2", "X3"}) {
    SymmetryCertificate c = check_symmetry(sys, s.field(name));
    CHECK_MESSAGE(c.admitted, name);
    CHECK(c.residual.empty());
  }
}

TEST_CASE("a rotation is not a symmetry of the shifted plane system") {
  const Session& s = ma1();
  Signature sig = s.system("MA").sig;
  VectorField rot = field_of(sig, {"-x2", "x1"}, {"-u2", "u1"});
  SymmetryCertificate c = check_symmetry(s.system("MA"), rot, 1);
  CHECK_FALSE(c.admitted);
  CHECK_FALSE(c.residual.empty());
}

TEST_CASE("fields with jet coefficients are rejected") {
  Signature sig{1, 1};
  VectorField X = VectorField::zero(sig);
  X.xi[0] = Expr(sig.jet(1, 1));
  CHECK_THROWS_AS(X.validate(), std::invalid_argument);
}
