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


#include <cstdlib>

#include "doctest.h"
#include "jetreduce/errors.hpp"
#include "jetreduce/io/session.hpp"
#include "jetreduce/normal_form.hpp"
#include "jetreduce/regression.hpp"
#include "jetreduce/transform.hpp"

using namespace jetreduce;

namespace {

const char* kSmall = R"(# small session
signature 2 1
param c
function g(u1)
let K = c*u1 +
        1
field T = translation 1
field S = [x1, x2 | 0]
system HEAT
  eq u[1,1] - K*u[1,2]
  eq (u[1,2] - 1)/(u1 + c)
end
transform SHIFT z w
  z1 = x1 - g
  z2 = x2
  w1 = u1
  x1 = z1 + g(w1)
  x2 = z2
  u1 = w1
end
)";

}  // namespace

TEST_CASE("statements of a small session") {
  Session s = parse_session(kSmall);
  CHECK(s.decl.is_parameter("c"));
  CHECK(s.decl.function("g") != nullptr);
  CHECK(s.fields.size() == 2);
  CHECK(s.field("S").xi[1] == Expr(SymbolId::independent("x", 2)));
  const PDESystem& heat = s.system("HEAT");
  REQUIRE(heat.equations.size() == 2);
  CHECK(is_zero(heat.equations[0] - parse_expr("u[1,1] - (c*u1 + 1)*u[1,2]", s.decl)));
  CHECK(is_zero(heat.equations[1] - parse_expr("u[1,2] - 1", s.decl)));
  REQUIRE(heat.cleared_factors[1].size() == 1);
  CHECK(is_zero(heat.cleared_factors[1][0] - parse_expr("u1 + c", s.decl)));
  const PointTransformation& t = s.transform("SHIFT");
  REQUIRE(t.inverse);
  CHECK(t.target.x == "z");
}

TEST_CASE("ma statements build the same system as the library") {
  Session s = parse_session(R"(signature 2 2
system A
  ma 1p1
end
)");
  PDESystem direct = build_system(MASpec::generic(2));
  CHECK(equivalent_systems(s.system("A"), direct));
}

TEST_CASE("errors carry the line of the offending statement") {
  try {
    parse_session("signature 1 1\nfield F = [1 +]\n");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_session("signature 1 1\nsystem S\n  eq u[1,1]\n"), SessionError);
  CHECK_THROWS_AS(parse_session("signature 1 1\nfrobnicate\n"), SessionError);
  CHECK_THROWS_AS(parse_session("signature 1 1\nfield F = [q]\n"), UndeclaredSymbol);
  Session s = parse_session("signature 1 1\n");
  CHECK_THROWS_AS(s.field("nope"), SessionError);
}

TEST_CASE("impose substitutes the solved coefficient") {
  Session s = parse_session(R"(signature 1 1
function k1(u1) k2(u1)
system S
  eq k1*u[1,1] + k2
  impose k2: k2 - 2*k1
end
)");
  CHECK(same_equation(s.system("S").equations[0], parse_expr("u[1,1] + 2", s.decl)));
}

TEST_CASE("bundled sessions load") {
  for (const char* name : {"ma1p1", "ma2p1", "ma3p1", "von_karman"}) {
    Session s = load_session(name);
    CHECK_MESSAGE(!s.systems.empty(), name);
  }
}

TEST_CASE("closed forms attach to their maspec") {
  Session s = load_session("ma1p1");
  REQUIRE(s.closed_forms.count("WITNESS_SPEC") == 1);
  CHECK(is_zero(s.closed_forms.at("WITNESS_SPEC") - parse_expr("(u1^2 + u2^2)/2", s.decl)));
  CHECK(s.maspec("WITNESS_SPEC").n == 2);
}

TEST_CASE("missing session files are reported") {
  CHECK_THROWS_AS(load_session("/nonexistent/dir/none.session"), SessionError);
}
