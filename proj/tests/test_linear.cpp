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


#include <random>

#include "doctest.h"
#include "jetreduce/errors.hpp"
#include "jetreduce/io/parser.hpp"
#include "jetreduce/linear.hpp"
#include "jetreduce/normal_form.hpp"

using namespace jetreduce;

namespace {

Declarations unknowns3() {
  Declarations d(Signature{2, 2});
  for (const char* p : {"a", "b", "c", "d", "e", "k1", "k2", "k3"}) d.add_parameter(p);
  return d;
}

mpq_class det3(const mpq_class m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TEST_CASE("symbolic 2x2 system agrees with Cramer's rule") {
  Declarations d = unknowns3();
  auto k1 = SymbolId::parameter("k1"), k2 = SymbolId::parameter("k2");
  Solution s = solve_linear({parse_expr("a*k1 + b*k2 - e", d), parse_expr("c*k1 + d*k2 - 1", d)}, {k1, k2});
  REQUIRE(s.size() == 2);
  CHECK(s[0].first == k1);
  CHECK(is_zero(s[0].second - parse_expr("(e*d - b)/(a*d - b*c)", d)));
  CHECK(is_zero(s[1].second - parse_expr("(a - c*e)/(a*d - b*c)", d)));
}

TEST_CASE("random integer 3x3 systems agree with Cramer's rule") {
  Declarations d = unknowns3();
  std::vector<SymbolId> ks{SymbolId::parameter("k1"), SymbolId::parameter("k2"), SymbolId::parameter("k3")};
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-6, 6);
  int solved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    mpq_class m[3][3], rhs[3];
    std::vector<Expr> eqs;
    for (int r = 0; r < 3; ++r) {
      Expr e = Expr(0);
      for (int c = 0; c < 3; ++c) {
        m[r][c] = coef(rng);
        e = e + Expr(m[r][c]) * Expr(ks[c]);
      }
      rhs[r] = coef(rng);
      eqs.push_back(e - Expr(rhs[r]));
    }
    mpq_class det = det3(m);
    if (det == 0) {
      CHECK_THROWS(solve_linear(eqs, ks));
      continue;
    }
    Solution s = solve_linear(eqs, ks);
    for (int c = 0; c < 3; ++c) {
      mpq_class mc[3][3];
      for (int r = 0; r < 3; ++r)
        for (int cc = 0; cc < 3; ++cc) mc[r][cc] = cc == c ? rhs[r] : m[r][cc];
      CHECK(s[c].second == Expr(mpq_class(det3(mc) / det)));
    }
    ++solved;
  }
  CHECK(solved > 20);
}

TEST_CASE("rank deficiency and inconsistency are distinguished") {
  Declarations d = unknowns3();
  auto k1 = SymbolId::parameter("k1"), k2 = SymbolId::parameter("k2");
  CHECK_THROWS_AS(solve_linear({parse_expr("k1 + k2 - 1", d), parse_expr("2*k1 + 2*k2 - 2", d)}, {k1, k2}),
                  SingularSystem);
  CHECK_THROWS_AS(solve_linear({parse_expr("k1 + k2 - 1", d)}, {k1, k2}), Underdetermined);
  CHECK_THROWS_AS(solve_linear({parse_expr("k1 + k2 - 1", d), parse_expr("k1 + k2 - 2", d)}, {k1, k2}), Inconsistent);
}

TEST_CASE("every solve is checked by back-substitution") {
  Declarations d = unknowns3();
  SolveStats before = solve_stats();
  solve_linear({parse_expr("a*k1 - 1", d)}, {SymbolId::parameter("k1")});
  SolveStats after = solve_stats();
  CHECK(after.checked == before.checked + 1);
  CHECK(after.residual_zero == before.residual_zero + 1);
}

TEST_CASE("nonlinear equations in the unknowns are rejected") {
  Declarations d = unknowns3();
  CHECK_THROWS_AS(solve_linear({parse_expr("k1^2 - 1", d)}, {SymbolId::parameter("k1")}), std::invalid_argument);
}
