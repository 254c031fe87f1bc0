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
#include "jetreduce/io/parser.hpp"
#include "jetreduce/liegeom.hpp"
#include "jetreduce/normal_form.hpp"
#include "jetreduce/regression.hpp"

using namespace jetreduce;

namespace {

const Signature kSig{2, 2};

}  // namespace

TEST_CASE("Jacobi identity on random polynomial fields") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    VectorField X = random_field(rng, kSig, 2), Y = random_field(rng, kSig, 2), Z = random_field(rng, kSig, 1);
    VectorField j = lie_bracket(X, lie_bracket(Y, Z))
                        .plus(lie_bracket(Y, lie_bracket(Z, X)))
                        .plus(lie_bracket(Z, lie_bracket(X, Y)));
    CHECK(j.canonical().is_zero());
  }
}

TEST_CASE("bracket is antisymmetric") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    VectorField X = random_field(rng, kSig, 2), Y = random_field(rng, kSig, 2);
    CHECK(lie_bracket(X, Y).plus(lie_bracket(Y, X)).canonical().is_zero());
  }
}

TEST_CASE("fields act as derivations") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    VectorField X = random_field(rng, kSig, 2);
    Expr f = random_expr(rng, kSig, 3), g = random_expr(rng, kSig, 3);
    CHECK(is_zero(X.apply(f * g) - (X.apply(f) * g + f * X.apply(g))));
    CHECK(is_zero(X.apply(f + g) - X.apply(f) - X.apply(g)));
  }
}

TEST_CASE("formal partial derivatives commute") {
  std::mt19937_64 rng(14);
  SymbolId x1 = kSig.indep(1), u2 = kSig.dep(2);
  for (int trial = 0; trial < 50; ++trial) {
    Expr f = random_expr(rng, kSig, 4);
    CHECK(is_zero(diff(diff(f, x1), u2) - diff(diff(f, u2), x1)));
  }
}

TEST_CASE("printing and parsing are inverse on random expressions") {
  std::mt19937_64 rng(15);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    Expr e = random_expr(rng, kSig, 4);
    Declarations d(kSig);
    d.absorb(e);
    std::string text = print_expr(e, d);
    Expr back = parse_expr(text, d);
    CHECK_MESSAGE(is_zero(back - e), text);
    CHECK(print_expr(canonical(back), d) == print_expr(canonical(e), d));
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("canonical form is idempotent and factor-invariant") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    Expr a = random_expr(rng, kSig, 3), b = random_expr(rng, kSig, 2);
    if (is_zero(b)) continue;
    Expr c = canonical(a);
    CHECK(canonical(c) == c);
    CHECK(equivalent(a, a * b / b));
    CHECK(normalize(a) == normalize(c));
  }
}

TEST_CASE("push forward then back recovers random quasilinear systems") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    PDESystem s = random_quasilinear(rng);
    PointTransformation t = random_translation_map(rng, s.sig);
    CHECK(push_round_trip(s, t));
  }
}

TEST_CASE("random translation maps invert exactly") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 10; ++trial) CHECK(round_trip_failures(random_translation_map(rng, kSig)).empty());
}
