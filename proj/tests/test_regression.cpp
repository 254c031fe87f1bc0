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


#include <iostream>

#include "doctest.h"
#include "jetreduce/regression.hpp"

using namespace jetreduce;

namespace {

void expect_pass(int id) {
  CriterionResult r = run_criterion(id);
  INFO(format_result(r));
  CHECK(r.pass);
}

}  // namespace

TEST_CASE("plane reduction to the quasilinear target") { expect_pass(1); }
TEST_CASE("plane symmetry condition") { expect_pass(2); }
TEST_CASE("three-variable conditions and reduction") { expect_pass(3); }
TEST_CASE("four-variable conditions, reduction and Hessian identity") { expect_pass(4); }
TEST_CASE("commutator tables and distribution rank") { expect_pass(7); }
TEST_CASE("property sweep over calculus, determinants and push-forward") { expect_pass(8); }
TEST_CASE("concrete quadratic potential") { expect_pass(9); }

TEST_CASE("result lines name the criterion and its verdict") {
  CriterionResult r;
  r.id = 3;
  r.title = "x";
  r.pass = false;
  r.seconds = 0.5;
  r.details = {"detail"};
  CHECK(format_result(r) == "criterion 3: FAIL (0.500 s) x\n    detail");
  CriterionResult bad = run_criterion(42);
  CHECK_FALSE(bad.pass);
}
