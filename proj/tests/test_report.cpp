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
#include "jetreduce/errors.hpp"
#include "jetreduce/io/report.hpp"
#include "jetreduce/io/session.hpp"

using namespace jetreduce;

namespace {

Json reduction_report(const Session& s) {
  ReductionReport r = reduce(s.system("MA"), {s.field("X1"), s.field("X2"), s.field("X3")});
  ReportBuilder b(s.decl);
  return b.finish("reduce", r.success ? "ok" : "negative", Json{{"reduction", b.reduction(r)}});
}

}  // namespace

TEST_CASE("report envelope") {
  Session s = load_session("ma1p1");
  Json j = reduction_report(s);
  CHECK(j.at("format") == kReportFormat);
  CHECK(j.at("verdict") == "ok");
  CHECK(j.at("result").at("reduction").at("reached") == "done");
  CHECK_FALSE(j.at("symbols").at("signatures").empty());
}

TEST_CASE("expressions in a report parse back to themselves") {
  Session s = load_session("ma1p1");
  Json j = reduction_report(s);
  CHECK(reparse_report(j) == j);
  Json again = Json::parse(render_json(j));
  CHECK(reparse_report(again) == j);
}

TEST_CASE("condition reports round-trip in three dimensions") {
  Session s = load_session("ma2p1");
  const MASpec spec = MASpec::generic(3);
  ReportBuilder b(s.decl);
  Json j = b.finish("ma conditions", "ok", Json{{"spec", b.spec(spec)}, {"report", b.conditions(derive_conditions(spec, false))}});
  CHECK(reparse_report(j) == j);
}

TEST_CASE("reports are deterministic") {
  Session a = load_session("ma1p1");
  Session b = load_session("ma1p1");
  CHECK(render_json(reduction_report(a)) == render_json(reduction_report(b)));
}

TEST_CASE("symbols block survives a round trip") {
  Session s = load_session("von_karman");
  Json sym = symbols_json(s.decl);
  CHECK(symbols_json(declarations_from(sym)) == sym);
  CHECK_THROWS_AS(declarations_from(Json{{"signatures", 3}}), SessionError);
}

TEST_CASE("text rendering starts with command and verdict") {
  ReportBuilder b{Declarations()};
  Json j = b.finish("selftest", "negative", Json{{"criteria", Json::array()}});
  std::string t = render_text(j);
  CHECK(t.rfind("selftest: negative\n", 0) == 0);
}

TEST_CASE("a tampered expression fails to parse back") {
  Session s = load_session("ma1p1");
  Json j = reduction_report(s);
  j["result"]["reduction"]["target"]["equations"][0] = "u[1,1] + undeclared7";
  CHECK_THROWS_AS(reparse_report(j), UndeclaredSymbol);
}
