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

#ifndef JETREDUCE_IO_REPORT_HPP
#define JETREDUCE_IO_REPORT_HPP

#include <string>
#include <vector>

#include "jetreduce/io/parser.hpp"
#include "jetreduce/monge_ampere.hpp"
#include "jetreduce/transform.hpp"
#include "json.hpp"

namespace jetreduce {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportFormat = "jetreduce.report/1";

// Builds the result part of a report. Expressions are written as strings in
// the session grammar; every symbol they mention is collected so that the
// finished report carries the declarations needed to parse them back.
class ReportBuilder {
 public:
  explicit ReportBuilder(Declarations decl) : decl_(std::move(decl)) {}

  void declare(const Signature& sig);

  Json expr(const Expr& e);
  Json exprs(const std::vector<Expr>& es);
  Json field(const VectorField& X);
  Json system(const PDESystem& s);
  Json transformation(const PointTransformation& t);
  Json algebra(const AlgebraReport& r);
  Json certificate(const SymmetryCertificate& c);
  Json classification(const ClassificationReport& r);
  Json canonical_check(const CanonicalCheck& c);
  Json rank(const RankReport& r);
  Json reduction(const ReductionReport& r);
  Json spec(const MASpec& s);
  Json conditions(const ConditionReport& r);

  // {"format", "command", "verdict", "symbols", "result"}
  Json finish(const std::string& command, const std::string& verdict, Json result) const;

  const Declarations& declarations() const { return decl_; }

 private:
  Declarations decl_;
};

Json symbols_json(const Declarations& decl);
// Inverse of symbols_json. Throws SessionError.
Declarations declarations_from(const Json& symbols);

// Keys whose string values (or nested arrays of strings) are expressions.
bool is_expression_key(const std::string& key);

// Parses every expression of the report against its symbols block and
// prints it again; the result equals the input for reports written by
// ReportBuilder. Throws SyntaxError, UndeclaredSymbol.
Json reparse_report(const Json& report);

std::string render_json(const Json& report);
std::string render_text(const Json& report);

}  // namespace jetreduce

#endif  // JETREDUCE_IO_REPORT_HPP
