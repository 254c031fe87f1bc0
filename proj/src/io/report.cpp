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

#include "jetreduce/io/report.hpp"

#include <set>
#include <sstream>

#include "jetreduce/errors.hpp"

namespace jetreduce {

namespace {

Json signature_json(const Signature& s) { return Json{{"n", s.n}, {"m", s.m}, {"x", s.x}, {"u", s.u}}; }

Signature signature_from(const Json& j) {
  return Signature{j.at("n").get<int>(), j.at("m").get<int>(), j.at("x").get<std::string>(),
                   j.at("u").get<std::string>()};
}

}  // namespace

void ReportBuilder::declare(const Signature& sig) { decl_.add_signature(sig); }

Json ReportBuilder::expr(const Expr& e) {
  decl_.absorb(e);
  return print_expr(e, decl_);
}

Json ReportBuilder::exprs(const std::vector<Expr>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back(expr(e));
  return out;
}

Json ReportBuilder::field(const VectorField& X) {
  declare(X.sig);
  return Json{{"xi", exprs(X.xi)}, {"eta", exprs(X.eta)}};
}

Json ReportBuilder::system(const PDESystem& s) {
  declare(s.sig);
  Json factors = Json::array();
  for (const auto& f : s.cleared_factors) factors.push_back(exprs(f));
  return Json{{"signature", signature_json(s.sig)}, {"equations", exprs(s.equations)}, {"cleared_factors", factors}};
}

Json ReportBuilder::transformation(const PointTransformation& t) {
  declare(t.source);
  declare(t.target);
  Json j{{"source", signature_json(t.source)},
         {"target", signature_json(t.target)},
         {"Z", exprs(t.Z)},
         {"W", exprs(t.W)}};
  if (t.inverse)
    j["inverse"] = Json{{"x_of", exprs(t.inverse->x_of)}, {"u_of", exprs(t.inverse->u_of)}};
  else
    j["inverse"] = nullptr;
  return j;
}

Json ReportBuilder::rank(const RankReport& r) { return Json{{"rank", r.rank}, {"pivots", exprs(r.pivots)}}; }

Json ReportBuilder::algebra(const AlgebraReport& r) {
  Json table = Json::array();
  for (const auto& e : r.table) {
    table.push_back(Json{{"i", e.i},
                         {"j", e.j},
                         {"bracket", field(e.bracket)},
                         {"resolved", e.resolved},
                         {"coefficients", exprs(e.coefficients)},
                         {"verified", e.verified}});
  }
  return Json{{"k", r.k},
              {"structure_ok", r.structure_ok},
              {"distribution_rank", r.distribution_rank},
              {"rank_pivots", exprs(r.rank_pivots)},
              {"table", table},
              {"failures", r.failures}};
}

Json ReportBuilder::certificate(const SymmetryCertificate& c) {
  Json lambda = Json::array();
  for (const auto& row : c.lambda) lambda.push_back(exprs(row));
  Json reduction = Json::array();
  for (const auto& [s, v] : c.linear_reduction) reduction.push_back(Json{{"unknown", expr(Expr(s))}, {"value", expr(v)}});
  Json residual = Json::array();
  for (const auto& r : c.residual) residual.push_back(Json{{"equation", r.equation}, {"value", expr(r.value)}});
  return Json{{"admitted", c.admitted},
              {"degree", c.degree},
              {"max_degree", c.max_degree},
              {"lambda", lambda},
              {"linear_equations", c.linear_equations},
              {"linear_reduction", reduction},
              {"residual", residual}};
}

Json ReportBuilder::classification(const ClassificationReport& r) {
  std::vector<bool> hom = r.homogeneous_in_jets;
  Json j{{"autonomous", r.autonomous},
         {"quasilinear", r.quasilinear},
         {"jet_degree", r.jet_degree},
         {"homogeneous_in_jets", hom}};
  if (r.matrices) {
    Json ms = Json::array();
    for (const auto& m : *r.matrices) {
      Json rows = Json::array();
      for (const auto& row : m) rows.push_back(exprs(row));
      ms.push_back(rows);
    }
    j["matrices"] = ms;
  } else {
    j["matrices"] = nullptr;
  }
  j["residual_source"] = r.residual_source ? exprs(*r.residual_source) : Json(nullptr);
  return j;
}

Json ReportBuilder::canonical_check(const CanonicalCheck& c) {
  return Json{{"translations", c.translations},
              {"invariants", c.invariants},
              {"scaling_w", c.scaling_w},
              {"scaling_z", c.scaling_z},
              {"ok", c.ok()},
              {"witnesses", c.witnesses}};
}

Json ReportBuilder::reduction(const ReductionReport& r) {
  Json sym = Json::array();
  for (const auto& c : r.symmetry) sym.push_back(certificate(c));
  Json j{{"reached", stage_name(r.reached)},
         {"success", r.success},
         {"message", r.message},
         {"algebra", algebra(r.algebra)},
         {"symmetry", sym}};
  j["transformation"] = r.transformation ? transformation(*r.transformation) : Json(nullptr);
  j["target"] = r.target ? system(*r.target) : Json(nullptr);
  j["classification"] = r.classification ? classification(*r.classification) : Json(nullptr);
  return j;
}

Json ReportBuilder::spec(const MASpec& s) {
  declare(s.sig());
  return Json{{"dimension", s.name()}, {"n", s.n}, {"kappas", exprs(s.kappas)}, {"alphas", exprs(s.alphas)},
              {"function", s.f}};
}

Json ReportBuilder::conditions(const ConditionReport& r) {
  return Json{{"indices", r.indices},
              {"hatted", exprs(r.hatted)},
              {"hat_map", exprs(r.hat_map)},
              {"solved", r.solved},
              {"conditions", exprs(r.conditions)},
              {"certificate", certificate(r.certificate)}};
}

Json ReportBuilder::finish(const std::string& command, const std::string& verdict, Json result) const {
  return Json{{"format", kReportFormat},
              {"command", command},
              {"verdict", verdict},
              {"symbols", symbols_json(decl_)},
              {"result", std::move(result)}};
}

Json symbols_json(const Declarations& decl) {
  Json sigs = Json::array();
  for (const auto& s : decl.signatures()) sigs.push_back(signature_json(s));
  Json params = Json::array();
  for (const auto& p : decl.parameters()) params.push_back(p);
  Json funcs = Json::array();
  for (const auto& [name, f] : decl.functions()) {
    Json args = Json::array();
    for (const auto& a : f.args) args.push_back(to_string(a));
    funcs.push_back(Json{{"name", name}, {"args", args}});
  }
  return Json{{"signatures", sigs}, {"parameters", params}, {"functions", funcs}};
}

Declarations declarations_from(const Json& symbols) {
  Declarations d;
  try {
    for (const auto& s : symbols.at("signatures")) d.add_signature(signature_from(s));
    for (const auto& p : symbols.at("parameters")) d.add_parameter(p.get<std::string>());
    for (const auto& f : symbols.at("functions")) {
      std::vector<Expr> args;
      for (const auto& a : f.at("args")) args.push_back(parse_expr(a.get<std::string>(), d));
      d.add_function(f.at("name").get<std::string>(), std::move(args));
    }
  } catch (const Json::exception& e) {
    throw SessionError(std::string("malformed symbols block: ") + e.what());
  }
  return d;
}

bool is_expression_key(const std::string& key) {
  static const std::set<std::string> keys = {
      "xi",         "eta",        "equations", "cleared_factors", "Z",       "W",
      "x_of",       "u_of",       "pivots",    "rank_pivots",     "coefficients",
      "lambda",     "unknown",    "value",     "hatted",          "hat_map", "conditions",
      "kappas",     "alphas",     "matrices",  "residual_source", "derived", "printed",
      "closed_form", "instantiated", "determinant"};
  return keys.count(key) > 0;
}

namespace {

Json reparse_walk(const Json& v, const Declarations& d);

Json reparse_value(const Json& v, const Declarations& d) {
  if (v.is_object()) return reparse_walk(v, d);
  if (v.is_string()) return print_expr(parse_expr(v.get<std::string>(), d), d);
  if (v.is_array()) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(reparse_value(x, d));
    return out;
  }
  return v;
}

Json reparse_walk(const Json& v, const Declarations& d) {
  if (v.is_object()) {
    Json out = Json::object();
    for (const auto& [k, x] : v.items())
      out[k] = is_expression_key(k) ? reparse_value(x, d) : reparse_walk(x, d);
    return out;
  }
  if (v.is_array()) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(reparse_walk(x, d));
    return out;
  }
  return v;
}

void text_walk(std::ostringstream& out, const Json& v, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_object() || (x.is_array() && !x.empty())) {
        out << pad << k << ":\n";
        text_walk(out, x, indent + 2);
      } else {
        out << pad << k << ": " << (x.is_array() ? "[]" : scalar(x)) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object() || (x.is_array() && !x.empty())) {
        out << pad << "-\n";
        text_walk(out, x, indent + 2);
      } else {
        out << pad << "- " << (x.is_array() ? "[]" : scalar(x)) << "\n";
      }
    }
  } else {
    out << pad << scalar(v) << "\n";
  }
}

}  // namespace

Json reparse_report(const Json& report) {
  Declarations d = declarations_from(report.at("symbols"));
  Json out = report;
  out["result"] = reparse_walk(report.at("result"), d);
  return out;
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

std::string render_text(const Json& report) {
  std::ostringstream out;
  out << report.value("command", "") << ": " << report.value("verdict", "") << "\n";
  if (report.contains("result")) text_walk(out, report.at("result"), 2);
  return out.str();
}

}  // namespace jetreduce
