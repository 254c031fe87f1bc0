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

// jetreduce command-line driver. Exit status: 0 success, 2 verified-negative
// verdict, 1 error. Reports go to stdout, diagnostics to stderr.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jetreduce/errors.hpp"
#include "jetreduce/io/report.hpp"
#include "jetreduce/io/session.hpp"
#include "jetreduce/regression.hpp"

using namespace jetreduce;

namespace {

struct Options {
  std::string session;
  std::string format = "json";
  std::vector<std::string> names;
  std::string system;
  std::string transform;
  std::string dim;
  std::string spec;
  int mult_degree = -1;
  bool solve = false;
  std::vector<int> criteria;
};

struct Outcome {
  Json report;
  bool negative = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Session require_session(const Options& o) {
  if (o.session.empty()) throw UsageError("this command needs --session PATH");
  return load_session(o.session);
}

std::vector<VectorField> fields_of(const Session& s, const std::vector<std::string>& names) {
  std::vector<VectorField> out;
  for (const auto& n : names) out.push_back(s.field(n));
  return out;
}

std::optional<int> degree_of(const Options& o) {
  if (o.mult_degree < 0) return std::nullopt;
  return o.mult_degree;
}

Outcome cmd_bracket(const Options& o) {
  Session s = require_session(o);
  if (o.names.size() != 2) throw UsageError("bracket needs two field names");
  const VectorField& X = s.field(o.names[0]);
  const VectorField& Y = s.field(o.names[1]);
  ReportBuilder b(s.decl);
  Json fields = Json::object();
  fields[o.names[0]] = b.field(X);
  fields[o.names[1]] = b.field(Y);
  Json result{{"fields", fields}, {"bracket", b.field(lie_bracket(X, Y).canonical())}};
  return {b.finish("bracket", "ok", result), false};
}

Outcome cmd_check_algebra(const Options& o) {
  Session s = require_session(o);
  if (o.names.empty()) throw UsageError("check-algebra needs field names");
  AlgebraReport r = check_theorem1_structure(fields_of(s, o.names));
  ReportBuilder b(s.decl);
  Json result{{"fields", o.names}, {"algebra", b.algebra(r)}};
  bool ok = r.structure_ok;
  return {b.finish("check-algebra", ok ? "ok" : "negative", result), !ok};
}

Outcome cmd_check_symmetry(const Options& o) {
  Session s = require_session(o);
  if (o.names.size() != 1) throw UsageError("check-symmetry needs one field name");
  SymmetryCertificate c = check_symmetry(s.system(o.system), s.field(o.names[0]), degree_of(o));
  ReportBuilder b(s.decl);
  Json result{{"system", o.system}, {"field", o.names[0]}, {"certificate", b.certificate(c)}};
  return {b.finish("check-symmetry", c.admitted ? "ok" : "negative", result), !c.admitted};
}

Outcome cmd_canonical(const Options& o) {
  Session s = require_session(o);
  if (o.names.empty()) throw UsageError("canonical needs field names");
  auto fields = fields_of(s, o.names);
  ReportBuilder b(s.decl);
  PointTransformation t;
  if (!o.transform.empty()) {
    t = with_inverse(s.transform(o.transform));
  } else {
    try {
      t = canonical_for_translation_scaling(fields);
    } catch (const VerificationFailed& e) {
      Json result{{"fields", o.names}, {"message", e.what()}};
      return {b.finish("canonical", "negative", result), true};
    }
  }
  CanonicalCheck check = verify_canonical(t, fields);
  auto round_trip = round_trip_failures(t);
  Json result{{"fields", o.names},
              {"transformation", b.transformation(t)},
              {"check", b.canonical_check(check)},
              {"round_trip_failures", round_trip},
              {"jacobian", b.rank(jacobian_rank(t))}};
  bool ok = check.ok() && round_trip.empty();
  return {b.finish("canonical", ok ? "ok" : "negative", result), !ok};
}

Outcome cmd_reduce(const Options& o) {
  Session s = require_session(o);
  if (o.names.empty()) throw UsageError("reduce needs field names");
  ReductionReport r = reduce(s.system(o.system), fields_of(s, o.names), degree_of(o));
  ReportBuilder b(s.decl);
  Json result{{"system", o.system}, {"fields", o.names}, {"reduction", b.reduction(r)}};
  return {b.finish("reduce", r.success ? "ok" : "negative", result), !r.success};
}

Outcome cmd_classify(const Options& o) {
  Session s = require_session(o);
  const PDESystem& sys = s.system(o.system);
  ReportBuilder b(s.decl);
  Json result{{"system", o.system}, {"equations", b.exprs(sys.equations)}, {"classification", b.classification(classify(sys))}};
  return {b.finish("classify", "ok", result), false};
}

const MASpec& spec_of(const Session& s, const Options& o) {
  const MASpec& spec = s.maspec(o.spec);
  if (MASpec::dimension(o.dim) != spec.n)
    throw UsageError("maspec '" + o.spec + "' is " + spec.name() + ", not " + o.dim);
  return spec;
}

Outcome cmd_ma_build(const Options& o) {
  Session s = require_session(o);
  const MASpec& spec = spec_of(s, o);
  ReportBuilder b(s.decl);
  PDESystem sys = build_system(spec);
  Json result{{"spec", b.spec(spec)},
              {"system", b.system(sys)},
              {"shifted", b.system(affine_shift(sys, spec))},
              {"homogenization", Json{{"value", b.expr(homogenization_condition(spec))}}}};
  return {b.finish("ma build", "ok", result), false};
}

Outcome cmd_ma_conditions(const Options& o) {
  Session s = require_session(o);
  const MASpec& spec = spec_of(s, o);
  bool solve = o.solve || MASpec::dependent_kappas(spec.n).size() == 1;
  ConditionReport r = derive_conditions(spec, solve);
  ReportBuilder b(s.decl);
  Json result{{"spec", b.spec(spec)}, {"report", b.conditions(r)}};
  auto closed = s.closed_forms.find(o.spec);
  if (closed != s.closed_forms.end()) {
    std::vector<SymbolId> us;
    for (int a = 1; a <= spec.n; ++a) us.push_back(spec.sig().dep(a));
    std::vector<Expr> inst;
    for (const auto& c : r.conditions) inst.push_back(canonical(instantiate(c, spec.f, us, closed->second)));
    Json forced = Json::array();
    for (const auto& c : inst) {
      for (int i : MASpec::dependent_kappas(spec.n)) {
        const Expr& k = spec.kappa(i);
        if (k.kind() != ExprKind::Sym || symbols(c, true).empty()) continue;
        try {
          Expr v = solve_linear({c}, {k.symbol()}).front().second;
          forced.push_back(Json{{"unknown", b.expr(k)}, {"value", b.expr(v)}});
          break;
        } catch (const std::exception&) {
        }
      }
    }
    result["closed_form"] = b.expr(closed->second);
    result["instantiated"] = b.exprs(inst);
    result["forced"] = forced;
  }
  bool ok = r.certificate.admitted;
  return {b.finish("ma conditions", ok ? "ok" : "negative", result), !ok};
}

Outcome cmd_ma_von_karman(const Options&) {
  VonKarman vk = von_karman_example();
  ReportBuilder b(Declarations(vk.spec.sig()));
  Json result{{"spec", b.spec(vk.spec)},
              {"system", b.system(vk.system)},
              {"conditions", b.exprs(vk.conditions)},
              {"kappa2", Json{{"value", b.expr(vk.kappa2)}}},
              {"b", Json{{"value", b.expr(vk.b)}}}};
  return {b.finish("ma von-karman", "ok", result), false};
}

Outcome cmd_selftest(const Options& o) {
  std::vector<int> ids = o.criteria;
  if (ids.empty())
    for (int k = 1; k <= kCriterionCount; ++k) ids.push_back(k);
  bool all = true;
  Json list = Json::array();
  for (const auto& r : run_criteria(ids, [](const CriterionResult& r) { std::cerr << format_result(r) << "\n"; })) {
    all = all && r.pass;
    list.push_back(Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"seconds", r.seconds}, {"details", r.details}});
  }
  ReportBuilder b{Declarations()};
  return {b.finish("selftest", all ? "ok" : "negative", Json{{"criteria", list}}), !all};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry reduction of first-order PDE systems to quasilinear form"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--session", o.session, "session file (searched in JETREDUCE_SESSION_PATH and the bundled sessions)");
  app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));

  std::function<Outcome(const Options&)> run;
  auto on = [&](CLI::App* sub, Outcome (*f)(const Options&)) { sub->callback([&run, f] { run = f; }); };

  auto* bracket = app.add_subcommand("bracket", "Lie bracket of two fields");
  bracket->add_option("fields", o.names, "F G")->required()->expected(2);
  on(bracket, cmd_bracket);

  auto* algebra = app.add_subcommand("check-algebra", "commutator table and distribution rank");
  algebra->add_option("fields", o.names, "F1 .. Fk")->required();
  on(algebra, cmd_check_algebra);

  auto* symmetry = app.add_subcommand("check-symmetry", "multiplier certificate for one field");
  symmetry->add_option("system", o.system)->required();
  symmetry->add_option("field", o.names)->required()->expected(1);
  symmetry->add_option("--mult-degree", o.mult_degree, "largest multiplier degree")->check(CLI::NonNegativeNumber);
  on(symmetry, cmd_check_symmetry);

  auto* canon = app.add_subcommand("canonical", "canonical variables for translations plus a scaling");
  canon->add_option("fields", o.names, "F1 .. Fk")->required();
  canon->add_option("--transform", o.transform, "check this session transform instead of deriving one");
  on(canon, cmd_canonical);

  auto* red = app.add_subcommand("reduce", "full reduction pipeline");
  red->add_option("system", o.system)->required();
  red->add_option("fields", o.names, "F1 .. Fk")->required();
  red->add_option("--mult-degree", o.mult_degree, "largest multiplier degree")->check(CLI::NonNegativeNumber);
  on(red, cmd_reduce);

  auto* cls = app.add_subcommand("classify", "autonomy, homogeneity and quasilinearity");
  cls->add_option("system", o.system)->required();
  on(cls, cmd_classify);

  auto* ma = app.add_subcommand("ma", "Monge-Ampere systems");
  ma->require_subcommand(1);
  ma->fallthrough();
  auto* build = ma->add_subcommand("build", "first-order system of a spec");
  build->add_option("dim", o.dim)->required()->check(CLI::IsMember({"1p1", "2p1", "3p1"}));
  build->add_option("spec", o.spec)->required();
  on(build, cmd_ma_build);
  auto* conds = ma->add_subcommand("conditions", "symmetry conditions of a spec");
  conds->add_option("dim", o.dim)->required()->check(CLI::IsMember({"1p1", "2p1", "3p1"}));
  conds->add_option("spec", o.spec)->required();
  conds->add_flag("--solve", o.solve, "solve for the spec's own coefficients (slow with a symbolic shift)");
  on(conds, cmd_ma_conditions);
  auto* vk = ma->add_subcommand("von-karman", "Von Karman gas example");
  on(vk, cmd_ma_von_karman);

  auto* self = app.add_subcommand("selftest", "reference regression suite");
  self->add_option("--criteria", o.criteria, "criterion numbers (default: all)")->delimiter(',');
  on(self, cmd_selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    Outcome out = run(o);
    std::cout << (o.format == "text" ? render_text(out.report) : render_json(out.report));
    return out.negative ? 2 : 0;
  } catch (const SyntaxError& e) {
    std::cerr << "jetreduce: syntax error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "jetreduce: " << e.what() << "\n";
  }
  return 1;
}
