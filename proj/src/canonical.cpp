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

#include "jetreduce/canonical.hpp"

#include <stdexcept>

#include "jetreduce/errors.hpp"

namespace jetreduce {

namespace {

Bindings rename_u(const Signature& from, const Signature& to) {
  Bindings b;
  for (int a = 1; a <= from.m; ++a) b.emplace(from.dep(a), Expr(to.dep(a)));
  return b;
}

Bindings forward_bindings(const PointTransformation& t) {
  Bindings b;
  for (int j = 1; j <= t.target.n; ++j) b.emplace(t.target.indep(j), t.Z[j - 1]);
  for (int a = 1; a <= t.target.m; ++a) b.emplace(t.target.dep(a), t.W[a - 1]);
  return b;
}

Bindings inverse_bindings(const PointTransformation& t) {
  Bindings b;
  for (int i = 1; i <= t.source.n; ++i) b.emplace(t.source.indep(i), t.inverse->x_of[i - 1]);
  for (int a = 1; a <= t.source.m; ++a) b.emplace(t.source.dep(a), t.inverse->u_of[a - 1]);
  return b;
}

std::string label(const char* field, int i, const std::string& fam, int j) {
  return std::string(field) + std::to_string(i) + "(" + fam + std::to_string(j) + ")";
}

}  // namespace

PointTransformation PointTransformation::identity(const Signature& source, const std::string& z,
                                                  const std::string& w) {
  PointTransformation t;
  t.source = source;
  t.target = Signature{source.n, source.m, z, w};
  InverseMap inv;
  for (int i = 1; i <= source.n; ++i) {
    t.Z.emplace_back(source.indep(i));
    inv.x_of.emplace_back(t.target.indep(i));
  }
  for (int a = 1; a <= source.m; ++a) {
    t.W.emplace_back(source.dep(a));
    inv.u_of.emplace_back(t.target.dep(a));
  }
  t.inverse = std::move(inv);
  return t;
}

void PointTransformation::validate() const {
  if (source.n != target.n || source.m != target.m)
    throw std::invalid_argument("source and target signatures differ in shape");
  if (source.x == target.x || source.u == target.u)
    throw std::invalid_argument("source and target coordinates need distinct family names");
  if (static_cast<int>(Z.size()) != source.n || static_cast<int>(W.size()) != source.m)
    throw std::invalid_argument("transformation component count does not match its signature");
  for (const auto& e : Z)
    if (mentions(e, SymbolKind::Jet)) throw std::invalid_argument("point transformation depends on jets");
  for (const auto& e : W)
    if (mentions(e, SymbolKind::Jet)) throw std::invalid_argument("point transformation depends on jets");
  if (inverse && (static_cast<int>(inverse->x_of.size()) != source.n ||
                  static_cast<int>(inverse->u_of.size()) != source.m))
    throw std::invalid_argument("inverse component count does not match the signature");
}

PointTransformation PointTransformation::inverted() const {
  if (!inverse) throw UnsupportedShape("transformation has no inverse");
  PointTransformation t;
  t.source = target;
  t.target = source;
  t.Z = inverse->x_of;
  t.W = inverse->u_of;
  t.inverse = InverseMap{Z, W};
  return t;
}

InverseMap derive_inverse(const PointTransformation& t) {
  t.validate();
  const Signature& s = t.source;
  for (int a = 1; a <= s.m; ++a)
    if (!equivalent(t.W[a - 1], Expr(s.dep(a))))
      throw UnsupportedShape("automatic inverse needs w = u; supply the inverse explicitly");
  std::vector<Expr> eqs;
  std::vector<SymbolId> xs;
  for (int i = 1; i <= s.n; ++i) {
    eqs.push_back(Expr(t.target.indep(i)) - t.Z[i - 1]);
    xs.push_back(s.indep(i));
  }
  Solution sol;
  try {
    sol = solve_linear(eqs, xs);
  } catch (const std::invalid_argument&) {
    throw UnsupportedShape("automatic inverse needs z affine in x");
  } catch (const Error& e) {
    throw UnsupportedShape(std::string("z is not invertible in x: ") + e.what());
  }
  Bindings ren = rename_u(s, t.target);
  InverseMap inv;
  for (const auto& [sym, v] : sol) inv.x_of.push_back(canonical(substitute(v, ren)));
  for (int a = 1; a <= s.m; ++a) inv.u_of.emplace_back(t.target.dep(a));
  return inv;
}

PointTransformation with_inverse(PointTransformation t) {
  if (!t.inverse) t.inverse = derive_inverse(t);
  return t;
}

PointTransformation canonical_for_translation_scaling(const std::vector<VectorField>& fields, const std::string& z,
                                                      const std::string& w) {
  if (fields.empty()) throw UnsupportedShape("no fields");
  const Signature& s = fields[0].sig;
  if (static_cast<int>(fields.size()) != s.n + 1)
    throw UnsupportedShape("expected " + std::to_string(s.n + 1) + " fields");
  for (const auto& f : fields) {
    if (f.sig != s) throw SignatureMismatch("fields with different signatures");
    f.validate();
  }
  for (int i = 1; i <= s.n; ++i)
    if (!fields[i - 1].plus(VectorField::translation(s, i).scaled(Expr(-1LL))).is_zero())
      throw UnsupportedShape("field " + std::to_string(i) + " is not d/d" + s.x + std::to_string(i));
  const VectorField& last = fields.back();
  for (const auto& e : last.eta)
    if (!is_zero(e)) throw UnsupportedShape("last field moves the dependent variables");
  std::vector<Expr> g;
  for (int i = 1; i <= s.n; ++i) {
    Expr gi = canonical(Expr(s.indep(i)) - last.xi[i - 1]);
    for (const auto& sym : symbols(gi, true))
      if (sym.kind() == SymbolKind::Independent || sym.kind() == SymbolKind::Jet)
        throw UnsupportedShape("last field is not sum (x_i - g_i(u)) d/dx_i");
    g.push_back(gi);
  }

  PointTransformation t;
  t.source = s;
  t.target = Signature{s.n, s.m, z, w};
  Bindings ren = rename_u(s, t.target);
  InverseMap inv;
  for (int i = 1; i <= s.n; ++i) {
    t.Z.push_back(canonical(Expr(s.indep(i)) - g[i - 1]));
    inv.x_of.push_back(canonical(Expr(t.target.indep(i)) + substitute(g[i - 1], ren)));
  }
  for (int a = 1; a <= s.m; ++a) {
    t.W.emplace_back(s.dep(a));
    inv.u_of.emplace_back(t.target.dep(a));
  }
  t.inverse = std::move(inv);
  t.validate();

  CanonicalCheck c = verify_canonical(t, fields);
  if (!c.ok()) throw VerificationFailed("canonical variables fail: " + c.witnesses.front());
  if (auto f = round_trip_failures(t); !f.empty()) throw VerificationFailed("inverse fails: " + f.front());
  return t;
}

CanonicalCheck verify_canonical(const PointTransformation& t, const std::vector<VectorField>& fields) {
  t.validate();
  const Signature& s = t.source;
  CanonicalCheck c;
  c.translations = c.invariants = c.scaling_w = c.scaling_z = true;
  if (static_cast<int>(fields.size()) != s.n + 1) {
    c.translations = c.invariants = c.scaling_w = c.scaling_z = false;
    c.witnesses.push_back("expected " + std::to_string(s.n + 1) + " fields");
    return c;
  }
  for (const auto& f : fields)
    if (f.sig != s) throw SignatureMismatch("fields and transformation have different signatures");
  const std::string& zf = t.target.x;
  const std::string& wf = t.target.u;
  for (int i = 1; i <= s.n; ++i) {
    for (int j = 1; j <= s.n; ++j) {
      Expr v = canonical(fields[i - 1].apply(t.Z[j - 1]));
      Expr want(i == j ? 1LL : 0LL);
      if (!equivalent(v, want)) {
        c.translations = false;
        c.witnesses.push_back(label("X", i, zf, j) + " = " + to_string(v) + " != " + to_string(want));
      }
    }
    for (int a = 1; a <= s.m; ++a) {
      Expr v = canonical(fields[i - 1].apply(t.W[a - 1]));
      if (!is_zero(v)) {
        c.invariants = false;
        c.witnesses.push_back(label("X", i, wf, a) + " = " + to_string(v) + " != 0");
      }
    }
  }
  const VectorField& last = fields.back();
  for (int a = 1; a <= s.m; ++a) {
    Expr v = canonical(last.apply(t.W[a - 1]));
    if (!is_zero(v)) {
      c.scaling_w = false;
      c.witnesses.push_back(label("X", s.n + 1, wf, a) + " = " + to_string(v) + " != 0");
    }
  }
  for (int j = 1; j <= s.n; ++j) {
    Expr v = canonical(last.apply(t.Z[j - 1]));
    if (!equivalent(v, t.Z[j - 1])) {
      c.scaling_z = false;
      c.witnesses.push_back(label("X", s.n + 1, zf, j) + " = " + to_string(v) + " != " + zf + std::to_string(j));
    }
  }
  return c;
}

std::vector<std::string> round_trip_failures(const PointTransformation& t) {
  t.validate();
  if (!t.inverse) return {"no inverse"};
  std::vector<std::string> out;
  Bindings fwd = forward_bindings(t);
  Bindings inv = inverse_bindings(t);
  const Signature& s = t.source;
  for (int i = 1; i <= s.n; ++i) {
    if (!equivalent(substitute(t.inverse->x_of[i - 1], fwd), Expr(s.indep(i))))
      out.push_back(s.x + std::to_string(i) + "(Z, W) != " + s.x + std::to_string(i));
    if (!equivalent(substitute(t.Z[i - 1], inv), Expr(t.target.indep(i))))
      out.push_back("Z" + std::to_string(i) + "(x_of, u_of) != " + t.target.x + std::to_string(i));
  }
  for (int a = 1; a <= s.m; ++a) {
    if (!equivalent(substitute(t.inverse->u_of[a - 1], fwd), Expr(s.dep(a))))
      out.push_back(s.u + std::to_string(a) + "(Z, W) != " + s.u + std::to_string(a));
    if (!equivalent(substitute(t.W[a - 1], inv), Expr(t.target.dep(a))))
      out.push_back("W" + std::to_string(a) + "(x_of, u_of) != " + t.target.u + std::to_string(a));
  }
  return out;
}

RankReport jacobian_rank(const PointTransformation& t) {
  t.validate();
  const Signature& s = t.source;
  std::vector<VectorField> rows;
  auto gradient = [&](const Expr& e) {
    VectorField g = VectorField::zero(s);
    for (int i = 1; i <= s.n; ++i) g.xi[i - 1] = diff(e, s.indep(i));
    for (int a = 1; a <= s.m; ++a) g.eta[a - 1] = diff(e, s.dep(a));
    return g;
  };
  for (const auto& e : t.Z) rows.push_back(gradient(e));
  for (const auto& e : t.W) rows.push_back(gradient(e));
  return distribution_rank_report(rows);
}

}  // namespace jetreduce
