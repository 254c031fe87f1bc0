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

#include "jetreduce/io/session.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jetreduce/errors.hpp"

namespace jetreduce {

namespace {

struct Line {
  int number = 0;  // first physical line
  int column = 1;  // column of text[0]
  std::string text;
};

std::string strip_comment(const std::string& s) {
  auto k = s.find('#');
  return k == std::string::npos ? s : s.substr(0, k);
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool continues(const std::string& s, int depth) {
  if (depth > 0) return true;
  std::string t = trim(s);
  if (t.empty()) return false;
  char c = t.back();
  return c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == ',' || c == '\\';
}

std::vector<Line> logical_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  Line cur;
  int depth = 0;
  bool open = false;
  while (std::getline(in, raw)) {
    ++number;
    std::string s = strip_comment(raw);
    if (!open) {
      std::size_t lead = 0;
      while (lead < s.size() && std::isspace(static_cast<unsigned char>(s[lead]))) ++lead;
      if (lead == s.size()) continue;
      cur = Line{number, static_cast<int>(lead) + 1, s.substr(lead)};
    } else {
      cur.text += "\n" + s;
    }
    for (char c : s) {
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') --depth;
    }
    open = continues(s, depth);
    if (!open) {
      std::string t = cur.text;
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
      if (!t.empty() && t.back() == '\\') t.pop_back();
      cur.text = t;
      out.push_back(cur);
      depth = 0;
    }
  }
  if (open) out.push_back(cur);
  return out;
}

[[noreturn]] void fail(const std::string& origin, const Line& l, const std::string& msg) {
  throw SessionError(origin + ":" + std::to_string(l.number) + ": " + msg);
}

// Whitespace tokens of a statement head.
std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Splits on top-level separators, keeping offsets.
std::vector<std::pair<std::size_t, std::string>> split_top(const std::string& s, char sep) {
  std::vector<std::pair<std::size_t, std::string>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || (s[k] == sep && depth == 0)) {
      out.emplace_back(start, s.substr(start, k - start));
      start = k + 1;
      continue;
    }
    char c = s[k];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
  }
  return out;
}

// Line and column of offset k inside a logical line.
std::pair<int, int> position(const Line& l, std::size_t k) {
  int line = l.number, col = l.column;
  for (std::size_t q = 0; q < k && q < l.text.size(); ++q) {
    if (l.text[q] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class Builder {
 public:
  Builder(Session& s) : s_(s) {}

  void run(const std::string& text) {
    auto lines = logical_lines(text);
    for (std::size_t k = 0; k < lines.size(); ++k) {
      const Line& l = lines[k];
      auto w = words(l.text);
      const std::string& head = w[0];
      if (head == "signature") {
        signature(l, w);
      } else if (!have_sig_) {
        fail(s_.origin, l, "the first statement must be 'signature'");
      } else if (head == "param") {
        for (std::size_t q = 1; q < w.size(); ++q) s_.decl.add_parameter(w[q]);
      } else if (head == "function") {
        functions(l);
      } else if (head == "let") {
        let(l);
      } else if (head == "field") {
        field(l);
      } else if (head == "system" || head == "transform" || head == "maspec") {
        std::vector<Line> body;
        std::size_t q = k + 1;
        for (; q < lines.size() && trim(lines[q].text) != "end"; ++q) body.push_back(lines[q]);
        if (q == lines.size()) fail(s_.origin, l, "missing 'end' for " + head);
        if (head == "system") system(l, w, body);
        if (head == "transform") transform(l, w, body);
        if (head == "maspec") maspec(l, w, body);
        k = q;
      } else {
        fail(s_.origin, l, "unknown statement '" + head + "'");
      }
    }
    if (!have_sig_) throw SessionError(s_.origin + ": no signature");
  }

 private:
  Expr expr_at(const Line& l, std::size_t offset, const std::string& text) {
    auto [line, col] = position(l, offset);
    return parse_expr(text, s_.decl, line, col);
  }

  // Offset of the text after the first occurrence of c.
  std::size_t after(const Line& l, char c) {
    auto k = l.text.find(c);
    if (k == std::string::npos) fail(s_.origin, l, std::string("expected '") + c + "'");
    return k + 1;
  }

  std::string name_before(const Line& l, std::size_t head_len, std::size_t end) {
    std::string n = trim(l.text.substr(head_len, end - head_len));
    if (n.empty()) fail(s_.origin, l, "missing name");
    return n;
  }

  void fresh(const Line& l, const std::string& name) {
    if (taken_.count(name)) fail(s_.origin, l, "duplicate name '" + name + "'");
    taken_.insert(name);
  }

  void signature(const Line& l, const std::vector<std::string>& w) {
    if (have_sig_) fail(s_.origin, l, "signature declared twice");
    if (w.size() != 3 && w.size() != 5) fail(s_.origin, l, "usage: signature n m [x u]");
    Signature sig;
    try {
      sig.n = std::stoi(w[1]);
      sig.m = std::stoi(w[2]);
    } catch (const std::exception&) {
      fail(s_.origin, l, "signature sizes must be integers");
    }
    if (sig.n < 1 || sig.m < 1 || sig.n > 16 || sig.m > 16) fail(s_.origin, l, "signature sizes out of range");
    if (w.size() == 5) {
      sig.x = w[3];
      sig.u = w[4];
    }
    s_.decl.add_signature(sig);
    have_sig_ = true;
  }

  void functions(const Line& l) {
    std::size_t p = std::string("function").size();
    const std::string& t = l.text;
    while (true) {
      while (p < t.size() && (std::isspace(static_cast<unsigned char>(t[p])) || t[p] == ',')) ++p;
      if (p >= t.size()) break;
      std::size_t open = t.find('(', p);
      if (open == std::string::npos) fail(s_.origin, l, "function declaration needs arguments");
      std::string name = trim(t.substr(p, open - p));
      int depth = 0;
      std::size_t close = open;
      for (; close < t.size(); ++close) {
        if (t[close] == '(') ++depth;
        if (t[close] == ')' && --depth == 0) break;
      }
      if (close >= t.size()) fail(s_.origin, l, "unbalanced parentheses");
      std::vector<Expr> args;
      for (auto& [off, a] : split_top(t.substr(open + 1, close - open - 1), ','))
        args.push_back(expr_at(l, open + 1 + off, a));
      for (const auto& a : args)
        if (mentions(a, SymbolKind::Jet)) fail(s_.origin, l, "function arguments may not contain jets");
      fresh(l, name);
      s_.decl.add_function(name, std::move(args));
      p = close + 1;
    }
  }

  void let(const Line& l) {
    std::size_t eq = after(l, '=');
    std::string name = name_before(l, 3, eq - 1);
    Expr v = expr_at(l, eq, l.text.substr(eq));
    fresh(l, name);
    s_.decl.add_named(name, v);
  }

  std::vector<Expr> expr_list(const Line& l, std::size_t offset, const std::string& text) {
    std::vector<Expr> out;
    if (trim(text).empty()) return out;
    for (auto& [off, e] : split_top(text, ',')) out.push_back(expr_at(l, offset + off, e));
    return out;
  }

  void field(const Line& l) {
    std::size_t eq = after(l, '=');
    std::string name = name_before(l, 5, eq - 1);
    const Signature& sig = s_.decl.primary();
    std::string rhs = trim(l.text.substr(eq));
    VectorField X = VectorField::zero(sig);
    auto rw = words(rhs);
    if (rw.size() == 2 && rw[0] == "translation") {
      int i = std::atoi(rw[1].c_str());
      if (i < 1 || i > sig.n) fail(s_.origin, l, "translation index out of range");
      X = VectorField::translation(sig, i);
    } else {
      std::size_t open = l.text.find('[', eq);
      std::size_t close = l.text.rfind(']');
      if (open == std::string::npos || close == std::string::npos || close < open)
        fail(s_.origin, l, "field body must be [xi | eta] or 'translation i'");
      auto parts = split_top(l.text.substr(open + 1, close - open - 1), '|');
      if (parts.size() > 2) fail(s_.origin, l, "field body has more than one '|'");
      X.xi = expr_list(l, open + 1 + parts[0].first, parts[0].second);
      if (parts.size() == 2) X.eta = expr_list(l, open + 1 + parts[1].first, parts[1].second);
      if (static_cast<int>(X.xi.size()) != sig.n)
        fail(s_.origin, l, "field needs " + std::to_string(sig.n) + " xi components");
      if (X.eta.empty()) X.eta.assign(sig.m, Expr(0LL));
      if (static_cast<int>(X.eta.size()) != sig.m)
        fail(s_.origin, l, "field needs " + std::to_string(sig.m) + " eta components");
      try {
        X.validate();
      } catch (const std::invalid_argument& e) {
        fail(s_.origin, l, e.what());
      }
    }
    fresh(l, name);
    s_.fields.emplace(name, std::move(X));
  }

  static std::map<std::string, std::string> options(const std::vector<std::string>& w, std::size_t from) {
    std::map<std::string, std::string> o;
    for (std::size_t k = from; k < w.size(); ++k) {
      auto eq = w[k].find('=');
      if (eq == std::string::npos)
        o[w[k]] = "";
      else
        o[w[k].substr(0, eq)] = w[k].substr(eq + 1);
    }
    return o;
  }

  MASpec ma_spec(const Line& l, const std::string& dim, const std::map<std::string, std::string>& o) {
    int n = 0;
    try {
      n = MASpec::dimension(dim);
    } catch (const std::invalid_argument& e) {
      fail(s_.origin, l, e.what());
    }
    const Signature& sig = s_.decl.primary();
    if (sig.n != n || sig.m != n || sig.x != "x" || sig.u != "u")
      fail(s_.origin, l, dim + " needs 'signature " + std::to_string(n) + " " + std::to_string(n) + "'");
    for (const auto& [k, v] : o)
      if (k != "kappa" && k != "alpha" && k != "f" && k != "homogeneous")
        fail(s_.origin, l, "unknown option '" + k + "'");
    auto get = [&](const char* k, const char* d) { return o.count(k) ? o.at(k) : std::string(d); };
    std::string alpha = get("alpha", "0");
    MASpec spec = MASpec::generic(n, get("kappa", "k"), alpha == "0" ? "a" : alpha, get("f", "f"));
    if (alpha == "0")
      for (auto& a : spec.alphas) a = Expr(0LL);
    declare_spec(l, spec);
    return spec;
  }

  void declare_spec(const Line& l, const MASpec& spec) {
    try {
      for (const auto& k : spec.kappas) s_.decl.absorb(k);
      for (const auto& a : spec.alphas) s_.decl.absorb(a);
      s_.decl.absorb(spec.f_derivative({1}));
    } catch (const SessionError& e) {
      fail(s_.origin, l, e.what());
    }
  }

  SymbolId impose_target(const Line& l, const std::string& name) {
    if (const FunctionDecl* f = s_.decl.function(name)) return SymbolId::opaque(name, {}, f->args);
    if (s_.decl.is_parameter(name)) return SymbolId::parameter(name);
    fail(s_.origin, l, "'" + name + "' is neither a function nor a parameter");
  }

  void system(const Line& l, const std::vector<std::string>& w, const std::vector<Line>& body) {
    if (w.size() != 2) fail(s_.origin, l, "usage: system NAME");
    PDESystem sys;
    sys.sig = s_.decl.primary();
    for (const auto& b : body) {
      auto bw = words(b.text);
      if (bw[0] == "eq") {
        sys.equations.push_back(expr_at(b, 2, b.text.substr(2)));
      } else if (bw[0] == "ma") {
        if (bw.size() < 2) fail(s_.origin, b, "usage: ma 1p1|2p1|3p1 [options]");
        auto o = options(bw, 2);
        MASpec spec = ma_spec(b, bw[1], o);
        if (o.count("homogeneous")) spec = homogenized(spec);
        declare_spec(b, spec);
        PDESystem m = affine_shift(build_system(spec), spec);
        for (auto& e : m.equations) sys.equations.push_back(e);
      } else if (bw[0] == "impose") {
        std::size_t colon = after(b, ':');
        std::string name = trim(b.text.substr(6, colon - 7));
        SymbolId target = impose_target(b, name);
        Expr rel = expr_at(b, colon, b.text.substr(colon));
        Expr value;
        try {
          value = solve_linear({rel}, {target}).front().second;
        } catch (const std::exception& e) {
          fail(s_.origin, b, "cannot solve for '" + name + "': " + e.what());
        }
        Bindings bind{{target, value}};
        for (auto& e : sys.equations) e = substitute(e, bind);
      } else {
        fail(s_.origin, b, "unknown system statement '" + bw[0] + "'");
      }
    }
    sys.cleared_factors.assign(sys.equations.size(), {});
    for (std::size_t k = 0; k < sys.equations.size(); ++k) {
      Expr& e = sys.equations[k];
      RationalNormalForm nf = normalize(e);
      Ring ring(nf.vars);
      e = ring.to_expr(nf.num);
      if (!nf.den.is_constant()) sys.cleared_factors[k].push_back(ring.to_expr(nf.den));
      if (mentions(e, SymbolKind::Jet) && !mentions(e, SymbolKind::Jet, sys.sig.u))
        fail(s_.origin, l, "system equations use jets of a foreign family");
    }
    fresh(l, w[1]);
    s_.systems.emplace(w[1], std::move(sys));
  }

  void transform(const Line& l, const std::vector<std::string>& w, const std::vector<Line>& body) {
    if (w.size() != 2 && w.size() != 4) fail(s_.origin, l, "usage: transform NAME [z w]");
    const Signature src = s_.decl.primary();
    PointTransformation t;
    t.source = src;
    t.target = Signature{src.n, src.m, w.size() == 4 ? w[2] : "z", w.size() == 4 ? w[3] : "w"};
    try {
      s_.decl.add_signature(t.target);
    } catch (const SessionError& e) {
      fail(s_.origin, l, e.what());
    }
    t.Z.assign(src.n, Expr());
    t.W.assign(src.m, Expr());
    InverseMap inv;
    inv.x_of.assign(src.n, Expr());
    inv.u_of.assign(src.m, Expr());
    std::vector<bool> zs(src.n), ws(src.m), xs(src.n), us(src.m);
    for (const auto& b : body) {
      std::size_t eq = after(b, '=');
      std::string lhs = trim(b.text.substr(0, eq - 1));
      Expr rhs = expr_at(b, eq, b.text.substr(eq));
      Expr target = parse_expr(lhs, s_.decl, b.number, b.column);
      if (target.kind() != ExprKind::Sym) fail(s_.origin, b, "left side must be a coordinate");
      const SymbolId& sym = target.symbol();
      auto set = [&](std::vector<Expr>& dst, std::vector<bool>& seen, int idx) {
        if (seen[idx - 1]) fail(s_.origin, b, "'" + lhs + "' assigned twice");
        seen[idx - 1] = true;
        dst[idx - 1] = rhs;
      };
      if (sym.kind() == SymbolKind::Independent && sym.name() == t.target.x) {
        set(t.Z, zs, sym.i());
      } else if (sym.kind() == SymbolKind::Dependent && sym.name() == t.target.u) {
        set(t.W, ws, sym.a());
      } else if (sym.kind() == SymbolKind::Independent && sym.name() == src.x) {
        set(inv.x_of, xs, sym.i());
      } else if (sym.kind() == SymbolKind::Dependent && sym.name() == src.u) {
        set(inv.u_of, us, sym.a());
      } else {
        fail(s_.origin, b, "left side must be a source or target coordinate");
      }
    }
    for (bool z : zs)
      if (!z) fail(s_.origin, l, "every " + t.target.x + "_j needs a definition");
    for (bool x : ws)
      if (!x) fail(s_.origin, l, "every " + t.target.u + "_A needs a definition");
    bool any_inv = false, all_inv = true;
    for (auto v : {xs, us})
      for (bool b : v) {
        any_inv = any_inv || b;
        all_inv = all_inv && b;
      }
    if (any_inv && !all_inv) fail(s_.origin, l, "inverse must define every source coordinate");
    if (all_inv) t.inverse = std::move(inv);
    try {
      t.validate();
    } catch (const std::invalid_argument& e) {
      fail(s_.origin, l, e.what());
    }
    fresh(l, w[1]);
    s_.transforms.emplace(w[1], std::move(t));
  }

  void maspec(const Line& l, const std::vector<std::string>& w, const std::vector<Line>& body) {
    if (w.size() < 3) fail(s_.origin, l, "usage: maspec NAME 1p1|2p1|3p1 [options]");
    auto o = options(w, 3);
    if (o.count("homogeneous")) fail(s_.origin, l, "'homogeneous' applies to systems only");
    MASpec spec = ma_spec(l, w[2], o);
    for (const auto& b : body) {
      auto bw = words(b.text);
      std::size_t eq = after(b, '=');
      if (trim(b.text.substr(0, eq - 1)) == "f") {
        Expr v = expr_at(b, eq, b.text.substr(eq));
        if (mentions(v, SymbolKind::Independent) || mentions(v, SymbolKind::Jet) || mentions(v, SymbolKind::Opaque))
          fail(s_.origin, b, "closed form must depend on u only");
        s_.closed_forms[w[1]] = v;
        continue;
      }
      if (bw.size() < 2 || (bw[0] != "kappa" && bw[0] != "alpha")) fail(s_.origin, b, "expected 'kappa i =' or 'alpha i ='");
      int i = std::atoi(bw[1].c_str());
      Expr v = expr_at(b, eq, b.text.substr(eq));
      auto& dst = bw[0] == "kappa" ? spec.kappas : spec.alphas;
      if (i < 1 || i > static_cast<int>(dst.size())) fail(s_.origin, b, "index out of range");
      dst[i - 1] = v;
    }
    try {
      spec.validate();
    } catch (const std::invalid_argument& e) {
      fail(s_.origin, l, e.what());
    }
    fresh(l, w[1]);
    s_.maspecs.emplace(w[1], std::move(spec));
  }

  Session& s_;
  bool have_sig_ = false;
  std::set<std::string> taken_;
};

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw SessionError(std::string("no ") + what + " named '" + name + "'");
  return it->second;
}

}  // namespace

const VectorField& Session::field(const std::string& name) const { return lookup(fields, name, "field"); }
const PDESystem& Session::system(const std::string& name) const { return lookup(systems, name, "system"); }
const PointTransformation& Session::transform(const std::string& name) const {
  return lookup(transforms, name, "transform");
}
const MASpec& Session::maspec(const std::string& name) const { return lookup(maspecs, name, "maspec"); }

Session parse_session(const std::string& text, const std::string& origin) {
  Session s;
  s.origin = origin;
  Builder(s).run(text);
  return s;
}

std::vector<std::string> session_search_path() {
  std::vector<std::string> out;
  if (const char* env = std::getenv("JETREDUCE_SESSION_PATH")) {
    std::string p = env;
    for (auto& [off, d] : split_top(p, ':'))
      if (!d.empty()) out.push_back(d);
  }
#ifdef JETREDUCE_SOURCE_DIR
  out.push_back(std::string(JETREDUCE_SOURCE_DIR) + "/sessions");
#endif
  return out;
}

std::string resolve_session_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path) || fs::path(path).is_absolute()) return path;
  for (const auto& dir : session_search_path()) {
    fs::path p = fs::path(dir) / path;
    if (fs::exists(p)) return p.string();
    p += ".session";
    if (fs::exists(p)) return p.string();
  }
  return path;
}

Session load_session(const std::string& path) {
  std::string resolved = resolve_session_path(path);
  std::ifstream in(resolved);
  if (!in) throw SessionError("cannot open session file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str(), resolved);
}

}  // namespace jetreduce
