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

#include "jetreduce/system.hpp"

namespace jetreduce {

bool monomial_greater(const Monomial& a, const Monomial& b) { return compare(a, b) > 0; }

std::vector<bool> jet_mask(const Ring& ring) {
  std::vector<bool> mask(ring.size());
  for (std::size_t v = 0; v < ring.size(); ++v) mask[v] = ring.symbol(static_cast<Var>(v)).kind() == SymbolKind::Jet;
  return mask;
}

namespace {

std::pair<Monomial, Monomial> split(const Monomial& m, const std::vector<bool>& is_jet) {
  Monomial j, r;
  for (std::size_t k = 0; k < m.size(); ++k) {
    Var v = m.var(k);
    bool jet = v < is_jet.size() && is_jet[v];
    (jet ? j : r) = (jet ? j : r) * Monomial::of(v, m.exp(k));
  }
  return {j, r};
}

uint32_t jdeg(const Monomial& m, const std::vector<bool>& is_jet) {
  uint32_t d = 0;
  for (std::size_t k = 0; k < m.size(); ++k)
    if (m.var(k) < is_jet.size() && is_jet[m.var(k)]) d += m.exp(k);
  return d;
}

}  // namespace

JetSplit split_jets(const Poly& p, const std::vector<bool>& is_jet) {
  std::map<Monomial, std::vector<Term>, bool (*)(const Monomial&, const Monomial&)> parts(monomial_greater);
  for (const auto& t : p.terms()) {
    auto [j, r] = split(t.m, is_jet);
    parts[j].push_back(Term{r, t.c});
  }
  JetSplit out(monomial_greater);
  for (auto& [j, ts] : parts) out.emplace(j, Poly::from_terms(std::move(ts)));
  return out;
}

uint32_t jet_degree(const Poly& p, const std::vector<bool>& is_jet) {
  uint32_t d = 0;
  for (const auto& t : p.terms()) d = std::max(d, jdeg(t.m, is_jet));
  return d;
}

uint32_t min_jet_degree(const Poly& p, const std::vector<bool>& is_jet) {
  uint32_t d = ~0u;
  for (const auto& t : p.terms()) d = std::min(d, jdeg(t.m, is_jet));
  return p.is_zero() ? 0 : d;
}

Poly jet_part(const Poly& p, const std::vector<bool>& is_jet, uint32_t d) {
  std::vector<Term> out;
  for (const auto& t : p.terms())
    if (jdeg(t.m, is_jet) == d) out.push_back(t);
  return Poly::from_sorted(std::move(out));
}

}  // namespace jetreduce
