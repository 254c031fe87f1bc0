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

#ifndef JETREDUCE_SYSTEM_HPP
#define JETREDUCE_SYSTEM_HPP

#include <map>
#include <vector>

#include "jetreduce/calculus.hpp"
#include "jetreduce/normal_form.hpp"

namespace jetreduce {

// First-order system Delta_k(x, u, u^(1)) = 0, polynomial in the jets.
struct PDESystem {
  Signature sig;
  std::vector<Expr> equations;
  // Factors multiplied into equation k when denominators were cleared.
  std::vector<std::vector<Expr>> cleared_factors;
};

// Polynomial in the jet variables of a ring, with coefficients that are
// polynomials in the remaining variables. Keys are jet monomials.
using JetSplit = std::map<Monomial, Poly, bool (*)(const Monomial&, const Monomial&)>;

bool monomial_greater(const Monomial& a, const Monomial& b);
std::vector<bool> jet_mask(const Ring& ring);
JetSplit split_jets(const Poly& p, const std::vector<bool>& is_jet);
// Highest total jet degree of p (0 for jet-free).
uint32_t jet_degree(const Poly& p, const std::vector<bool>& is_jet);
uint32_t min_jet_degree(const Poly& p, const std::vector<bool>& is_jet);
// Terms of p whose jet degree equals d.
Poly jet_part(const Poly& p, const std::vector<bool>& is_jet, uint32_t d);

}  // namespace jetreduce

#endif  // JETREDUCE_SYSTEM_HPP
