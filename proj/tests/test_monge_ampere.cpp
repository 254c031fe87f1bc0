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


#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "jetreduce/errors.hpp"
#include "jetreduce/monge_ampere.hpp"
#include "jetreduce/normal_form.hpp"
#include "jetreduce/transform.hpp"

using namespace jetreduce;

namespace {

// Permutation expansion, independent of the cofactor recursion.
Expr leibniz_det(const std::vector<std::vector<Expr>>& m) {
  std::vector<int> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  std::vector<Expr> terms;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b) inversions += p[a] > p[b];
    std::vector<Expr> f{Expr(inversions % 2 ? -1 : 1)};
    for (std::size_t r = 0; r < p.size(); ++r) f.push_back(m[r][p[r]]);
    terms.push_back(Expr::product(f));
  } while (std::next_permutation(p.begin(), p.end()));
  return Expr::sum(terms);
}

}  // namespace

TEST_CASE("coefficient counts per dimension") {
  CHECK(MASpec::kappa_count(2) == 5);
  CHECK(MASpec::kappa_count(3) == 14);
  CHECK(MASpec::kappa_count(4) == 43);
  CHECK(MASpec::alpha_count(2) == 3);
  CHECK(MASpec::alpha_count(3) == 6);
  CHECK(MASpec::alpha_count(4) == 10);
  CHECK(MASpec::dependent_kappas(2) == std::vector<int>{1});
  auto d4 = MASpec::dependent_kappas(4);
  CHECK(std::find(d4.begin(), d4.end(), 24) == d4.end());
  CHECK(d4.size() == 31);
  CHECK(MASpec::dimension("2p1") == 3);
  CHECK_THROWS_AS(MASpec::dimension("4p1"), std::invalid_argument);
}

TEST_CASE("index maps are bijections onto contiguous ranges") {
  std::set<int> r;
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) r.insert(r_index(i, j));
  CHECK(r.size() == 10);
  CHECK(*r.begin() == 2);
  CHECK(*r.rbegin() == 11);

  std::set<int> sigma;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) {
      sigma.insert(sigma_index(a, b));
      pairs.emplace_back(a, b);
    }
  CHECK(sigma == std::set<int>{1, 2, 3, 4, 5, 6});

  std::set<int> s;
  for (const auto& [k, l] : pairs)
    for (const auto& [m, n] : pairs) {
      CHECK(s_index(k, l, m, n) == s_index(m, n, k, l));
      s.insert(s_index(k, l, m, n));
    }
  CHECK(s.size() == 21);
  CHECK(*s.begin() == 12);
  CHECK(*s.rbegin() == 32);

  IndexMaps im = index_maps(1, 2, 1, 2, 3, 4);
  CHECK(im.sigma_kl == 1);
  CHECK(im.sigma_mn == 6);
}

TEST_CASE("index maps reject indices outside their range") {
  CHECK_THROWS_AS(r_index(0, 1), IndexOutOfRange);
  CHECK_THROWS_AS(r_index(3, 2), IndexOutOfRange);
  CHECK_THROWS_AS(sigma_index(2, 2), IndexOutOfRange);
  CHECK_THROWS_AS(sigma_index(1, 5), IndexOutOfRange);
  CHECK_THROWS_AS(s_index(1, 1, 1, 2), IndexOutOfRange);
}

TEST_CASE("determinant agrees with the permutation expansion") {
  for (int k = 2; k <= 4; ++k) {
    HessianPack hp = hessian_pack(k);
    CHECK(is_zero(determinant(hp.matrix) - leibniz_det(hp.matrix)));
    CHECK(is_zero(hp.H - leibniz_det(hp.matrix)));
  }
}

TEST_CASE("cofactor expansion along every row") {
  for (int k = 2; k <= 4; ++k) {
    HessianPack hp = hessian_pack(k);
    for (int i = 1; i <= k; ++i)
      for (int l = 1; l <= k; ++l) {
        std::vector<Expr> terms;
        for (int j = 1; j <= k; ++j)
          terms.push_back(hp.matrix[i - 1][j - 1] * hp.cofactor.at({std::min(l, j), std::max(l, j)}));
        Expr expected = i == l ? hp.H : Expr(0);
        CHECK(is_zero(Expr::sum(terms) - expected));
      }
  }
}

TEST_CASE("derivative of the determinant in an entry") {
  HessianPack hp = hessian_pack(3);
  for (const auto& [ij, dh] : hp.dH) {
    Expr direct = diff(hp.H, SymbolId::jet("u", ij.first, ij.second));
    CHECK(is_zero(dh - direct));
    Expr c = hp.cofactor.at(ij);
    CHECK(is_zero(direct - (ij.first == ij.second ? c : Expr(2) * c)));
  }
}

TEST_CASE("system shape per dimension") {
  for (int n = 2; n <= 4; ++n) {
    MASpec spec = MASpec::generic(n);
    CHECK(ma_basis(n).size() == static_cast<std::size_t>(MASpec::kappa_count(n) - 1));
    PDESystem sys = build_system(spec);
    CHECK(sys.equations.size() == static_cast<std::size_t>(n * (n - 1) / 2 + 1));
    CHECK(ma_fields(spec).size() == static_cast<std::size_t>(n + 1));
  }
}

TEST_CASE("homogenization removes the jet-free part") {
  for (int n = 2; n <= 3; ++n) {
    MASpec spec = MASpec::generic(n);
    ClassificationReport before = classify(affine_shift(build_system(spec), spec));
    REQUIRE(before.residual_source);
    MASpec h = homogenized(spec);
    ClassificationReport after = classify(affine_shift(build_system(h), h));
    CHECK_FALSE(after.residual_source);
  }
}

TEST_CASE("hatted coefficients reduce to the kappas without a shift") {
  MASpec spec = MASpec::generic(3);
  for (auto& a : spec.alphas) a = Expr(0);
  std::vector<Expr> hats = hatted_coefficients(spec);
  REQUIRE(hats.size() == 13);
  for (int i = 1; i <= 13; ++i) CHECK(is_zero(hats[i - 1] - spec.kappa(i)));
}

TEST_CASE("plane conditions are certified") {
  ConditionReport r = derive_conditions(MASpec::generic(2));
  CHECK(r.solved);
  CHECK(r.conditions.size() == 1);
  CHECK(r.indices == std::vector<int>{1});
  CHECK(r.certificate.admitted);
}

TEST_CASE("Von Karman example has three conditions") {
  VonKarman vk = von_karman_example();
  CHECK(vk.conditions.size() == 3);
  CHECK_FALSE(classify(vk.system).residual_source);
}

TEST_CASE("specs with jet-dependent kappas are rejected") {
  MASpec spec = MASpec::generic(2);
  spec.kappas[1] = Expr(SymbolId::jet("u", 1, 1));
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = MASpec::generic(2);
  spec.kappas.pop_back();
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}
