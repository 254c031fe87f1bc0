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

#include "jetreduce/ratfun.hpp"

#include <map>
#include <stdexcept>

namespace jetreduce {

namespace {

bool is_one(const Poly& p) { return p.is_constant() && p.constant_value().is_one(); }

Poly quo(const Poly& a, const Poly& g) {
  if (is_one(g)) return a;
  if (g.is_constant()) return a.divexact_scalar(g.constant_value());
  return *divide_exact(a, g);
}

}  // namespace

RatFun RatFun::fraction(Int num, Int den) { return make(Poly(std::move(num)), Poly(std::move(den))); }

RatFun RatFun::make(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  RatFun r;
  if (num.is_zero()) return r;
  Poly g = gcd(num, den);
  if (den.lc().sign() < 0) g = -g;
  r.num_ = quo(num, g);
  r.den_ = quo(den, g);
  return r;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (is_one(a.den_)) return RatFun(a.num_ + b.num_);
    return RatFun::make(a.num_ + b.num_, a.den_);
  }
  Poly g = gcd(a.den_, b.den_);
  if (is_one(g)) {
    RatFun r;
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    if (r.num_.is_zero()) r.den_ = Poly(1);
    return r;
  }
  Poly a1 = quo(a.den_, g), b1 = quo(b.den_, g);
  Poly t = a.num_ * b1 + b.num_ * a1;
  if (t.is_zero()) return RatFun();
  Poly g2 = gcd(t, g);
  RatFun r;
  r.num_ = quo(t, g2);
  r.den_ = a1 * quo(b.den_, g2);
  if (r.den_.lc().sign() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ * b.num_);
  Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  RatFun r;
  r.num_ = quo(a.num_, g1) * quo(b.num_, g2);
  r.den_ = quo(a.den_, g2) * quo(b.den_, g1);
  if (r.den_.lc().sign() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("division by the zero polynomial");
  RatFun r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.lc().sign() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun RatFun::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

RatFun sum(const std::vector<RatFun>& xs) {
  // Group by denominator so equal denominators are combined with one gcd.
  std::vector<Poly> polys;
  std::vector<std::pair<Poly, std::vector<Poly>>> groups;
  for (const auto& x : xs) {
    if (x.is_zero()) continue;
    if (x.is_polynomial()) {
      polys.push_back(x.num());
      continue;
    }
    bool placed = false;
    for (auto& [d, ns] : groups)
      if (d == x.den()) {
        ns.push_back(x.num());
        placed = true;
        break;
      }
    if (!placed) groups.emplace_back(x.den(), std::vector<Poly>{x.num()});
  }
  RatFun acc(sum(polys));
  for (auto& [d, ns] : groups) acc = acc + RatFun::make(sum(ns), d);
  return acc;
}

}  // namespace jetreduce
