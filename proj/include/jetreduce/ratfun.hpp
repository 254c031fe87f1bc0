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

#ifndef JETREDUCE_RATFUN_HPP
#define JETREDUCE_RATFUN_HPP

#include "jetreduce/poly.hpp"

namespace jetreduce {

// Quotient num/den of integer polynomials, kept canonical: gcd(num, den) = 1
// (integer content included) and lc(den) > 0. Zero is 0/1.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(long long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  static RatFun fraction(Int num, Int den);
  // Reduces num/den; throws std::domain_error when den is zero.
  static RatFun make(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant() && den_.constant_value().is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
  RatFun& operator*=(const RatFun& b) { return *this = *this * b; }
  RatFun inverse() const;
  RatFun pow(long e) const;

  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }
  std::size_t size() const { return num_.size() + den_.size(); }

 private:
  Poly num_, den_;
};

// Sum of many rational functions; polynomial summands are added in one pass.
RatFun sum(const std::vector<RatFun>& xs);

}  // namespace jetreduce

#endif  // JETREDUCE_RATFUN_HPP
