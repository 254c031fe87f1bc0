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

#ifndef JETREDUCE_POLY_HPP
#define JETREDUCE_POLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "jetreduce/integer.hpp"

namespace jetreduce {

using Var = uint32_t;

// Sparse exponent vector. Entries are packed as (var << 16) | exp with vars
// ascending. Ordering is graded lex where a smaller var index is more
// significant.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Var v, uint32_t e = 1);

  uint32_t degree() const { return deg_; }
  std::size_t size() const { return d_.size(); }
  bool is_one() const { return d_.empty(); }
  Var var(std::size_t k) const { return d_[k] >> 16; }
  uint32_t exp(std::size_t k) const { return d_[k] & 0xffffu; }
  uint32_t exp_of(Var v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& b) const;
  // Requires divides(a, b) == true for b / a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial min(const Monomial& a, const Monomial& b);
  Monomial without(Var v) const;
  Monomial renamed(const std::vector<Var>& map) const;

  friend int compare(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.d_ == b.d_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  std::size_t hash() const;

 private:
  void push(Var v, uint32_t e) {
    d_.push_back((v << 16) | e);
    deg_ += e;
  }
  boost::container::small_vector<uint32_t, 6> d_;
  uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial m;
  Int c;
};

// Polynomial over Z with terms sorted by decreasing monomial order.
class Poly {
 public:
  Poly() = default;
  Poly(long long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(Int c);
  static Poly var(Var v, uint32_t e = 1);
  static Poly monomial(Monomial m, Int c);
  // Terms in arbitrary order with possible repeats; they are combined.
  static Poly from_terms(std::vector<Term> terms);
  static Poly from_sorted(std::vector<Term> terms) {
    Poly p;
    p.t_ = std::move(terms);
    return p;
  }

  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  Int constant_value() const;
  const Term& lt() const { return t_.front(); }
  const Int& lc() const { return t_.front().c; }
  uint32_t total_degree() const;
  uint32_t degree(Var v) const;
  std::vector<Var> vars() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  Poly scaled(const Int& c) const;
  Poly times(const Monomial& m, const Int& c) const;
  // Coefficients divided exactly by c.
  Poly divexact_scalar(const Int& c) const;
  Poly divexact_monomial(const Monomial& m) const;
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  std::size_t hash() const;

  // Integer content (positive) and primitive part with positive leading coefficient.
  Int content() const;
  Monomial monomial_content() const;
  Poly derivative(Var v) const;
  // Coefficients c_k of v^k (no v in c_k), k = 0..degree(v).
  std::vector<Poly> coefficients(Var v) const;
  static Poly from_coefficients(const std::vector<Poly>& c, Var v);
  Poly renamed(const std::vector<Var>& map) const;

 private:
  std::vector<Term> t_;
};

// Sum of many polynomials in one pass.
Poly sum(const std::vector<Poly>& ps);

// Exact quotient a / b if b divides a over Z, else nullopt.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Greatest common divisor over Z with positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

// Leading-coefficient sign normalisation helper: returns -1 when lc < 0.
inline int lc_sign(const Poly& p) { return p.is_zero() ? 0 : p.lc().sign(); }

}  // namespace jetreduce

#endif  // JETREDUCE_POLY_HPP
