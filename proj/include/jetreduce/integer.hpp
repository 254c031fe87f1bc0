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

#ifndef JETREDUCE_INTEGER_HPP
#define JETREDUCE_INTEGER_HPP

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace jetreduce {

// Arbitrary-precision integer with an inline int64 fast path. Values that fit
// in int64 are always stored small, so equality can compare representations.
class Int {
 public:
  Int() = default;
  Int(long long v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Int(const mpz_class& v);
  Int(const Int& o) : small_(o.small_), big_(o.big_ ? new mpz_class(*o.big_) : nullptr) {}
  Int(Int&&) noexcept = default;
  Int& operator=(const Int& o);
  Int& operator=(Int&&) noexcept = default;

  bool is_small() const { return !big_; }
  int64_t small() const { return small_; }
  mpz_class to_mpz() const;

  int sign() const;
  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_one() const { return !big_ && small_ == 1; }
  bool is_minus_one() const { return !big_ && small_ == -1; }

  Int operator-() const;
  Int& operator+=(const Int& o);
  Int& operator-=(const Int& o);
  Int& operator*=(const Int& o);

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }

  // Exact quotient; b must divide a.
  friend Int divexact(const Int& a, const Int& b);
  // Truncated remainder.
  friend Int rem(const Int& a, const Int& b);
  friend Int gcd(const Int& a, const Int& b);
  friend Int abs(const Int& a);
  friend int cmp(const Int& a, const Int& b);

  friend bool operator==(const Int& a, const Int& b);
  friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
  friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }

  // Residue in [0, p) for a prime p < 2^62.
  uint64_t mod(uint64_t p) const;
  std::size_t hash() const;
  std::string str() const;

 private:
  void normalize();

  int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

Int pow(const Int& base, unsigned e);

}  // namespace jetreduce

#endif  // JETREDUCE_INTEGER_HPP
