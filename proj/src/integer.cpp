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

#include "jetreduce/integer.hpp"

#include <limits>
#include <numeric>

namespace jetreduce {

namespace {

mpz_class from_i64(int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), v);
  return r;
}

}  // namespace

Int::Int(const mpz_class& v) : big_(new mpz_class(v)) { normalize(); }

Int& Int::operator=(const Int& o) {
  if (this != &o) {
    small_ = o.small_;
    big_.reset(o.big_ ? new mpz_class(*o.big_) : nullptr);
  }
  return *this;
}

void Int::normalize() {
  if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
    small_ = mpz_get_si(big_->get_mpz_t());
    big_.reset();
  }
}

mpz_class Int::to_mpz() const { return big_ ? *big_ : from_i64(small_); }

int Int::sign() const {
  if (big_) return mpz_sgn(big_->get_mpz_t());
  return (small_ > 0) - (small_ < 0);
}

Int Int::operator-() const {
  if (!big_ && small_ != std::numeric_limits<int64_t>::min()) return Int(-small_);
  return Int(mpz_class(-to_mpz()));
}

Int& Int::operator+=(const Int& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  *this = Int(mpz_class(to_mpz() + o.to_mpz()));
  return *this;
}

Int& Int::operator-=(const Int& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  *this = Int(mpz_class(to_mpz() - o.to_mpz()));
  return *this;
}

Int& Int::operator*=(const Int& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  *this = Int(mpz_class(to_mpz() * o.to_mpz()));
  return *this;
}

Int divexact(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<int64_t>::min() && b.small_ == -1))
    return Int(a.small_ / b.small_);
  mpz_class q;
  mpz_class am = a.to_mpz(), bm = b.to_mpz();
  mpz_divexact(q.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  return Int(q);
}

Int rem(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) {
    if (b.small_ == -1) return Int(0);
    return Int(a.small_ % b.small_);
  }
  mpz_class r;
  mpz_class am = a.to_mpz(), bm = b.to_mpz();
  mpz_tdiv_r(r.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  return Int(r);
}

Int gcd(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) {
    uint64_t x = a.small_ < 0 ? 0 - static_cast<uint64_t>(a.small_) : static_cast<uint64_t>(a.small_);
    uint64_t y = b.small_ < 0 ? 0 - static_cast<uint64_t>(b.small_) : static_cast<uint64_t>(b.small_);
    uint64_t g = std::gcd(x, y);
    if (g <= static_cast<uint64_t>(std::numeric_limits<int64_t>::max())) return Int(static_cast<long long>(g));
  }
  mpz_class g;
  mpz_class am = a.to_mpz(), bm = b.to_mpz();
  mpz_gcd(g.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  return Int(g);
}

Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }

int cmp(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) return (a.small_ > b.small_) - (a.small_ < b.small_);
  int c = mpz_cmp(a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return (c > 0) - (c < 0);
}

bool operator==(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (!a.big_ || !b.big_) return false;
  return mpz_cmp(a.big_->get_mpz_t(), b.big_->get_mpz_t()) == 0;
}

uint64_t Int::mod(uint64_t p) const {
  if (!big_) {
    int64_t r = small_ % static_cast<int64_t>(p);
    return static_cast<uint64_t>(r < 0 ? r + static_cast<int64_t>(p) : r);
  }
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), big_->get_mpz_t(), p);
  return mpz_get_ui(r.get_mpz_t());
}

std::size_t Int::hash() const {
  if (!big_) return std::hash<int64_t>()(small_);
  return std::hash<std::string>()(big_->get_str(16));
}

std::string Int::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

Int pow(const Int& base, unsigned e) {
  Int r(1), b = base;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

}  // namespace jetreduce
