/*
 * Copyright 2026 The isogeny-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "isolab/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace isolab {

namespace {

std::uint64_t mulmod_u64(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(x) * y % m);
}

std::uint64_t powmod_u64(std::uint64_t x, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  x %= m;
  while (e != 0) {
    if (e & 1) r = mulmod_u64(r, x, m);
    x = mulmod_u64(x, x, m);
    e >>= 1;
  }
  return r;
}

// Complete witness set for 64-bit inputs.
constexpr std::uint64_t kMillerRabinBases[] = {
    2, 325, 9375, 28178, 450775, 9780504, 1795265022};

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  std::uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  for (std::uint64_t a : kMillerRabinBases) {
    if (!miller_rabin_witness(n, a)) return false;
  }
  return true;
}

std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo,
                                           std::uint64_t hi) {
  if (hi > (std::uint64_t{1} << 26)) {
    throw ResourceLimitError("prime sieve bound exceeds 2^26");
  }
  std::vector<std::uint64_t> out;
  if (hi < 2) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i) {
    if (!composite[i]) out.push_back(i);
  }
  return out;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p <= 3) throw UsageError("modulus must exceed 3");
  if (p >= kMaxModulus) throw UsageError("modulus must be below 2^61");
  if (!is_prime(p)) {
    throw UsageError("modulus " + std::to_string(p) + " is not prime");
  }
}

std::uint64_t PrimeField::reduce(std::int64_t a) const {
  std::int64_t r = a % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::add(std::uint64_t x, std::uint64_t y) const {
  std::uint64_t r = x + y;
  if (r >= p_) r -= p_;
  return r;
}

std::uint64_t PrimeField::sub(std::uint64_t x, std::uint64_t y) const {
  return x >= y ? x - y : x + p_ - y;
}

std::uint64_t PrimeField::mul(std::uint64_t x, std::uint64_t y) const {
  return mulmod_u64(x, y, p_);
}

std::uint64_t PrimeField::neg(std::uint64_t x) const {
  return x == 0 ? 0 : p_ - x;
}

std::uint64_t PrimeField::pow(std::uint64_t x, std::uint64_t e) const {
  return powmod_u64(x, e, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t x) const {
  if (x % p_ == 0) throw DivideByZeroError("inverse of zero");
  return powmod_u64(x, p_ - 2, p_);
}

int legendre(std::int64_t a, const PrimeField& f) {
  std::uint64_t r = f.pow(f.reduce(a), (f.p() - 1) / 2);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

std::uint64_t smallest_qnr(const PrimeField& f) {
  for (std::uint64_t s = 2;; ++s) {
    if (legendre(static_cast<std::int64_t>(s), f) == -1) return s;
  }
}

Fp fp_make(std::int64_t v, const PrimeField& f) {
  return Fp{f.reduce(v), f.p()};
}

namespace {
void same_field(Fp x, Fp y) {
  if (x.p != y.p) throw UsageError("field elements have different moduli");
}
}  // namespace

Fp operator+(Fp x, Fp y) {
  same_field(x, y);
  std::uint64_t r = x.v + y.v;
  if (r >= x.p) r -= x.p;
  return Fp{r, x.p};
}

Fp operator-(Fp x, Fp y) {
  same_field(x, y);
  return Fp{x.v >= y.v ? x.v - y.v : x.v + x.p - y.v, x.p};
}

Fp operator*(Fp x, Fp y) {
  same_field(x, y);
  return Fp{mulmod_u64(x.v, y.v, x.p), x.p};
}

Fp fp_inv(Fp x) {
  if (x.v == 0) throw DivideByZeroError("inverse of zero");
  return Fp{powmod_u64(x.v, x.p - 2, x.p), x.p};
}

bool operator==(Fp x, Fp y) {
  if (x.p != y.p) throw UsageError("field elements have different moduli");
  return x.v == y.v;
}

QuadExt::QuadExt(const PrimeField& base)
    : base_(base), s_(smallest_qnr(base)) {}

F2 QuadExt::make(std::uint64_t u, std::uint64_t v) const {
  return F2{u % base_.p(), v % base_.p()};
}

F2 QuadExt::add(const F2& x, const F2& y) const {
  return F2{base_.add(x.u, y.u), base_.add(x.v, y.v)};
}

F2 QuadExt::sub(const F2& x, const F2& y) const {
  return F2{base_.sub(x.u, y.u), base_.sub(x.v, y.v)};
}

F2 QuadExt::mul(const F2& x, const F2& y) const {
  std::uint64_t uu = base_.mul(x.u, y.u);
  std::uint64_t vv = base_.mul(x.v, y.v);
  std::uint64_t uv = base_.mul(x.u, y.v);
  std::uint64_t vu = base_.mul(x.v, y.u);
  return F2{base_.add(uu, base_.mul(s_, vv)), base_.add(uv, vu)};
}

F2 QuadExt::neg(const F2& x) const {
  return F2{base_.neg(x.u), base_.neg(x.v)};
}

F2 QuadExt::inv(const F2& x) const {
  std::uint64_t n = norm(x);
  if (n == 0) throw DivideByZeroError("inverse of zero in F_p^2");
  std::uint64_t ni = base_.inv(n);
  return F2{base_.mul(x.u, ni), base_.mul(base_.neg(x.v), ni)};
}

F2 QuadExt::pow(const F2& x, std::uint64_t e) const {
  F2 r{1, 0};
  F2 b = x;
  while (e != 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

F2 QuadExt::conj(const F2& x) const { return F2{x.u, base_.neg(x.v)}; }

std::uint64_t QuadExt::norm(const F2& x) const {
  return base_.sub(base_.mul(x.u, x.u), base_.mul(s_, base_.mul(x.v, x.v)));
}

bool QuadExt::is_square(const F2& x) const {
  if (is_zero(x)) return true;
  return legendre(static_cast<std::int64_t>(norm(x)), base_) == 1;
}

}  // namespace isolab
