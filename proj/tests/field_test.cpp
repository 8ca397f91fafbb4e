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

#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "isolab/error.hpp"
#include "isolab/field.hpp"

using namespace isolab;

TEST_CASE("is_prime matches known primes and composites") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(5));
  CHECK(is_prime(97));
  CHECK(is_prime(1009));
  CHECK_FALSE(is_prime(341));         // 11 * 31, base-2 Fermat liar
  CHECK_FALSE(is_prime(561));         // Carmichael
  CHECK_FALSE(is_prime(3215031751));  // strong liar to bases 2,3,5,7
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(is_prime(2305843009213693951ULL - 2));

  // Cross-check against a sieve.
  std::vector<bool> sieve(2000, true);
  sieve[0] = sieve[1] = false;
  for (std::size_t i = 2; i < sieve.size(); ++i) {
    if (!sieve[i]) continue;
    for (std::size_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
  }
  for (std::size_t n = 0; n < sieve.size(); ++n) {
    CHECK_EQ(is_prime(n), sieve[n]);
  }
}

TEST_CASE("isqrt is the exact floor square root") {
  CHECK_EQ(isqrt(0), 0);
  CHECK_EQ(isqrt(1), 1);
  CHECK_EQ(isqrt(3), 1);
  CHECK_EQ(isqrt(4), 2);
  CHECK_EQ(isqrt(15), 3);
  CHECK_EQ(isqrt(16), 4);
  CHECK_EQ(isqrt(17), 4);
  CHECK_EQ(isqrt(UINT64_MAX), 4294967295ULL);
  for (std::uint64_t k = 1; k < 3000; ++k) {
    CHECK_EQ(isqrt(k * k), k);
    CHECK_EQ(isqrt(k * k + 1), k);
    CHECK_EQ(isqrt(k * k - 1), k - 1);
  }
}

TEST_CASE("primes_in_range has the right counts and contents") {
  CHECK_EQ(primes_in_range(2, 100).size(), 25);
  CHECK_EQ(primes_in_range(2, 1000).size(), 168);
  CHECK_EQ(primes_in_range(10, 20), std::vector<std::uint64_t>{11, 13, 17, 19});
  CHECK(primes_in_range(24, 28).empty());
  CHECK_THROWS_AS(primes_in_range(2, (1ULL << 26) + 1), ResourceLimitError);
}

TEST_CASE("PrimeField rejects invalid moduli") {
  CHECK_THROWS_AS(PrimeField(0), UsageError);
  CHECK_THROWS_AS(PrimeField(2), UsageError);
  CHECK_THROWS_AS(PrimeField(3), UsageError);
  CHECK_THROWS_AS(PrimeField(4), UsageError);
  CHECK_THROWS_AS(PrimeField(91), UsageError);  // 7 * 13
  CHECK_THROWS_AS(PrimeField(1ULL << 61), UsageError);
  CHECK_NOTHROW(PrimeField(5));
  CHECK_NOTHROW(PrimeField(2305843009213693951ULL));
}

TEST_CASE("PrimeField arithmetic satisfies the field axioms on samples") {
  for (std::uint64_t p : {5ULL, 97ULL, 2305843009213693951ULL}) {
    PrimeField f(p);
    std::vector<std::uint64_t> xs{0, 1, 2, p - 1, p / 2, (p + 1) / 2, 3 % p};
    for (auto x : xs) {
      for (auto y : xs) {
        CHECK_EQ(f.add(x, y), f.add(y, x));
        CHECK_EQ(f.mul(x, y), f.mul(y, x));
        CHECK_EQ(f.add(x, f.neg(x)), 0);
        CHECK_EQ(f.sub(x, y), f.add(x, f.neg(y)));
        for (auto z : xs) {
          CHECK_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
          CHECK_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        }
      }
      if (x != 0) {
        CHECK_EQ(f.mul(x, f.inv(x)), 1);
        CHECK_EQ(f.pow(x, p - 1), 1);  // Fermat
      }
    }
    CHECK_EQ(f.mul(p - 1, p - 1), 1);
    CHECK_THROWS_AS(f.inv(0), DivideByZeroError);
  }
}

TEST_CASE("reduce maps signed integers into [0, p)") {
  PrimeField f(7);
  CHECK_EQ(f.reduce(0), 0);
  CHECK_EQ(f.reduce(13), 6);
  CHECK_EQ(f.reduce(-1), 6);
  CHECK_EQ(f.reduce(-35), 0);
  CHECK_EQ(f.reduce(-36), 6);
  CHECK_EQ(f.reduce(INT64_MIN), (7 - (-(INT64_MIN % 7))) % 7);
}

TEST_CASE("legendre is the quadratic character") {
  for (std::uint64_t p : {5ULL, 13ULL, 97ULL}) {
    PrimeField f(p);
    std::set<std::uint64_t> squares;
    for (std::uint64_t x = 1; x < p; ++x) squares.insert(f.mul(x, x));
    CHECK_EQ(legendre(0, f), 0);
    std::int64_t sum = 0;
    for (std::uint64_t a = 1; a < p; ++a) {
      int chi = legendre(static_cast<std::int64_t>(a), f);
      CHECK_EQ(chi, squares.count(a) ? 1 : -1);
      sum += chi;
      // Multiplicative in both arguments.
      for (std::uint64_t b = 1; b < p; ++b) {
        CHECK_EQ(legendre(static_cast<std::int64_t>(f.mul(a, b)), f),
                 legendre(static_cast<std::int64_t>(a), f) *
                     legendre(static_cast<std::int64_t>(b), f));
      }
    }
    CHECK_EQ(sum, 0);  // equally many squares and non-squares
    CHECK_EQ(legendre(-1, f), legendre(static_cast<std::int64_t>(p - 1), f));
  }
  // The full character sum over [0, p) vanishes for every odd prime.
  for (std::uint64_t p : primes_in_range(5, 997)) {
    PrimeField f(p);
    std::int64_t total = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
      total += legendre(static_cast<std::int64_t>(x), f);
    }
    CHECK_EQ(total, 0);
  }
}

TEST_CASE("smallest_qnr returns the least non-square") {
  CHECK_EQ(smallest_qnr(PrimeField(5)), 2);
  CHECK_EQ(smallest_qnr(PrimeField(7)), 3);
  CHECK_EQ(smallest_qnr(PrimeField(97)), 5);
  CHECK_EQ(smallest_qnr(PrimeField(1009)), 11);
  for (std::uint64_t p : primes_in_range(5, 200)) {
    PrimeField f(p);
    std::uint64_t s = smallest_qnr(f);
    CHECK_EQ(legendre(static_cast<std::int64_t>(s), f), -1);
    for (std::uint64_t x = 1; x < s; ++x) {
      CHECK_EQ(legendre(static_cast<std::int64_t>(x), f), 1);
    }
  }
}

TEST_CASE("checked Fp elements enforce a common modulus") {
  PrimeField f5(5), f7(7);
  Fp a = fp_make(3, f5);
  Fp b = fp_make(4, f5);
  Fp c = fp_make(3, f7);
  CHECK_EQ((a + b).v, 2);
  CHECK_EQ((a - b).v, 4);
  CHECK_EQ((a * b).v, 2);
  CHECK_EQ(fp_inv(a).v, 2);  // 3 * 2 = 6 = 1 mod 5
  CHECK(a == fp_make(-2, f5));
  CHECK_THROWS_AS((void)(a + c), UsageError);
  CHECK_THROWS_AS((void)(a * c), UsageError);
  CHECK_THROWS_AS((void)(a == c), UsageError);
  CHECK_THROWS_AS(fp_inv(fp_make(0, f5)), DivideByZeroError);
}

TEST_CASE("quadratic extension behaves as a field of p^2 elements") {
  for (std::uint64_t p : {5ULL, 13ULL}) {
    PrimeField f(p);
    QuadExt e(f);
    CHECK_EQ(legendre(static_cast<std::int64_t>(e.s()), f), -1);

    std::vector<F2> all;
    for (std::uint64_t u = 0; u < p; ++u) {
      for (std::uint64_t v = 0; v < p; ++v) all.push_back(e.make(u, v));
    }
    CHECK_EQ(all.size(), p * p);

    for (const F2& z : all) {
      // x^(p^2) = x for every element; x^p is conjugation.
      CHECK(e.pow(z, p * p) == z);
      CHECK(e.pow(z, p) == e.conj(z));
      CHECK(e.conj(e.conj(z)) == z);
      CHECK(e.add(z, e.neg(z)) == e.make(0, 0));
      if (!e.is_zero(z)) {
        CHECK(e.mul(z, e.inv(z)) == e.make(1, 0));
        CHECK(e.pow(z, p * p - 1) == e.make(1, 0));
      }
      CHECK_EQ(e.in_base(z), z.v == 0);
    }
    CHECK_THROWS_AS(e.inv(e.make(0, 0)), DivideByZeroError);
  }
}

TEST_CASE("conjugation is a ring automorphism and norm is multiplicative") {
  PrimeField f(7);
  QuadExt e(f);
  for (std::uint64_t i = 0; i < 49; ++i) {
    F2 x = e.make(i / 7, i % 7);
    for (std::uint64_t j = 0; j < 49; ++j) {
      F2 y = e.make(j / 7, j % 7);
      CHECK(e.conj(e.add(x, y)) == e.add(e.conj(x), e.conj(y)));
      CHECK(e.conj(e.mul(x, y)) == e.mul(e.conj(x), e.conj(y)));
      CHECK_EQ(e.norm(e.mul(x, y)), f.mul(e.norm(x), e.norm(y)));
    }
    // norm(x) = x * conj(x), which lands in the base field.
    F2 nx = e.mul(x, e.conj(x));
    CHECK(e.in_base(nx));
    CHECK_EQ(nx.u, e.norm(x));
  }
}

TEST_CASE("squareness in the extension matches explicit squaring") {
  PrimeField f(13);
  QuadExt e(f);
  std::set<std::pair<std::uint64_t, std::uint64_t>> squares;
  for (std::uint64_t u = 0; u < 13; ++u) {
    for (std::uint64_t v = 0; v < 13; ++v) {
      F2 z = e.mul(e.make(u, v), e.make(u, v));
      squares.insert({z.u, z.v});
    }
  }
  for (std::uint64_t u = 0; u < 13; ++u) {
    for (std::uint64_t v = 0; v < 13; ++v) {
      CHECK_EQ(e.is_square(e.make(u, v)), squares.count({u, v}) == 1);
    }
  }
  // Every base-field element is a square in the extension or zero; in
  // particular base non-squares acquire roots.
  std::uint64_t s = smallest_qnr(f);
  CHECK(e.is_square(e.from_base(s)));
}
