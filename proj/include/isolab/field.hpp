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

#ifndef ISOLAB_FIELD_HPP
#define ISOLAB_FIELD_HPP

#include <cstdint>
#include <vector>

#include "isolab/error.hpp"

namespace isolab {

// Moduli are capped below 2^61 so that any product of two reduced residues
// fits in one double-width multiplication.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 61;

// Deterministic Miller-Rabin, correct for all n < 2^64 (fixed witness set).
bool is_prime(std::uint64_t n);

// Floor of the square root, exact in integers.
std::uint64_t isqrt(std::uint64_t n);

// All primes in [lo, hi], ascending. Simple sieve; hi is capped at 2^26.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// Arithmetic mod an odd prime p with 3 < p < 2^61. Values are canonical
// residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  std::uint64_t reduce(std::int64_t a) const;
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t neg(std::uint64_t x) const;
  std::uint64_t pow(std::uint64_t x, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t x) const;  // x = 0 raises DivideByZeroError

 private:
  std::uint64_t p_;
};

// Legendre symbol via a^((p-1)/2) mod p. Returns 0, +1 or -1.
int legendre(std::int64_t a, const PrimeField& f);

// Smallest positive quadratic non-residue mod p.
std::uint64_t smallest_qnr(const PrimeField& f);

// Self-describing element of F_p for the checked public arithmetic. Two
// elements with different moduli refuse to combine.
struct Fp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;
};

Fp fp_make(std::int64_t v, const PrimeField& f);
Fp operator+(Fp x, Fp y);
Fp operator-(Fp x, Fp y);
Fp operator*(Fp x, Fp y);
Fp fp_inv(Fp x);
bool operator==(Fp x, Fp y);

// Element of F_{p^2} = F_p(sqrt(s)), stored as u + v*sqrt(s). Compact; the
// owning QuadExt supplies p and s.
struct F2 {
  std::uint64_t u = 0;
  std::uint64_t v = 0;

  friend bool operator==(const F2&, const F2&) = default;
};

// The quadratic extension F_{p^2} with s the smallest positive non-residue.
class QuadExt {
 public:
  explicit QuadExt(const PrimeField& base);

  const PrimeField& base() const { return base_; }
  std::uint64_t s() const { return s_; }

  F2 make(std::uint64_t u, std::uint64_t v) const;
  F2 from_base(std::uint64_t u) const { return F2{u, 0}; }
  bool is_zero(const F2& x) const { return x.u == 0 && x.v == 0; }
  bool in_base(const F2& x) const { return x.v == 0; }

  F2 add(const F2& x, const F2& y) const;
  F2 sub(const F2& x, const F2& y) const;
  F2 mul(const F2& x, const F2& y) const;
  F2 neg(const F2& x) const;
  F2 inv(const F2& x) const;  // DivideByZeroError on zero
  F2 pow(const F2& x, std::uint64_t e) const;

  // Conjugation u + v*sqrt(s) -> u - v*sqrt(s); this is the p-power
  // Frobenius of F_{p^2} since sqrt(s)^p = -sqrt(s).
  F2 conj(const F2& x) const;

  // Norm to the base field: x * conj(x) = u^2 - s*v^2.
  std::uint64_t norm(const F2& x) const;

  // Squareness test through the norm: nonzero x is a square in F_{p^2}
  // iff its norm is a square in F_p. Zero counts as a square.
  bool is_square(const F2& x) const;

 private:
  PrimeField base_;
  std::uint64_t s_;
};

}  // namespace isolab

#endif  // ISOLAB_FIELD_HPP
