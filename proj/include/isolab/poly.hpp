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

#ifndef ISOLAB_POLY_HPP
#define ISOLAB_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isolab/field.hpp"

namespace isolab {

// Degree sentinel for the zero polynomial, absorbing under max.
inline constexpr std::int64_t kNegInfDeg =
    std::numeric_limits<std::int64_t>::min();

// Dense univariate polynomial over F_p, coefficient of x^i at index i,
// kept in normal form (no trailing zeros; zero polynomial is empty).
class Poly {
 public:
  Poly(const PrimeField& f, std::vector<std::uint64_t> coeffs);

  static Poly zero(const PrimeField& f);
  static Poly constant(const PrimeField& f, std::int64_t c);
  static Poly x(const PrimeField& f);
  // Coefficients may be given as signed integers; they are reduced mod p.
  static Poly from_coeffs(const PrimeField& f,
                          std::initializer_list<std::int64_t> coeffs);

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::int64_t deg() const {
    return c_.empty() ? kNegInfDeg : static_cast<std::int64_t>(c_.size()) - 1;
  }
  std::uint64_t coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : 0;
  }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  // UsageError on the zero polynomial.
  std::uint64_t leading_coeff() const;

  std::uint64_t eval(std::uint64_t x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(std::uint64_t c) const;
  Poly monic() const;  // UsageError on zero

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string() const;

 private:
  void normalize();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;

  friend std::pair<Poly, Poly> quotrem(const Poly& f, const Poly& g);
};

// Euclidean division: f = q*g + r with deg r < deg g. g = 0 raises
// DivideByZeroError.
std::pair<Poly, Poly> quotrem(const Poly& f, const Poly& g);

// Exact quotient; remainder must vanish.
Poly exact_div(const Poly& f, const Poly& g);

// Monic greatest common divisor. Both inputs zero raises UsageError.
Poly gcd(const Poly& f, const Poly& g);

// Max degree over the sequence; NEG_INF iff all inputs are zero.
// Empty sequence raises UsageError.
std::int64_t height(std::span<const Poly> qs);
std::int64_t height(std::initializer_list<Poly> qs);

// Uniform polynomial of degree <= max_deg (possibly zero): each of the
// max_deg + 1 coefficients drawn uniformly from [0, p).
Poly random_poly(std::mt19937_64& rng, const PrimeField& f, int max_deg);

// Uniform polynomial of exact degree d (leading coefficient nonzero).
Poly random_poly_exact(std::mt19937_64& rng, const PrimeField& f, int d);

// Rejection-sampled pair with gcd 1, degrees <= max_deg, not both zero.
std::pair<Poly, Poly> random_coprime_pair(std::mt19937_64& rng,
                                          const PrimeField& f, int max_deg);

// Coprime pair with exact degrees (df, dg).
std::pair<Poly, Poly> random_coprime_pair_exact(std::mt19937_64& rng,
                                                const PrimeField& f, int df,
                                                int dg);

}  // namespace isolab

#endif  // ISOLAB_POLY_HPP
