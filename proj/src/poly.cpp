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

#include "isolab/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isolab {

namespace {

PrimeField field_of(const Poly& f) { return PrimeField(f.modulus()); }

void same_modulus(const Poly& f, const Poly& g) {
  if (f.modulus() != g.modulus()) {
    throw UsageError("polynomials have different moduli");
  }
}

}  // namespace

Poly::Poly(const PrimeField& f, std::vector<std::uint64_t> coeffs)
    : p_(f.p()), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::zero(const PrimeField& f) { return Poly(f, {}); }

Poly Poly::constant(const PrimeField& f, std::int64_t c) {
  return Poly(f, {f.reduce(c)});
}

Poly Poly::x(const PrimeField& f) { return Poly(f, {0, 1}); }

Poly Poly::from_coeffs(const PrimeField& f,
                       std::initializer_list<std::int64_t> coeffs) {
  std::vector<std::uint64_t> c;
  c.reserve(coeffs.size());
  for (std::int64_t v : coeffs) c.push_back(f.reduce(v));
  return Poly(f, std::move(c));
}

std::uint64_t Poly::leading_coeff() const {
  if (c_.empty()) throw UsageError("zero polynomial has no leading coefficient");
  return c_.back();
}

std::uint64_t Poly::eval(std::uint64_t x) const {
  PrimeField f(p_);
  std::uint64_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = f.add(f.mul(acc, x % p_), c_[i]);
  }
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  same_modulus(*this, o);
  PrimeField f(p_);
  std::vector<std::uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = f.add(coeff(i), o.coeff(i));
  }
  return Poly(f, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  same_modulus(*this, o);
  PrimeField f(p_);
  std::vector<std::uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = f.sub(coeff(i), o.coeff(i));
  }
  return Poly(f, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  same_modulus(*this, o);
  PrimeField f(p_);
  if (is_zero() || o.is_zero()) return zero(f);
  std::vector<std::uint64_t> c(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(c_[i], o.c_[j]));
    }
  }
  return Poly(f, std::move(c));
}

Poly Poly::operator-() const {
  PrimeField f(p_);
  std::vector<std::uint64_t> c(c_);
  for (auto& v : c) v = f.neg(v);
  return Poly(f, std::move(c));
}

Poly Poly::scaled(std::uint64_t k) const {
  PrimeField f(p_);
  std::vector<std::uint64_t> c(c_);
  for (auto& v : c) v = f.mul(v, k % p_);
  return Poly(f, std::move(c));
}

Poly Poly::monic() const {
  PrimeField f(p_);
  return scaled(f.inv(leading_coeff()));
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) {
      if (c_[i] != 1) os << "*";
      os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> quotrem(const Poly& f, const Poly& g) {
  same_modulus(f, g);
  if (g.is_zero()) throw DivideByZeroError("polynomial division by zero");
  PrimeField fld = field_of(f);
  Poly q = Poly::zero(fld);
  Poly r = f;
  std::uint64_t glc_inv = fld.inv(g.leading_coeff());
  while (!r.is_zero() && r.deg() >= g.deg()) {
    auto shift = static_cast<std::size_t>(r.deg() - g.deg());
    std::uint64_t c = fld.mul(r.leading_coeff(), glc_inv);
    std::vector<std::uint64_t> mono(shift + 1, 0);
    mono[shift] = c;
    Poly m(fld, std::move(mono));
    q = q + m;
    r = r - m * g;
  }
  return {q, r};
}

Poly exact_div(const Poly& f, const Poly& g) {
  auto [q, r] = quotrem(f, g);
  if (!r.is_zero()) throw std::logic_error("exact_div remainder nonzero");
  return q;
}

Poly gcd(const Poly& f, const Poly& g) {
  same_modulus(f, g);
  if (f.is_zero() && g.is_zero()) {
    throw UsageError("gcd of two zero polynomials");
  }
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = quotrem(a, b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

std::int64_t height(std::span<const Poly> qs) {
  if (qs.empty()) throw UsageError("height of an empty sequence");
  std::int64_t h = kNegInfDeg;
  for (const Poly& q : qs) {
    same_modulus(qs.front(), q);
    h = std::max(h, q.deg());
  }
  return h;
}

std::int64_t height(std::initializer_list<Poly> qs) {
  std::vector<Poly> v(qs);
  return height(std::span<const Poly>(v));
}

Poly random_poly(std::mt19937_64& rng, const PrimeField& f, int max_deg) {
  if (max_deg < 0) throw UsageError("max_deg must be nonnegative");
  std::uniform_int_distribution<std::uint64_t> coeff(0, f.p() - 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(max_deg) + 1);
  for (auto& v : c) v = coeff(rng);
  return Poly(f, std::move(c));
}

Poly random_poly_exact(std::mt19937_64& rng, const PrimeField& f, int d) {
  if (d < 0) throw UsageError("degree must be nonnegative");
  std::uniform_int_distribution<std::uint64_t> coeff(0, f.p() - 1);
  std::uniform_int_distribution<std::uint64_t> lead(1, f.p() - 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = coeff(rng);
  c.back() = lead(rng);
  return Poly(f, std::move(c));
}

std::pair<Poly, Poly> random_coprime_pair(std::mt19937_64& rng,
                                          const PrimeField& f, int max_deg) {
  for (;;) {
    Poly a = random_poly(rng, f, max_deg);
    Poly b = random_poly(rng, f, max_deg);
    if (a.is_zero() && b.is_zero()) continue;
    if (gcd(a, b).is_one()) return {a, b};
  }
}

std::pair<Poly, Poly> random_coprime_pair_exact(std::mt19937_64& rng,
                                                const PrimeField& f, int df,
                                                int dg) {
  for (;;) {
    Poly a = random_poly_exact(rng, f, df);
    Poly b = random_poly_exact(rng, f, dg);
    if (gcd(a, b).is_one()) return {a, b};
  }
}

}  // namespace isolab
