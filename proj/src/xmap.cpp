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

#include "isolab/xmap.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "isolab/error.hpp"

namespace isolab {

namespace {

void same_curve(const XMap& phi, const XMap& psi) {
  if (phi.curve.p() != psi.curve.p() || phi.curve.a() != psi.curve.a() ||
      phi.curve.b() != psi.curve.b()) {
    throw UsageError("x-maps live on different curves");
  }
}

}  // namespace

XMap xmap_new(const Curve& C, const Poly& P, const Poly& Q) {
  if (Q.is_zero()) throw UsageError("x-map denominator is zero");
  if (P.modulus() != C.p() || Q.modulus() != C.p()) {
    throw UsageError("x-map polynomials off the curve's field");
  }
  Poly num = P;
  Poly den = Q;
  if (num.is_zero()) {
    den = Poly::constant(C.field(), 1);
  } else {
    Poly g = gcd(num, den);
    if (!g.is_one()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
    std::uint64_t inv_lc = C.field().inv(den.leading_coeff());
    num = num.scaled(inv_lc);
    den = den.scaled(inv_lc);
  }
  return XMap{C, std::move(num), std::move(den)};
}

XMap identity_xmap(const Curve& C) {
  return XMap{C, Poly::x(C.field()), Poly::constant(C.field(), 1)};
}

XMap frobenius_xmap(const Curve& C) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(C.p()) + 1, 0);
  c.back() = 1;
  return XMap{C, Poly(C.field(), std::move(c)),
              Poly::constant(C.field(), 1)};
}

std::int64_t xmap_degree(const XMap& phi) {
  return height({phi.num, phi.den});
}

XMap xmap_compose(const XMap& outer, const XMap& inner) {
  same_curve(outer, inner);
  const PrimeField& f = outer.curve.field();
  auto d = static_cast<std::size_t>(
      std::max(outer.num.deg(), outer.den.deg()));
  // Homogenize with powers of the inner denominator.
  std::vector<Poly> spow;
  spow.reserve(d + 1);
  spow.push_back(Poly::constant(f, 1));
  for (std::size_t i = 1; i <= d; ++i) {
    spow.push_back(spow.back() * inner.den);
  }
  Poly num = Poly::zero(f);
  Poly den = Poly::zero(f);
  Poly rpow = Poly::constant(f, 1);
  for (std::size_t i = 0; i <= d; ++i) {
    if (outer.num.coeff(i) != 0) {
      num = num + (rpow * spow[d - i]).scaled(outer.num.coeff(i));
    }
    if (outer.den.coeff(i) != 0) {
      den = den + (rpow * spow[d - i]).scaled(outer.den.coeff(i));
    }
    if (i < d) rpow = rpow * inner.num;
  }
  return xmap_new(outer.curve, num, den);
}

TripleQ sum_difference_triple(const Curve& C, const Poly& P, const Poly& Q,
                              const Poly& R, const Poly& S) {
  const PrimeField& f = C.field();
  Poly pr = P * R;
  Poly qs = Q * S;
  Poly ps = P * S;
  Poly qr = Q * R;
  if (ps == qr) {
    throw DegenerateSumError("equal x-maps: sum/difference degenerates");
  }
  Poly a_qs = qs.scaled(C.a());
  Poly ps_qr = ps + qr;
  Poly four_b = Poly::constant(f, 4).scaled(C.b());

  Poly t1 = pr - a_qs;
  Poly q1 = t1 * t1 - four_b * ps_qr * qs;
  Poly q2 = (pr + a_qs) * ps_qr;
  q2 = q2 + q2 + four_b * qs * qs;
  Poly t3 = ps - qr;
  Poly q3 = t3 * t3;
  return TripleQ{std::move(q1), std::move(q2), std::move(q3)};
}

TripleQ compose_sum_product(const XMap& phi, const XMap& psi) {
  same_curve(phi, psi);
  return sum_difference_triple(phi.curve, phi.num, phi.den, psi.num,
                               psi.den);
}

Fp verify_u_constant(const TripleQ& t) {
  std::vector<const Poly*> nonzero;
  for (const Poly* q : {&t.q1, &t.q2, &t.q3}) {
    if (!q->is_zero()) nonzero.push_back(q);
  }
  if (nonzero.empty()) throw UsageError("triple is identically zero");
  Poly g = *nonzero.front();
  for (std::size_t i = 1; i < nonzero.size(); ++i) {
    g = gcd(g, *nonzero[i]);
  }
  g = g.monic();
  if (g.deg() != 0) {
    throw IdentityViolationError(
        "triple gcd has positive degree " + std::to_string(g.deg()));
  }
  return Fp{g.coeff(0), g.modulus()};
}

ParallelogramResult parallelogram_check(const XMap& phi, const XMap& psi) {
  TripleQ t = compose_sum_product(phi, psi);
  std::int64_t lhs = height({t.q1, t.q2, t.q3});
  std::int64_t rhs = 2 * xmap_degree(phi) + 2 * xmap_degree(psi);
  return ParallelogramResult{lhs, rhs, lhs == rhs};
}

namespace {

// x_[2] = (x^4 - 2ax^2 - 8bx + a^2) / (4(x^3 + ax + b)).
XMap doubling_xmap(const Curve& C) {
  const PrimeField& f = C.field();
  Poly num(f, {f.mul(C.a(), C.a()), f.neg(f.mul(8, C.b())),
               f.neg(f.mul(2, C.a())), 0, 1});
  Poly den(f, {f.mul(4, C.b()), f.mul(4, C.a()), 0, 4});
  return xmap_new(C, num, den);
}

// One recursion step: given reduced x_[m] and x_[m-1], produce x_[m+1] and
// assert the companion product relation.
XMap step_recursion(const Curve& C, const XMap& xm, const XMap& xm1) {
  const PrimeField& f = C.field();
  Poly x = Poly::x(f);
  const Poly& N = xm.num;
  const Poly& D = xm.den;
  Poly xN = x * N;
  Poly xD = x * D;
  Poly aD = D.scaled(C.a());
  Poly g = xD - N;  // never zero for m >= 2 since x_[m] != x
  Poly g2 = g * g;
  Poly four_b = Poly::constant(f, 4).scaled(C.b());

  Poly sum_num = (xN + aD) * (xD + N);
  sum_num = sum_num + sum_num + four_b * D * D;

  Poly next_num = sum_num * xm1.den - xm1.num * g2;
  Poly next_den = g2 * xm1.den;
  XMap next = xmap_new(C, next_num, next_den);

  // Companion relation: x_[m+1] * x_[m-1] = ((xN - aD)^2 - 4b(xD + N)D)/g^2.
  Poly t = xN - aD;
  Poly prod_num = t * t - four_b * (xD + N) * D;
  Poly lhs = next.num * xm1.num * g2;
  Poly rhs = prod_num * next.den * xm1.den;
  if (lhs != rhs) {
    throw IdentityViolationError("sum and product relations disagree");
  }
  return next;
}

void check_mult_range(const Curve& C, std::int64_t m) {
  if (m < 1 || m > 12) throw UsageError("m must lie in [1, 12]");
  if (static_cast<std::uint64_t>(m) % C.p() == 0) {
    throw InseparableError("[m] with p | m has no separable x-map here");
  }
}

}  // namespace

XMap mult_by_m_xmap(const Curve& C, std::int64_t m) {
  check_mult_range(C, m);
  XMap prev = identity_xmap(C);
  if (m == 1) return prev;
  XMap curr = doubling_xmap(C);
  for (std::int64_t k = 2; k < m; ++k) {
    XMap next = step_recursion(C, curr, prev);
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

XMap division_poly_xmap(const Curve& C, std::int64_t m) {
  check_mult_range(C, m);
  const PrimeField& fld = C.field();
  Poly x = Poly::x(fld);
  Poly f = Poly(fld, {C.b(), C.a(), 0, 1});
  Poly f2 = f * f;
  std::uint64_t a = C.a();
  std::uint64_t b = C.b();
  std::uint64_t a2 = fld.mul(a, a);
  std::uint64_t a3 = fld.mul(a2, a);
  std::uint64_t b2 = fld.mul(b, b);

  // P_k from psi_k with y stripped: psi_k = P_k for odd k, psi_k = y * P_k
  // for even k.
  std::vector<Poly> P;
  P.reserve(static_cast<std::size_t>(m) + 3);
  P.push_back(Poly::zero(fld));       // P_0
  P.push_back(Poly::constant(fld, 1));  // P_1
  P.push_back(Poly::constant(fld, 2));  // P_2
  P.push_back(Poly(fld, {fld.neg(a2), fld.mul(12, b), fld.mul(6, a), 0,
                         3}));  // P_3
  P.push_back(Poly(fld, {fld.neg(fld.add(fld.mul(8, b2), a3)),
                         fld.neg(fld.mul(4, fld.mul(a, b))),
                         fld.neg(fld.mul(5, a2)), fld.mul(20, b),
                         fld.mul(5, a), 0, 1})
                  .scaled(4));  // P_4
  std::uint64_t half = fld.inv(2);
  for (std::int64_t k = 5; k <= m + 1; ++k) {
    if (k % 2 == 1) {
      std::int64_t i = (k - 1) / 2;
      Poly t1 = P[i + 2] * P[i] * P[i] * P[i];
      Poly t2 = P[i - 1] * P[i + 1] * P[i + 1] * P[i + 1];
      P.push_back(i % 2 == 0 ? f2 * t1 - t2 : t1 - f2 * t2);
    } else {
      std::int64_t i = k / 2;
      Poly t = P[i + 2] * P[i - 1] * P[i - 1] - P[i - 2] * P[i + 1] * P[i + 1];
      P.push_back((P[i] * t).scaled(half));
    }
  }

  const Poly& pm = P[static_cast<std::size_t>(m)];
  const Poly& lo = P[static_cast<std::size_t>(m) - 1];
  const Poly& hi = P[static_cast<std::size_t>(m) + 1];
  Poly pm2 = pm * pm;
  Poly num = m % 2 == 1 ? x * pm2 - f * lo * hi : x * f * pm2 - lo * hi;
  Poly den = m % 2 == 1 ? pm2 : f * pm2;
  return xmap_new(C, num, den);
}

Fp resultant_identity_check(const Curve& C) {
  const PrimeField& f = C.field();
  std::uint64_t a = C.a();
  std::uint64_t b = C.b();
  Poly t1 = Poly(f, {f.mul(4, a), 0, 3});
  Poly t2 = Poly(f, {f.mul(a, a), f.neg(f.mul(8, b)), f.neg(f.mul(2, a)), 0,
                     1});
  Poly t3 = Poly(f, {f.neg(f.mul(27, b)), f.neg(f.mul(5, a)), 0, 3});
  Poly t4 = Poly(f, {b, a, 0, 1});
  Poly lhs = t1 * t2 - t3 * t4;
  if (lhs.deg() > 0) {
    throw IdentityViolationError("resultant expansion is not constant");
  }
  std::uint64_t expected =
      f.add(f.mul(4, f.mul(a, f.mul(a, a))), f.mul(27, f.mul(b, b)));
  if (lhs.coeff(0) != expected) {
    throw IdentityViolationError("resultant constant mismatch");
  }
  return Fp{expected, f.p()};
}

FuzzStats pair_height_fuzz(std::uint64_t p, int max_deg, std::uint64_t iters,
                           std::uint64_t seed) {
  PrimeField f(p);
  std::mt19937_64 rng(seed);
  FuzzStats st;
  for (std::uint64_t i = 0; i < iters; ++i) {
    auto [A, B] = random_coprime_pair(rng, f, max_deg);
    auto [Cp, D] = random_coprime_pair(rng, f, max_deg);
    std::int64_t lhs = height({A * Cp, A * D + B * Cp, B * D});
    std::int64_t rhs = height({A, B}) + height({Cp, D});
    ++st.checked;
    if (lhs != rhs) ++st.height_failures;
  }
  return st;
}

namespace {

// Draw a coprime pair whose degrees satisfy the requested relation between
// numerator and denominator degree.
std::pair<Poly, Poly> stratified_pair(std::mt19937_64& rng,
                                      const PrimeField& f, int max_deg,
                                      int relation) {
  std::uniform_int_distribution<int> d(0, max_deg);
  for (;;) {
    int dn = d(rng);
    int dd = d(rng);
    if (relation < 0 && !(dn < dd)) continue;
    if (relation == 0 && dn != dd) continue;
    if (relation > 0 && !(dn > dd)) continue;
    return random_coprime_pair_exact(rng, f, dn, dd);
  }
}

}  // namespace

FuzzStats sum_diff_height_fuzz(std::uint64_t p, int max_deg,
                               std::uint64_t iters, std::uint64_t seed) {
  if (max_deg < 1) throw UsageError("max_deg must be at least 1");
  PrimeField f(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  FuzzStats st;
  for (std::uint64_t i = 0; i < iters; ++i) {
    // Random nonsingular curve.
    std::uint64_t a, b;
    do {
      a = coeff(rng);
      b = coeff(rng);
    } while (f.add(f.mul(4, f.mul(a, f.mul(a, a))),
                   f.mul(27, f.mul(b, b))) == 0);
    Curve C(p, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));

    // Four degree cases, cycled.
    Poly P = Poly::zero(f), Q = P, R = P, S = P;
    for (;;) {
      switch (i % 4) {
        case 0: {  // deg R > deg S
          std::tie(P, Q) = random_coprime_pair(rng, f, max_deg);
          std::tie(R, S) = stratified_pair(rng, f, max_deg, +1);
          break;
        }
        case 1: {  // deg P = deg Q, deg R < deg S
          std::tie(P, Q) = stratified_pair(rng, f, max_deg, 0);
          std::tie(R, S) = stratified_pair(rng, f, max_deg, -1);
          break;
        }
        case 2: {  // both numerators smaller
          std::tie(P, Q) = stratified_pair(rng, f, max_deg, -1);
          std::tie(R, S) = stratified_pair(rng, f, max_deg, -1);
          break;
        }
        default: {  // all degrees tied: leading terms may cancel
          std::uniform_int_distribution<int> d(0, max_deg);
          int deg = d(rng);
          std::tie(P, Q) = random_coprime_pair_exact(rng, f, deg, deg);
          std::tie(R, S) = random_coprime_pair_exact(rng, f, deg, deg);
          break;
        }
      }
      if (!(P * S == Q * R)) break;
    }

    TripleQ t = sum_difference_triple(C, P, Q, R, S);
    std::int64_t lhs = height({t.q1, t.q2, t.q3});
    std::int64_t rhs = 2 * height({P, Q}) + 2 * height({R, S});
    ++st.checked;
    if (lhs != rhs) ++st.height_failures;
    try {
      verify_u_constant(t);
    } catch (const IdentityViolationError&) {
      ++st.u_failures;
    }
  }
  return st;
}

}  // namespace isolab
