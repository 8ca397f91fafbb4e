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
#include <random>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "isolab/curve.hpp"
#include "isolab/error.hpp"
#include "isolab/field.hpp"
#include "isolab/poly.hpp"
#include "isolab/xmap.hpp"

using namespace isolab;

TEST_CASE("xmap_new reduces to lowest terms with a monic denominator") {
  Curve C(5, 1, 1);
  PrimeField f(5);
  // (x^2 - 1) / (x - 1) = x + 1.
  XMap m = xmap_new(C, Poly::from_coeffs(f, {-1, 0, 1}),
                    Poly::from_coeffs(f, {-1, 1}));
  CHECK_EQ(m.num, Poly::from_coeffs(f, {1, 1}));
  CHECK(m.den.is_one());
  // Scaling both sides changes nothing.
  XMap s1 = xmap_new(C, Poly::from_coeffs(f, {2, 2}), Poly::constant(f, 2));
  XMap s2 = xmap_new(C, Poly::from_coeffs(f, {1, 1}), Poly::constant(f, 1));
  CHECK(s1 == s2);
  // Zero numerator collapses to 0/1.
  XMap z = xmap_new(C, Poly::zero(f), Poly::from_coeffs(f, {3, 1}));
  CHECK(z.num.is_zero());
  CHECK(z.den.is_one());
  CHECK_THROWS_AS(xmap_new(C, Poly::x(f), Poly::zero(f)), UsageError);
  CHECK_THROWS_AS(xmap_new(C, Poly::x(PrimeField(7)), Poly::constant(PrimeField(7), 1)),
                  UsageError);
}

TEST_CASE("identity and Frobenius x-maps have degrees 1 and p") {
  for (std::uint64_t p : {5ULL, 97ULL}) {
    Curve C(p, 1, 1);
    XMap id = identity_xmap(C);
    CHECK_EQ(xmap_degree(id), 1);
    CHECK_EQ(id.num.deg(), 1);
    CHECK(id.den.is_one());
    XMap pi = frobenius_xmap(C);
    CHECK_EQ(xmap_degree(pi), static_cast<std::int64_t>(p));
    CHECK(pi.den.is_one());
  }
}

TEST_CASE("composition multiplies degrees") {
  Curve C(97, 2, 3);
  PrimeField f(97);
  std::mt19937_64 rng(31);
  XMap id = identity_xmap(C);
  for (int i = 0; i < 40; ++i) {
    auto [p1, q1] = random_coprime_pair_exact(rng, f, 2, 1);
    auto [p2, q2] = random_coprime_pair_exact(rng, f, 3, 1);
    XMap phi = xmap_new(C, p1, q1);
    XMap psi = xmap_new(C, p2, q2);
    CHECK_EQ(xmap_degree(xmap_compose(phi, psi)),
             xmap_degree(phi) * xmap_degree(psi));
    CHECK(xmap_compose(phi, id) == phi);
    CHECK(xmap_compose(id, phi) == phi);
  }
  // Multiplication maps commute under composition: [2] after [3] is [6].
  XMap m6 = mult_by_m_xmap(C, 6);
  CHECK(xmap_compose(mult_by_m_xmap(C, 2), mult_by_m_xmap(C, 3)) == m6);
  CHECK(xmap_compose(mult_by_m_xmap(C, 3), mult_by_m_xmap(C, 2)) == m6);
}

TEST_CASE("doubling map matches the closed form") {
  Curve C(5, 1, 1);
  PrimeField f(5);
  XMap m2 = mult_by_m_xmap(C, 2);
  // (x^4 - 2ax^2 - 8bx + a^2) / (4(x^3 + ax + b)) with a = b = 1,
  // normalized to a monic denominator.
  Poly num = Poly::from_coeffs(f, {1, -8, -2, 0, 1}).scaled(f.inv(4));
  Poly den = Poly::from_coeffs(f, {1, 1, 0, 1});
  CHECK_EQ(m2.num, num);
  CHECK_EQ(m2.den, den);
  CHECK_EQ(xmap_degree(m2), 4);
}

TEST_CASE("multiplication maps have degree m^2") {
  Curve C(5, 1, 1);
  for (std::int64_t m : {1, 2, 3, 4, 6, 7, 8, 9, 11, 12}) {
    XMap xm = mult_by_m_xmap(C, m);
    CHECK_EQ(xmap_degree(xm), m * m);
  }
  Curve D(1009, 1, 0);
  for (std::int64_t m : {2, 3, 5, 8}) {
    CHECK_EQ(xmap_degree(mult_by_m_xmap(D, m)), m * m);
  }
}

TEST_CASE("multiplication map bounds and separability are enforced") {
  Curve C(5, 1, 1);
  CHECK_THROWS_AS(mult_by_m_xmap(C, 0), UsageError);
  CHECK_THROWS_AS(mult_by_m_xmap(C, -1), UsageError);
  CHECK_THROWS_AS(mult_by_m_xmap(C, 13), UsageError);
  CHECK_THROWS_AS(mult_by_m_xmap(C, 5), InseparableError);
  CHECK_THROWS_AS(mult_by_m_xmap(C, 10), InseparableError);
  CHECK_THROWS_AS(division_poly_xmap(C, 5), InseparableError);
  CHECK_THROWS_AS(division_poly_xmap(C, 0), UsageError);
}

TEST_CASE("recursion and division-polynomial constructions agree") {
  for (auto [p, a, b] : std::initializer_list<std::tuple<std::uint64_t, int, int>>{
           {5, 1, 1}, {7, 1, 1}, {97, 2, 3}}) {
    Curve C(p, a, b);
    for (std::int64_t m = 1; m <= 6; ++m) {
      if (m % static_cast<std::int64_t>(p) == 0) continue;
      CHECK(mult_by_m_xmap(C, m) == division_poly_xmap(C, m));
    }
  }
}

TEST_CASE("the multiplication x-map tracks the group law pointwise") {
  for (auto [p, a, b] : std::initializer_list<std::tuple<std::uint64_t, int, int>>{
           {5, 1, 1}, {7, 1, 3}, {13, 2, 1}}) {
    Curve C(p, a, b);
    auto pts = enumerate_points(C, Ext::kBase);
    for (std::int64_t m = 2; m <= 4; ++m) {
      XMap xm = mult_by_m_xmap(C, m);
      for (const Point& P : pts) {
        if (P.inf) continue;
        Point mP = scalar_mul(C, m, P);
        std::uint64_t d = xm.den.eval(P.x.u);
        if (mP.inf) {
          // Denominator roots are exactly the x-coordinates killed by [m].
          CHECK_EQ(d, 0);
        } else {
          REQUIRE(d != 0);
          std::uint64_t expect = C.field().mul(xm.num.eval(P.x.u), C.field().inv(d));
          CHECK_EQ(mP.x.u, expect);
          CHECK_EQ(mP.x.v, 0);
        }
      }
    }
  }
}

TEST_CASE("sum and difference triple rejects equal fractions") {
  Curve C(5, 1, 1);
  PrimeField f(5);
  Poly x = Poly::x(f);
  Poly one = Poly::constant(f, 1);
  CHECK_THROWS_AS(sum_difference_triple(C, x, one, x, one),
                  DegenerateSumError);
  // Equality as fractions, not as written.
  CHECK_THROWS_AS(
      sum_difference_triple(C, x.scaled(3), Poly::constant(f, 3), x, one),
      DegenerateSumError);
  XMap m2 = mult_by_m_xmap(C, 2);
  CHECK_THROWS_AS(compose_sum_product(m2, m2), DegenerateSumError);
  Curve D(5, 2, 1);
  CHECK_THROWS_AS(compose_sum_product(identity_xmap(C), identity_xmap(D)),
                  UsageError);
}

TEST_CASE("triple gcd is constant for honest inputs and flags planted ones") {
  Curve C(5, 1, 1);
  PrimeField f(5);
  XMap id = identity_xmap(C);
  XMap m2 = mult_by_m_xmap(C, 2);
  TripleQ t = compose_sum_product(id, m2);
  Fp u = verify_u_constant(t);
  CHECK_EQ(u.v, 1);  // monic constant
  TripleQ planted{Poly::x(f), Poly::x(f).scaled(2),
                  Poly::from_coeffs(f, {0, 0, 3})};
  CHECK_THROWS_AS(verify_u_constant(planted), IdentityViolationError);
}

TEST_CASE("parallelogram law on multiplication maps") {
  Curve C(5, 1, 1);
  auto r = parallelogram_check(mult_by_m_xmap(C, 2), mult_by_m_xmap(C, 3));
  CHECK(r.ok);
  CHECK_EQ(r.lhs, 26);  // 5^2 + 1^2 = 2*4 + 2*9
  CHECK_EQ(r.rhs, 26);
  // Symmetric in the two maps.
  auto rs = parallelogram_check(mult_by_m_xmap(C, 3), mult_by_m_xmap(C, 2));
  CHECK_EQ(rs.lhs, r.lhs);
  // [1] against [m]: (m + 1)^2 + (m - 1)^2 = 2 + 2m^2.
  for (auto [p, a, b] : std::initializer_list<std::tuple<std::uint64_t, int, int>>{
           {5, 1, 1}, {97, 2, 3}}) {
    Curve D(p, a, b);
    XMap id = identity_xmap(D);
    for (std::int64_t m = 2; m <= 4; ++m) {
      auto rm = parallelogram_check(id, mult_by_m_xmap(D, m));
      CHECK(rm.ok);
      CHECK_EQ(rm.lhs, 2 + 2 * m * m);
    }
  }
}

TEST_CASE("parallelogram law at the Frobenius pair") {
  for (auto [p, a, b] : std::initializer_list<std::tuple<std::uint64_t, int, int>>{
           {5, 1, 1}, {7, 1, 1}, {13, 2, 1}}) {
    Curve C(p, a, b);
    auto r = parallelogram_check(identity_xmap(C), frobenius_xmap(C));
    CHECK(r.ok);
    CHECK_EQ(r.lhs, static_cast<std::int64_t>(2 + 2 * p));
    CHECK_EQ(r.rhs, static_cast<std::int64_t>(2 + 2 * p));
  }
}

TEST_CASE("degree-witness expansion equals the discriminant quantity") {
  Curve Z(11, -35, 98);
  CHECK_EQ(resultant_identity_check(Z).v, 6);  // 87808 mod 11
  std::mt19937_64 rng(8);
  for (std::uint64_t p : {5ULL, 97ULL, 1009ULL}) {
    PrimeField f(p);
    int done = 0;
    while (done < 30) {
      auto a = static_cast<std::int64_t>(rng() % p);
      auto b = static_cast<std::int64_t>(rng() % p);
      std::uint64_t disc = f.add(f.mul(4, f.pow(f.reduce(a), 3)),
                                 f.mul(27, f.mul(f.reduce(b), f.reduce(b))));
      if (disc == 0) continue;
      Curve C(p, a, b);
      CHECK_EQ(resultant_identity_check(C).v, disc);
      ++done;
    }
  }
}

TEST_CASE("pair height fuzz finds no violations") {
  for (std::uint64_t p : {5ULL, 97ULL}) {
    FuzzStats st = pair_height_fuzz(p, 8, 300, 1);
    CHECK_EQ(st.checked, 300);
    CHECK_EQ(st.height_failures, 0);
  }
  // Stats are reproducible for a fixed seed.
  FuzzStats a = pair_height_fuzz(97, 6, 100, 42);
  FuzzStats b = pair_height_fuzz(97, 6, 100, 42);
  CHECK_EQ(a.checked, b.checked);
  CHECK_EQ(a.height_failures, b.height_failures);
}

TEST_CASE("sum/difference height fuzz finds no violations") {
  for (std::uint64_t p : {5ULL, 97ULL}) {
    FuzzStats st = sum_diff_height_fuzz(p, 6, 300, 1);
    CHECK_EQ(st.checked, 300);
    CHECK_EQ(st.height_failures, 0);
    CHECK_EQ(st.u_failures, 0);
  }
  CHECK_THROWS_AS(sum_diff_height_fuzz(5, 0, 10, 1), UsageError);
}
