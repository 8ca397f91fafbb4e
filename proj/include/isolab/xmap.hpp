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

#ifndef ISOLAB_XMAP_HPP
#define ISOLAB_XMAP_HPP

#include <cstdint>

#include "isolab/curve.hpp"
#include "isolab/poly.hpp"

namespace isolab {

// x-coordinate rational map num/den on a curve, reduced to lowest terms
// with monic denominator, so equality is coefficient comparison.
struct XMap {
  Curve curve;
  Poly num;
  Poly den;

  friend bool operator==(const XMap& a, const XMap& b) {
    return a.curve.p() == b.curve.p() && a.curve.a() == b.curve.a() &&
           a.curve.b() == b.curve.b() && a.num == b.num && a.den == b.den;
  }
};

// Reduces P/Q: divides out the gcd and scales the denominator monic.
// Q = 0 raises UsageError.
XMap xmap_new(const Curve& C, const Poly& P, const Poly& Q);

XMap identity_xmap(const Curve& C);   // x
XMap frobenius_xmap(const Curve& C);  // x^p

// The map degree: height of (num, den). This is the isogeny degree for
// the maps built here ([m] has degree m^2, Frobenius has degree p).
std::int64_t xmap_degree(const XMap& phi);

// Substitution outer(inner), reduced.
XMap xmap_compose(const XMap& outer, const XMap& inner);

// The three unreduced product polynomials describing the pair of x-maps
// (phi + psi, phi - psi): q2/q3 is their sum, q1/q3 their product.
struct TripleQ {
  Poly q1;
  Poly q2;
  Poly q3;
};

// Builds the triple from raw fraction pairs P/Q, R/S over the curve's
// (a, b):
//   q1 = (PR - aQS)^2 - 4b(PS + QR)QS
//   q2 = 2(PR + aQS)(PS + QR) + 4b(QS)^2
//   q3 = (PS - QR)^2
// PS = QR (equal fractions) raises DegenerateSumError. Inputs are expected
// to be coprime pairs; the height identity below is stated for that case.
TripleQ sum_difference_triple(const Curve& C, const Poly& P, const Poly& Q,
                              const Poly& R, const Poly& S);

// Triple for two x-maps on the same curve; phi = psi raises
// DegenerateSumError, different curves raise UsageError.
TripleQ compose_sum_product(const XMap& phi, const XMap& psi);

// gcd(q1, gcd(q2, q3)) must have degree 0; returns it as a field element
// (monic, hence 1). A nonconstant gcd raises IdentityViolationError.
Fp verify_u_constant(const TripleQ& t);

struct ParallelogramResult {
  std::int64_t lhs = 0;  // height of the composed triple
  std::int64_t rhs = 0;  // 2 deg(phi) + 2 deg(psi)
  bool ok = false;
};

// The degree parallelogram law d(phi+psi) + d(phi-psi) = 2d(phi) + 2d(psi),
// evaluated as heights.
ParallelogramResult parallelogram_check(const XMap& phi, const XMap& psi);

// x-map of multiplication by m, built by the sum/difference recursion
//   x_[m+1] = (2(x*x_[m] + a)(x + x_[m]) + 4b) / (x - x_[m])^2 - x_[m-1]
// from the base cases x_[1] = x and
// x_[2] = (x^4 - 2ax^2 - 8bx + a^2) / (4(x^3 + ax + b)).
// Every step also asserts the companion product relation. Requires
// 1 <= m <= 12; p | m raises InseparableError.
XMap mult_by_m_xmap(const Curve& C, std::int64_t m);

// Independent oracle for the same map through division polynomials:
// x_[m] = (x*psi_m^2 - psi_{m-1} psi_{m+1}) / psi_m^2 with y^2 eliminated
// by the curve equation. Same range and errors as mult_by_m_xmap.
XMap division_poly_xmap(const Curve& C, std::int64_t m);

// Expands (3x^2 + 4a)(x^4 - 2ax^2 - 8bx + a^2)
//       - (3x^3 - 5ax - 27b)(x^3 + ax + b),
// asserts the expansion is constant and equal to 4a^3 + 27b^2, and returns
// that constant. This is the resultant witnessing that the degree of [2]
// never drops. Failure raises IdentityViolationError.
Fp resultant_identity_check(const Curve& C);

struct FuzzStats {
  std::uint64_t checked = 0;
  std::uint64_t height_failures = 0;
  std::uint64_t u_failures = 0;
};

// Random coprime pairs (A,B), (C,D) with degrees <= max_deg:
// H(AC, AD+BC, BD) must equal H(A,B) + H(C,D).
FuzzStats pair_height_fuzz(std::uint64_t p, int max_deg, std::uint64_t iters,
                           std::uint64_t seed);

// Random coprime quadruples (P,Q), (R,S) on random nonsingular (a, b),
// stratified over the degree cases (deg R > deg S; deg P = deg Q with
// deg R < deg S; both numerators of smaller degree; all four degrees tied):
// H(q1, q2, q3) must equal 2H(P,Q) + 2H(R,S), and the triple gcd must be
// constant.
FuzzStats sum_diff_height_fuzz(std::uint64_t p, int max_deg,
                               std::uint64_t iters, std::uint64_t seed);

}  // namespace isolab

#endif  // ISOLAB_XMAP_HPP
