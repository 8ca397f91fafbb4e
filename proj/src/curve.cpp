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

#include "isolab/curve.hpp"

#include <cstddef>
#include <limits>
#include <string>

#include "isolab/error.hpp"

namespace isolab {

Curve::Curve(std::uint64_t p, std::int64_t a, std::int64_t b)
    : field_(p), ext_(field_), a_(field_.reduce(a)), b_(field_.reduce(b)) {
  std::uint64_t a3 = field_.mul(a_, field_.mul(a_, a_));
  std::uint64_t b2 = field_.mul(b_, b_);
  std::uint64_t disc = field_.add(field_.mul(4, a3), field_.mul(27, b2));
  if (disc == 0) {
    throw SingularCurveError("4a^3 + 27b^2 = 0 mod " + std::to_string(p));
  }
}

std::uint64_t Curve::f_eval(std::uint64_t x) const {
  std::uint64_t x2 = field_.mul(x, x);
  return field_.add(field_.add(field_.mul(x2, x), field_.mul(a_, x)), b_);
}

F2 Curve::f_eval(const F2& x) const {
  F2 x3 = ext_.mul(ext_.mul(x, x), x);
  F2 ax = ext_.mul(ext_.from_base(a_), x);
  return ext_.add(ext_.add(x3, ax), ext_.from_base(b_));
}

bool Curve::contains(const Point& P) const {
  if (P.inf) return true;
  F2 lhs = ext_.mul(P.y, P.y);
  return lhs == f_eval(P.x);
}

Point point_neg(const Curve& C, const Point& P) {
  if (P.inf) return P;
  return Point{P.x, C.ext().neg(P.y), false};
}

namespace {

// Chord-tangent law without the on-curve precondition check; inputs must
// already lie on C.
Point add_unchecked(const Curve& C, const Point& P, const Point& Q) {
  const QuadExt& E = C.ext();
  if (P.inf) return Q;
  if (Q.inf) return P;
  if (P.x == Q.x) {
    if (E.add(P.y, Q.y) == F2{0, 0}) return Point::infinity();
    // Tangent: lambda = (3x^2 + a) / (2y).
    F2 x2 = E.mul(P.x, P.x);
    F2 num = E.add(E.mul(E.from_base(3 % C.p()), x2), E.from_base(C.a()));
    F2 lambda = E.mul(num, E.inv(E.add(P.y, P.y)));
    F2 x3 = E.sub(E.sub(E.mul(lambda, lambda), P.x), Q.x);
    F2 y3 = E.sub(E.mul(lambda, E.sub(P.x, x3)), P.y);
    return Point{x3, y3, false};
  }
  F2 lambda = E.mul(E.sub(Q.y, P.y), E.inv(E.sub(Q.x, P.x)));
  F2 x3 = E.sub(E.sub(E.mul(lambda, lambda), P.x), Q.x);
  F2 y3 = E.sub(E.mul(lambda, E.sub(P.x, x3)), P.y);
  return Point{x3, y3, false};
}

}  // namespace

Point point_add(const Curve& C, const Point& P, const Point& Q) {
  if (!C.contains(P) || !C.contains(Q)) {
    throw UsageError("point_add input not on the curve");
  }
  return add_unchecked(C, P, Q);
}

Point scalar_mul(const Curve& C, std::int64_t m, const Point& P) {
  if (!C.contains(P)) throw UsageError("scalar_mul input not on the curve");
  Point base = P;
  std::uint64_t k;
  if (m < 0) {
    base = point_neg(C, base);
    k = (m == std::numeric_limits<std::int64_t>::min())
            ? (std::uint64_t{1} << 63)
            : static_cast<std::uint64_t>(-m);
  } else {
    k = static_cast<std::uint64_t>(m);
  }
  Point acc = Point::infinity();
  while (k != 0) {
    if (k & 1) acc = add_unchecked(C, acc, base);
    base = add_unchecked(C, base, base);
    k >>= 1;
  }
  return acc;
}

namespace {

std::vector<Point> enumerate_base(const Curve& C) {
  std::uint64_t p = C.p();
  if (p > (std::uint64_t{1} << 20)) {
    throw ResourceLimitError("base enumeration requires p <= 2^20");
  }
  // Root table: index z holds the smaller square root of z, or the sentinel.
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> root(p, kNone);
  const PrimeField& f = C.field();
  for (std::uint64_t y = 0; y <= (p - 1) / 2; ++y) {
    root[f.mul(y, y)] = static_cast<std::uint32_t>(y);
  }
  std::vector<Point> pts;
  pts.push_back(Point::infinity());
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t z = C.f_eval(x);
    std::uint32_t y = root[z];
    if (y == kNone) continue;
    pts.push_back(Point{F2{x, 0}, F2{y, 0}, false});
    if (y != 0) pts.push_back(Point{F2{x, 0}, F2{p - y, 0}, false});
  }
  return pts;
}

std::vector<Point> enumerate_quadratic(const Curve& C) {
  std::uint64_t p = C.p();
  if (p > (std::uint64_t{1} << 10)) {
    throw ResourceLimitError("quadratic enumeration requires p <= 2^10");
  }
  const QuadExt& E = C.ext();
  auto enc = [p](const F2& z) { return z.u * p + z.v; };
  // Root table over all p^2 elements, keyed by enc; keeps the root with the
  // smaller encoding so output order is deterministic.
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> root(p * p, kNone);
  for (std::uint64_t u = 0; u < p; ++u) {
    for (std::uint64_t v = 0; v < p; ++v) {
      F2 y{u, v};
      std::uint64_t idx = enc(E.mul(y, y));
      std::uint32_t cand = static_cast<std::uint32_t>(enc(y));
      if (cand < root[idx]) root[idx] = cand;
    }
  }
  std::vector<Point> pts;
  pts.push_back(Point::infinity());
  for (std::uint64_t u = 0; u < p; ++u) {
    for (std::uint64_t v = 0; v < p; ++v) {
      F2 x{u, v};
      std::uint64_t zi = enc(C.f_eval(x));
      std::uint32_t ye = root[zi];
      if (ye == kNone) continue;
      F2 y{ye / p, ye % p};
      pts.push_back(Point{x, y, false});
      if (!E.is_zero(y)) pts.push_back(Point{x, E.neg(y), false});
    }
  }
  return pts;
}

}  // namespace

std::vector<Point> enumerate_points(const Curve& C, Ext ext) {
  return ext == Ext::kBase ? enumerate_base(C) : enumerate_quadratic(C);
}

Point frobenius_apply(const Curve& C, const Point& P) {
  if (!C.contains(P)) {
    throw UsageError("frobenius_apply input not on the curve");
  }
  if (P.inf) return P;
  return Point{C.ext().conj(P.x), C.ext().conj(P.y), false};
}

}  // namespace isolab
