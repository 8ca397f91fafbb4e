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

#ifndef ISOLAB_CURVE_HPP
#define ISOLAB_CURVE_HPP

#include <cstdint>
#include <vector>

#include "isolab/field.hpp"

namespace isolab {

// Affine point with coordinates in F_{p^2} (base-field points have zero
// sqrt(s) parts), or the point at infinity.
struct Point {
  F2 x{};
  F2 y{};
  bool inf = false;

  static Point infinity() { return Point{{}, {}, true}; }
  friend bool operator==(const Point&, const Point&) = default;
};

// y^2 = x^3 + ax + b over F_p with 4a^3 + 27b^2 != 0.
class Curve {
 public:
  // a and b are reduced mod p; singular parameters raise SingularCurveError.
  Curve(std::uint64_t p, std::int64_t a, std::int64_t b);

  std::uint64_t p() const { return field_.p(); }
  std::uint64_t a() const { return a_; }
  std::uint64_t b() const { return b_; }
  const PrimeField& field() const { return field_; }
  const QuadExt& ext() const { return ext_; }

  // x^3 + ax + b in the base field and in the extension.
  std::uint64_t f_eval(std::uint64_t x) const;
  F2 f_eval(const F2& x) const;

  bool contains(const Point& P) const;

 private:
  PrimeField field_;
  QuadExt ext_;
  std::uint64_t a_;
  std::uint64_t b_;
};

enum class Ext { kBase, kQuadratic };

Point point_neg(const Curve& C, const Point& P);

// Chord-tangent sum. Off-curve input raises UsageError.
Point point_add(const Curve& C, const Point& P, const Point& Q);

// m-fold sum by double-and-add; negative m negates first; [0]P = infinity.
Point scalar_mul(const Curve& C, std::int64_t m, const Point& P);

// All points over F_p (p <= 2^20) or over F_{p^2} (p <= 2^10), infinity
// first, then ascending by x, smaller y first. Deterministic order.
std::vector<Point> enumerate_points(const Curve& C, Ext ext);

// (x, y) -> (x^p, y^p), realized as conjugation in F_{p^2}.
Point frobenius_apply(const Curve& C, const Point& P);

}  // namespace isolab

#endif  // ISOLAB_CURVE_HPP
