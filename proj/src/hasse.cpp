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

#include "isolab/hasse.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "isolab/error.hpp"
#include "isolab/parallel.hpp"

namespace isolab {

std::int64_t count_points(const Curve& C) {
  std::uint64_t p = C.p();
  if (p > (std::uint64_t{1} << 32)) {
    throw ResourceLimitError("point counting requires p <= 2^32");
  }
  const PrimeField& f = C.field();
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    sum += legendre(static_cast<std::int64_t>(C.f_eval(x)), f);
  }
  return static_cast<std::int64_t>(p) + 1 + sum;
}

std::int64_t trace(const Curve& C) {
  return static_cast<std::int64_t>(C.p()) + 1 - count_points(C);
}

CountReport hasse_check(const Curve& C) {
  CountReport r;
  r.p = C.p();
  r.a = C.a();
  r.b = C.b();
  r.n = count_points(C);
  r.t = static_cast<std::int64_t>(r.p) + 1 - r.n;
  __int128 t2 = static_cast<__int128>(r.t) * r.t;
  r.bound_ok = t2 <= static_cast<__int128>(4) * r.p;
  r.d_one_minus_pi = r.n;
  return r;
}

std::int64_t degree_form_with_trace(std::uint64_t p, std::int64_t t,
                                    std::int64_t m, std::int64_t n) {
  __int128 d = static_cast<__int128>(m) * m +
               static_cast<__int128>(m) * n * t +
               static_cast<__int128>(n) * n * static_cast<std::int64_t>(p);
  if (d > std::numeric_limits<std::int64_t>::max() ||
      d < std::numeric_limits<std::int64_t>::min()) {
    throw UsageError("degree form exceeds 64 bits");
  }
  return static_cast<std::int64_t>(d);
}

std::int64_t degree_form(const Curve& C, std::int64_t m, std::int64_t n) {
  return degree_form_with_trace(C.p(), trace(C), m, n);
}

namespace {

std::vector<Point> quadratic_points(const Curve& C,
                                    std::int64_t sample_size) {
  std::vector<Point> pts = enumerate_points(C, Ext::kQuadratic);
  if (sample_size > 0 &&
      static_cast<std::size_t>(sample_size) < pts.size()) {
    pts.resize(static_cast<std::size_t>(sample_size));
  }
  return pts;
}

}  // namespace

bool frobenius_char_equation_check(const Curve& C,
                                   std::int64_t sample_size) {
  std::int64_t t = trace(C);
  auto p = static_cast<std::int64_t>(C.p());
  for (const Point& P : quadratic_points(C, sample_size)) {
    Point piP = frobenius_apply(C, P);
    Point pi2P = frobenius_apply(C, piP);
    Point acc = point_add(C, pi2P, scalar_mul(C, -t, piP));
    acc = point_add(C, acc, scalar_mul(C, p, P));
    if (!(acc == Point::infinity())) return false;
  }
  return true;
}

bool general_endo_char_check(const Curve& C, std::int64_t m, std::int64_t n,
                             std::int64_t sample_size) {
  if (m == 0 && n == 0) throw UsageError("(m, n) must be nonzero");
  std::int64_t t = trace(C);
  std::int64_t tr = 2 * m + n * t;
  std::int64_t nrm = degree_form_with_trace(C.p(), t, m, n);
  auto phi = [&](const Point& P) {
    Point piP = frobenius_apply(C, P);
    return point_add(C, scalar_mul(C, m, P), scalar_mul(C, n, piP));
  };
  for (const Point& P : quadratic_points(C, sample_size)) {
    Point phiP = phi(P);
    Point acc = point_add(C, phi(phiP), scalar_mul(C, -tr, phiP));
    acc = point_add(C, acc, scalar_mul(C, nrm, P));
    if (!(acc == Point::infinity())) return false;
  }
  return true;
}

std::int64_t kernel_count_one_plus_pi(const Curve& C) {
  std::int64_t count = 0;
  for (const Point& P : enumerate_points(C, Ext::kQuadratic)) {
    if (frobenius_apply(C, P) == point_neg(C, P)) ++count;
  }
  return count;
}

SweepSummary exhaustive_sweep(std::uint64_t p_min, std::uint64_t p_max,
                              unsigned workers) {
  if (p_max > (std::uint64_t{1} << 7)) {
    throw ResourceLimitError("exhaustive sweep requires p_max <= 128");
  }
  std::vector<std::uint64_t> primes =
      primes_in_range(std::max<std::uint64_t>(p_min, 5), p_max);

  // Flatten to (p, a, b) triples so workers split evenly.
  struct Job {
    std::uint64_t p, a, b;
  };
  std::vector<Job> jobs;
  for (std::uint64_t p : primes) {
    PrimeField f(p);
    for (std::uint64_t a = 0; a < p; ++a) {
      std::uint64_t a3_4 = f.mul(4, f.mul(a, f.mul(a, a)));
      for (std::uint64_t b = 0; b < p; ++b) {
        if (f.add(a3_4, f.mul(27, f.mul(b, b))) != 0) {
          jobs.push_back(Job{p, a, b});
        }
      }
    }
  }

  SweepSummary out;
  out.reports.resize(jobs.size());
  parallel_for(jobs.size(), worker_count(workers), [&](std::uint64_t i) {
    const Job& j = jobs[i];
    Curve C(j.p, static_cast<std::int64_t>(j.a),
            static_cast<std::int64_t>(j.b));
    out.reports[i] = hasse_check(C);
  });

  out.curve_count = out.reports.size();
  out.all_bounds_ok = true;
  // argmax of t^2 / 4p by cross multiplication, floating point only at the
  // very end.
  __int128 best_num = 0;
  __int128 best_den = 1;
  for (const CountReport& r : out.reports) {
    if (!r.bound_ok) out.all_bounds_ok = false;
    __int128 num = static_cast<__int128>(r.t) * r.t;
    __int128 den = static_cast<__int128>(4) * r.p;
    if (num * best_den > best_num * den) {
      best_num = num;
      best_den = den;
    }
  }
  out.max_ratio = std::sqrt(static_cast<double>(best_num) /
                            static_cast<double>(best_den));
  return out;
}

}  // namespace isolab
