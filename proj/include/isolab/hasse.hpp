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

#ifndef ISOLAB_HASSE_HPP
#define ISOLAB_HASSE_HPP

#include <cstdint>
#include <vector>

#include "isolab/curve.hpp"

namespace isolab {

struct CountReport {
  std::uint64_t p = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::int64_t n = 0;          // |E(F_p)|
  std::int64_t t = 0;          // p + 1 - n
  bool bound_ok = false;       // t^2 <= 4p, exact integers
  std::int64_t d_one_minus_pi = 0;  // degree of 1 - Frobenius, equals n
};

// N = p + 1 + sum_x legendre(x^3 + ax + b). Requires p <= 2^32.
std::int64_t count_points(const Curve& C);

// t = p + 1 - N.
std::int64_t trace(const Curve& C);

CountReport hasse_check(const Curve& C);

// Degree of [m] + [n]*Frobenius: m^2 + mnt + n^2 p. Nonnegative for all
// integer (m, n); that positivity encodes the trace bound.
std::int64_t degree_form(const Curve& C, std::int64_t m, std::int64_t n);
std::int64_t degree_form_with_trace(std::uint64_t p, std::int64_t t,
                                    std::int64_t m, std::int64_t n);

// Checks pi^2(P) - [t] pi(P) + [p] P = infinity over E(F_{p^2}).
// sample_size <= 0 means every point; otherwise the first sample_size
// points in enumeration order. Requires p <= 2^10.
bool frobenius_char_equation_check(const Curve& C, std::int64_t sample_size);

// Same for phi = [m] + [n] pi with (m, n) != (0, 0): checks
// phi^2(P) - [tr] phi(P) + [nrm] P = infinity, where tr = 2m + nt and
// nrm = degree_form(m, n).
bool general_endo_char_check(const Curve& C, std::int64_t m, std::int64_t n,
                             std::int64_t sample_size);

// #{P in E(F_{p^2}) : pi(P) = -P}; the parallelogram law at (1, pi) forces
// this to be 2p + 2 - N. Requires p <= 2^10.
std::int64_t kernel_count_one_plus_pi(const Curve& C);

struct SweepSummary {
  std::vector<CountReport> reports;  // (p, a, b) lexicographic
  std::uint64_t curve_count = 0;
  bool all_bounds_ok = false;
  // max over curves of |t| / (2 sqrt(p)), exact argmax then one sqrt.
  double max_ratio = 0.0;
};

// Every nonsingular (a, b) for every prime in [p_min, p_max]; requires
// p_max <= 2^7. workers = 0 picks up ISOGENY_LAB_THREADS.
SweepSummary exhaustive_sweep(std::uint64_t p_min, std::uint64_t p_max,
                              unsigned workers = 0);

}  // namespace isolab

#endif  // ISOLAB_HASSE_HPP
