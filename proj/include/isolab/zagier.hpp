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

#ifndef ISOLAB_ZAGIER_HPP
#define ISOLAB_ZAGIER_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "isolab/field.hpp"

namespace isolab {

// The character sum S(p) = sum_x legendre(x^3 - 35x + 98) satisfies
//   S(p) = 0 when (p/7) = -1, and |S(p)| = 2A with p = A^2 + 7B^2
//   when (p/7) = +1,
// for primes p outside {2, 3, 7} (2 and 7 divide the discriminant constant
// 4*(-35)^3 + 27*98^2 = 87808 = 2^8 * 7^3; characteristic 3 is outside the
// curve model). This module verifies the claim prime by prime.

enum class Class7 { kQr, kNqr, kExcluded };
enum class Verdict { kZeroOk, kTwoAOk, kFail, kSkipped };

struct ZagierRecord {
  std::uint64_t p = 0;
  Class7 class7 = Class7::kExcluded;
  std::int64_t s = 0;
  bool has_rep = false;
  std::uint64_t a = 0;  // valid when has_rep
  std::uint64_t b = 0;  // valid when has_rep
  Verdict verdict = Verdict::kSkipped;
};

// sum_x legendre(x^3 + c1 x + c0) over x in [0, p).
std::int64_t char_sum(const PrimeField& f, std::int64_t c1, std::int64_t c0);

Class7 classify_prime_mod7(std::uint64_t p);

// Nonnegative (A, B) with A^2 + 7B^2 = p, B minimal positive, or nothing.
std::optional<std::pair<std::uint64_t, std::uint64_t>> represent_a2_7b2(
    std::uint64_t p);

// p must be prime (UsageError otherwise).
ZagierRecord zagier_verify(std::uint64_t p);

// Records for every prime p <= p_max (p_max <= 10^6). For p <= 10^4 each
// record is cross-checked against -trace of the reduced curve
// (IdentityViolationError on mismatch). workers = 0 picks up
// ISOGENY_LAB_THREADS.
std::vector<ZagierRecord> zagier_sweep(std::uint64_t p_max,
                                       unsigned workers = 0);

const char* to_string(Class7 c);
const char* to_string(Verdict v);

}  // namespace isolab

#endif  // ISOLAB_ZAGIER_HPP
