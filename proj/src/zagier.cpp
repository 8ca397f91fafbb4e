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

#include "isolab/zagier.hpp"

#include <string>

#include "isolab/curve.hpp"
#include "isolab/error.hpp"
#include "isolab/hasse.hpp"
#include "isolab/parallel.hpp"

namespace isolab {

std::int64_t char_sum(const PrimeField& f, std::int64_t c1,
                      std::int64_t c0) {
  std::uint64_t c1r = f.reduce(c1);
  std::uint64_t c0r = f.reduce(c0);
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < f.p(); ++x) {
    std::uint64_t x2 = f.mul(x, x);
    std::uint64_t fx =
        f.add(f.add(f.mul(x2, x), f.mul(c1r, x)), c0r);
    sum += legendre(static_cast<std::int64_t>(fx), f);
  }
  return sum;
}

Class7 classify_prime_mod7(std::uint64_t p) {
  if (p == 2 || p == 3 || p == 7) return Class7::kExcluded;
  static const PrimeField seven(7);
  return legendre(static_cast<std::int64_t>(p % 7), seven) == 1
             ? Class7::kQr
             : Class7::kNqr;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> represent_a2_7b2(
    std::uint64_t p) {
  for (std::uint64_t B = 1; B <= isqrt(p / 7); ++B) {
    std::uint64_t r = p - 7 * B * B;
    std::uint64_t A = isqrt(r);
    if (A * A == r) return std::make_pair(A, B);
  }
  return std::nullopt;
}

ZagierRecord zagier_verify(std::uint64_t p) {
  if (!is_prime(p)) {
    throw UsageError(std::to_string(p) + " is not prime");
  }
  ZagierRecord rec;
  rec.p = p;
  rec.class7 = classify_prime_mod7(p);
  if (rec.class7 == Class7::kExcluded) {
    rec.verdict = Verdict::kSkipped;
    return rec;
  }
  PrimeField f(p);
  rec.s = char_sum(f, -35, 98);
  if (rec.class7 == Class7::kNqr) {
    rec.verdict = rec.s == 0 ? Verdict::kZeroOk : Verdict::kFail;
    return rec;
  }
  auto rep = represent_a2_7b2(p);
  if (!rep.has_value()) {
    rec.verdict = Verdict::kFail;
    return rec;
  }
  rec.has_rep = true;
  rec.a = rep->first;
  rec.b = rep->second;
  std::uint64_t abs_s =
      rec.s < 0 ? static_cast<std::uint64_t>(-rec.s)
                : static_cast<std::uint64_t>(rec.s);
  rec.verdict = abs_s == 2 * rec.a ? Verdict::kTwoAOk : Verdict::kFail;
  return rec;
}

std::vector<ZagierRecord> zagier_sweep(std::uint64_t p_max,
                                       unsigned workers) {
  if (p_max > 1000000) {
    throw ResourceLimitError("sweep requires p_max <= 10^6");
  }
  std::vector<std::uint64_t> primes = primes_in_range(2, p_max);
  std::vector<ZagierRecord> out(primes.size());
  parallel_for(primes.size(), worker_count(workers), [&](std::uint64_t i) {
    std::uint64_t p = primes[i];
    out[i] = zagier_verify(p);
    // Module-coupling cross-check at desk scale: S(p) is minus the trace
    // of the reduced curve.
    if (p <= 10000 && out[i].class7 != Class7::kExcluded) {
      Curve C(p, -35, 98);
      if (out[i].s != -trace(C)) {
        throw IdentityViolationError(
            "character sum disagrees with curve trace at p = " +
            std::to_string(p));
      }
    }
  });
  return out;
}

const char* to_string(Class7 c) {
  switch (c) {
    case Class7::kQr:
      return "QR";
    case Class7::kNqr:
      return "NQR";
    default:
      return "EXCLUDED";
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kZeroOk:
      return "ZERO_OK";
    case Verdict::kTwoAOk:
      return "TWO_A_OK";
    case Verdict::kFail:
      return "FAIL";
    default:
      return "SKIPPED";
  }
}

}  // namespace isolab
