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
#include <cstring>
#include <string>

#include "doctest.h"
#include "isolab/curve.hpp"
#include "isolab/error.hpp"
#include "isolab/field.hpp"
#include "isolab/hasse.hpp"
#include "isolab/zagier.hpp"

using namespace isolab;

TEST_CASE("character sums match hand-checked values") {
  CHECK_EQ(char_sum(PrimeField(5), 0, 3), 0);
  CHECK_EQ(char_sum(PrimeField(11), -35, 98), 4);
  CHECK_EQ(char_sum(PrimeField(5), -35, 98), 0);
  // x^3 + x + 1 over F_7 sums to -3 (trace 3 with 5 points).
  CHECK_EQ(char_sum(PrimeField(7), 1, 1), -3);
}

TEST_CASE("character sum is minus the trace of the reduced curve") {
  for (std::uint64_t p : {5ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 97ULL}) {
    CHECK_EQ(char_sum(PrimeField(p), -35, 98), -trace(Curve(p, -35, 98)));
  }
}

TEST_CASE("primes classify by their residue mod 7") {
  CHECK_EQ(classify_prime_mod7(2), Class7::kExcluded);
  CHECK_EQ(classify_prime_mod7(3), Class7::kExcluded);
  CHECK_EQ(classify_prime_mod7(7), Class7::kExcluded);
  CHECK_EQ(classify_prime_mod7(11), Class7::kQr);   // 11 = 4 mod 7
  CHECK_EQ(classify_prime_mod7(29), Class7::kQr);   // 29 = 1 mod 7
  CHECK_EQ(classify_prime_mod7(113), Class7::kQr);  // 113 = 1 mod 7
  CHECK_EQ(classify_prime_mod7(5), Class7::kNqr);
  CHECK_EQ(classify_prime_mod7(13), Class7::kNqr);
}

TEST_CASE("representation by the form A^2 + 7B^2") {
  auto r11 = represent_a2_7b2(11);
  REQUIRE(r11.has_value());
  CHECK_EQ(r11->first, 2);
  CHECK_EQ(r11->second, 1);
  auto r29 = represent_a2_7b2(29);
  REQUIRE(r29.has_value());
  CHECK_EQ(r29->first, 1);
  CHECK_EQ(r29->second, 2);
  auto r23 = represent_a2_7b2(23);
  REQUIRE(r23.has_value());
  CHECK_EQ(r23->first, 4);
  CHECK_EQ(r23->second, 1);
  auto r7 = represent_a2_7b2(7);
  REQUIRE(r7.has_value());
  CHECK_EQ(r7->first, 0);
  CHECK_EQ(r7->second, 1);
  CHECK_FALSE(represent_a2_7b2(5).has_value());
  CHECK_FALSE(represent_a2_7b2(13).has_value());
  CHECK_FALSE(represent_a2_7b2(3).has_value());
}

TEST_CASE("a residue prime has exactly one representation") {
  for (std::uint64_t p : primes_in_range(11, 10000)) {
    if (classify_prime_mod7(p) != Class7::kQr) continue;
    int reps = 0;
    for (std::uint64_t B = 1; B * B * 7 <= p; ++B) {
      std::uint64_t r = p - 7 * B * B;
      std::uint64_t A = isqrt(r);
      if (A * A == r) ++reps;
    }
    CHECK_EQ(reps, 1);
  }
}

TEST_CASE("verification records carry the full story") {
  ZagierRecord r = zagier_verify(11);
  CHECK_EQ(r.p, 11);
  CHECK_EQ(r.class7, Class7::kQr);
  CHECK_EQ(r.s, 4);
  CHECK(r.has_rep);
  CHECK_EQ(r.a, 2);
  CHECK_EQ(r.b, 1);
  CHECK_EQ(r.verdict, Verdict::kTwoAOk);

  ZagierRecord n = zagier_verify(5);
  CHECK_EQ(n.class7, Class7::kNqr);
  CHECK_EQ(n.s, 0);
  CHECK_FALSE(n.has_rep);
  CHECK_EQ(n.verdict, Verdict::kZeroOk);

  ZagierRecord e = zagier_verify(7);
  CHECK_EQ(e.class7, Class7::kExcluded);
  CHECK_EQ(e.verdict, Verdict::kSkipped);

  CHECK_THROWS_AS(zagier_verify(9), UsageError);
  CHECK_THROWS_AS(zagier_verify(0), UsageError);
}

TEST_CASE("sweep covers every prime with no failures") {
  auto recs = zagier_sweep(100);
  CHECK_EQ(recs.size(), 25);  // primes up to 100
  std::uint64_t prev = 0;
  for (const auto& r : recs) {
    CHECK(is_prime(r.p));
    CHECK(r.p > prev);
    prev = r.p;
    CHECK(r.verdict != Verdict::kFail);
    switch (r.class7) {
      case Class7::kQr:
        CHECK_EQ(r.verdict, Verdict::kTwoAOk);
        CHECK(r.has_rep);
        CHECK_EQ(r.a * r.a + 7 * r.b * r.b, r.p);
        CHECK_EQ(static_cast<std::uint64_t>(r.s < 0 ? -r.s : r.s), 2 * r.a);
        break;
      case Class7::kNqr:
        CHECK_EQ(r.verdict, Verdict::kZeroOk);
        CHECK_EQ(r.s, 0);
        break;
      case Class7::kExcluded:
        CHECK_EQ(r.verdict, Verdict::kSkipped);
        break;
    }
  }
}

TEST_CASE("sweep records satisfy the trace bound and parity") {
  for (const auto& r : zagier_sweep(2000)) {
    std::uint64_t abs_s = static_cast<std::uint64_t>(r.s < 0 ? -r.s : r.s);
    CHECK(abs_s <= 2 * isqrt(r.p));
    if (r.class7 != Class7::kExcluded) CHECK_EQ(abs_s % 2, 0);
  }
}

TEST_CASE("sweep output is independent of the worker count") {
  auto one = zagier_sweep(500, 1);
  auto three = zagier_sweep(500, 3);
  REQUIRE_EQ(one.size(), three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK_EQ(one[i].p, three[i].p);
    CHECK_EQ(one[i].s, three[i].s);
    CHECK_EQ(one[i].verdict, three[i].verdict);
  }
}

TEST_CASE("sweep enforces its bound") {
  CHECK_THROWS_AS(zagier_sweep(1000001), ResourceLimitError);
}

TEST_CASE("enum names render for reports") {
  CHECK_EQ(std::string(to_string(Class7::kQr)), "QR");
  CHECK_EQ(std::string(to_string(Class7::kNqr)), "NQR");
  CHECK_EQ(std::string(to_string(Class7::kExcluded)), "EXCLUDED");
  CHECK_EQ(std::string(to_string(Verdict::kZeroOk)), "ZERO_OK");
  CHECK_EQ(std::string(to_string(Verdict::kTwoAOk)), "TWO_A_OK");
  CHECK_EQ(std::string(to_string(Verdict::kFail)), "FAIL");
  CHECK_EQ(std::string(to_string(Verdict::kSkipped)), "SKIPPED");
}
