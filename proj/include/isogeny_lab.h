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

/*
 * C interface to the isogeny-lab core. All functions return 0 on success
 * or a negative ISOLAB_ERR_* code; results come back through out
 * parameters. Handles are opaque and freed with their typed free function.
 * No exceptions cross this boundary.
 */

#ifndef ISOGENY_LAB_H
#define ISOGENY_LAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ISOLAB_OK 0
#define ISOLAB_ERR_USAGE (-1)
#define ISOLAB_ERR_DIV_ZERO (-2)
#define ISOLAB_ERR_SINGULAR_CURVE (-3)
#define ISOLAB_ERR_DEGENERATE_SUM (-4)
#define ISOLAB_ERR_INSEPARABLE (-5)
#define ISOLAB_ERR_IDENTITY_VIOLATION (-6)
#define ISOLAB_ERR_RESOURCE_LIMIT (-7)
#define ISOLAB_ERR_NULL_POINTER (-8)
#define ISOLAB_ERR_BUFFER_TOO_SMALL (-9)
#define ISOLAB_ERR_INTERNAL (-100)

const char* isolab_version(void);
const char* isolab_strerror(int rc);

/* Detailed message for the calling thread's most recent failed call;
 * empty string after a successful call. The pointer stays valid until
 * the same thread makes another library call. */
const char* isolab_last_error(void);

/* ---- number theory ------------------------------------------------- */

/* *out = 1 if n is prime, else 0. Deterministic for all 64-bit n. */
int isolab_is_prime(uint64_t n, int* out);

/* Legendre symbol of a mod p into *out (-1, 0 or +1); p must be a prime
 * with 3 < p < 2^61. */
int isolab_legendre(int64_t a, uint64_t p, int* out);

/* sum over x in [0, p) of legendre(x^3 + c1*x + c0). */
int isolab_char_sum(uint64_t p, int64_t c1, int64_t c0, int64_t* out);

/* ---- curves --------------------------------------------------------- */

typedef struct isolab_curve_struct isolab_curve_t;

/* y^2 = x^3 + ax + b over F_p; a, b taken mod p. Fails with
 * ISOLAB_ERR_SINGULAR_CURVE when 4a^3 + 27b^2 = 0. */
int isolab_curve_new(uint64_t p, int64_t a, int64_t b, isolab_curve_t** out);
int isolab_curve_free(isolab_curve_t* curve);

typedef struct {
  uint64_t p;
  uint64_t a;
  uint64_t b;
  int64_t n;         /* |E(F_p)| */
  int64_t t;         /* p + 1 - n */
  int bound_ok;      /* t^2 <= 4p */
  int64_t d_one_minus_pi; /* equals n */
} isolab_count_report_t;

int isolab_hasse_check(const isolab_curve_t* curve,
                       isolab_count_report_t* out);

/* Reports for every nonsingular (a, b) over every prime in
 * [p_min, p_max] (p_max <= 128), in (p, a, b) order, delivered one at a
 * time to cb. A nonzero return from cb aborts the sweep with that code.
 * max_ratio_out (optional) receives max |t| / (2 sqrt p). */
typedef int (*isolab_report_cb)(const isolab_count_report_t* report,
                                void* user);
int isolab_hasse_sweep(uint64_t p_min, uint64_t p_max, isolab_report_cb cb,
                       void* user, double* max_ratio_out);

/* Degree of [m] + [n]*pi: m^2 + m*n*t + n^2*p. */
int isolab_degree_form(const isolab_curve_t* curve, int64_t m, int64_t n,
                       int64_t* out);

/* Characteristic equation of phi = [m] + [n]*pi checked pointwise over
 * E(F_{p^2}) (sample_size <= 0: every point). *ok_out = 1 when it
 * annihilates all sampled points. tr_out/nrm_out (optional) receive the
 * coefficients 2m + nt and m^2 + mnt + n^2 p. Requires p <= 2^10. */
int isolab_char_equation_check(const isolab_curve_t* curve, int64_t m,
                               int64_t n, int64_t sample_size, int* ok_out,
                               int64_t* tr_out, int64_t* nrm_out,
                               int64_t* points_out);

/* #{P in E(F_{p^2}) : pi(P) = -P}; equals 2p + 2 - N. p <= 2^10. */
int isolab_kernel_count_one_plus_pi(const isolab_curve_t* curve,
                                    int64_t* out);

/* ---- x-map calculus -------------------------------------------------- */

/* Parallelogram law d(phi+psi) + d(phi-psi) = 2 d(phi) + 2 d(psi) for
 * phi = [m], psi = [n] (1 <= n, m <= 12, p dividing neither). Also runs
 * the constant-gcd check on the composed triple. */
int isolab_parallelogram_mult_maps(const isolab_curve_t* curve, int64_t m,
                                   int64_t n, int64_t* lhs_out,
                                   int64_t* rhs_out, int* ok_out);

/* Same with phi the identity x-map and psi the Frobenius x-map x^p;
 * lhs = rhs = 2 + 2p when the law holds. */
int isolab_parallelogram_frobenius(const isolab_curve_t* curve,
                                   int64_t* lhs_out, int64_t* rhs_out,
                                   int* ok_out);

/* Multiplication-by-m x-map: *degree_out = its degree (must be m^2),
 * *oracle_match_out = 1 iff the recursion-built map coincides with the
 * division-polynomial oracle. 1 <= m <= 12, p must not divide m. */
int isolab_mult_map_check(const isolab_curve_t* curve, int64_t m,
                          int64_t* degree_out, int* oracle_match_out);

/* Coefficients (ascending) of the numerator (which = 0) or denominator
 * (which = 1) of the reduced multiplication-by-m x-map. *len_out is set
 * to the coefficient count; fails with ISOLAB_ERR_BUFFER_TOO_SMALL if cap
 * is insufficient (then *len_out holds the required size). */
int isolab_mult_map_coeffs(const isolab_curve_t* curve, int64_t m,
                           int which, uint64_t* buf, size_t cap,
                           size_t* len_out);

/* Expands the degree-witness resultant combination for this curve's
 * (a, b); *constant_out receives the expansion constant, *ok_out = 1 iff
 * it equals 4a^3 + 27b^2. */
int isolab_resultant_identity(const isolab_curve_t* curve,
                              uint64_t* constant_out, int* ok_out);

/* Random coprime pairs (A,B), (C,D), degree <= max_deg: checks
 * H(AC, AD+BC, BD) = H(A,B) + H(C,D). */
int isolab_pair_height_fuzz(uint64_t p, int max_deg, uint64_t iters,
                            uint64_t seed, uint64_t* checked_out,
                            uint64_t* failures_out);

/* Random coprime quadruples on random nonsingular curves, stratified over
 * the degree cases: checks H(q1,q2,q3) = 2H(P,Q) + 2H(R,S) and that the
 * triple gcd is constant. */
int isolab_sum_diff_height_fuzz(uint64_t p, int max_deg, uint64_t iters,
                                uint64_t seed, uint64_t* checked_out,
                                uint64_t* height_failures_out,
                                uint64_t* u_failures_out);

/* ---- character-sum identity ------------------------------------------ */

typedef enum {
  ISOLAB_CLASS7_QR = 0,
  ISOLAB_CLASS7_NQR = 1,
  ISOLAB_CLASS7_EXCLUDED = 2,
} isolab_class7_t;

typedef enum {
  ISOLAB_VERDICT_ZERO_OK = 0,
  ISOLAB_VERDICT_TWO_A_OK = 1,
  ISOLAB_VERDICT_FAIL = 2,
  ISOLAB_VERDICT_SKIPPED = 3,
} isolab_verdict_t;

typedef struct {
  uint64_t p;
  int class7;   /* isolab_class7_t */
  int64_t s;    /* sum of legendre(x^3 - 35x + 98) */
  int has_rep;  /* a, b valid */
  uint64_t a;   /* p = a^2 + 7b^2 */
  uint64_t b;
  int verdict;  /* isolab_verdict_t */
} isolab_zagier_record_t;

int isolab_zagier_verify(uint64_t p, isolab_zagier_record_t* out);

typedef int (*isolab_zagier_cb)(const isolab_zagier_record_t* record,
                                void* user);
/* One record per prime p <= p_max (p_max <= 10^6), ascending; records for
 * p <= 10^4 are cross-checked against the curve trace. */
int isolab_zagier_sweep(uint64_t p_max, isolab_zagier_cb cb, void* user);

#ifdef __cplusplus
}
#endif

#endif /* ISOGENY_LAB_H */
