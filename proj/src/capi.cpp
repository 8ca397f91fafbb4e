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

#include "isogeny_lab.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "isolab/curve.hpp"
#include "isolab/error.hpp"
#include "isolab/field.hpp"
#include "isolab/hasse.hpp"
#include "isolab/xmap.hpp"
#include "isolab/zagier.hpp"

struct isolab_curve_struct {
  isolab::Curve curve;
};

namespace {

constexpr const char* kVersion = "1.0.0";

int map_error(const isolab::Error& e) {
  switch (e.code()) {
    case isolab::ErrorCode::kUsage:
      return ISOLAB_ERR_USAGE;
    case isolab::ErrorCode::kDivideByZero:
      return ISOLAB_ERR_DIV_ZERO;
    case isolab::ErrorCode::kSingularCurve:
      return ISOLAB_ERR_SINGULAR_CURVE;
    case isolab::ErrorCode::kDegenerateSum:
      return ISOLAB_ERR_DEGENERATE_SUM;
    case isolab::ErrorCode::kInseparable:
      return ISOLAB_ERR_INSEPARABLE;
    case isolab::ErrorCode::kIdentityViolation:
      return ISOLAB_ERR_IDENTITY_VIOLATION;
    case isolab::ErrorCode::kResourceLimit:
      return ISOLAB_ERR_RESOURCE_LIMIT;
  }
  return ISOLAB_ERR_INTERNAL;
}

thread_local std::string g_last_error;

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    int rc = fn();
    if (rc == ISOLAB_OK) g_last_error.clear();
    return rc;
  } catch (const isolab::Error& e) {
    g_last_error = e.what();
    return map_error(e);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ISOLAB_ERR_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ISOLAB_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return ISOLAB_ERR_INTERNAL;
  }
}

void fill_report(const isolab::CountReport& r, isolab_count_report_t* out) {
  out->p = r.p;
  out->a = r.a;
  out->b = r.b;
  out->n = r.n;
  out->t = r.t;
  out->bound_ok = r.bound_ok ? 1 : 0;
  out->d_one_minus_pi = r.d_one_minus_pi;
}

void fill_zagier(const isolab::ZagierRecord& r, isolab_zagier_record_t* out) {
  out->p = r.p;
  switch (r.class7) {
    case isolab::Class7::kQr:
      out->class7 = ISOLAB_CLASS7_QR;
      break;
    case isolab::Class7::kNqr:
      out->class7 = ISOLAB_CLASS7_NQR;
      break;
    default:
      out->class7 = ISOLAB_CLASS7_EXCLUDED;
  }
  out->s = r.s;
  out->has_rep = r.has_rep ? 1 : 0;
  out->a = r.a;
  out->b = r.b;
  switch (r.verdict) {
    case isolab::Verdict::kZeroOk:
      out->verdict = ISOLAB_VERDICT_ZERO_OK;
      break;
    case isolab::Verdict::kTwoAOk:
      out->verdict = ISOLAB_VERDICT_TWO_A_OK;
      break;
    case isolab::Verdict::kFail:
      out->verdict = ISOLAB_VERDICT_FAIL;
      break;
    default:
      out->verdict = ISOLAB_VERDICT_SKIPPED;
  }
}

}  // namespace

extern "C" {

const char* isolab_version(void) { return kVersion; }

const char* isolab_last_error(void) { return g_last_error.c_str(); }

const char* isolab_strerror(int rc) {
  switch (rc) {
    case ISOLAB_OK:
      return "ok";
    case ISOLAB_ERR_USAGE:
      return "invalid argument";
    case ISOLAB_ERR_DIV_ZERO:
      return "division by zero";
    case ISOLAB_ERR_SINGULAR_CURVE:
      return "singular curve: 4a^3 + 27b^2 = 0";
    case ISOLAB_ERR_DEGENERATE_SUM:
      return "degenerate sum: the two x-maps coincide";
    case ISOLAB_ERR_INSEPARABLE:
      return "inseparable multiplication map: p divides m";
    case ISOLAB_ERR_IDENTITY_VIOLATION:
      return "verified identity failed to hold";
    case ISOLAB_ERR_RESOURCE_LIMIT:
      return "input exceeds a documented resource bound";
    case ISOLAB_ERR_NULL_POINTER:
      return "null pointer argument";
    case ISOLAB_ERR_BUFFER_TOO_SMALL:
      return "output buffer too small";
    default:
      return "internal error";
  }
}

int isolab_is_prime(uint64_t n, int* out) {
  if (out == nullptr) return ISOLAB_ERR_NULL_POINTER;
  return guarded([&] {
    *out = isolab::is_prime(n) ? 1 : 0;
    return ISOLAB_OK;
  });
}

int isolab_legendre(int64_t a, uint64_t p, int* out) {
  if (out == nullptr) return ISOLAB_ERR_NULL_POINTER;
  return guarded([&] {
    isolab::PrimeField f(p);
    *out = isolab::legendre(a, f);
    return ISOLAB_OK;
  });
}

int isolab_char_sum(uint64_t p, int64_t c1, int64_t c0, int64_t* out) {
  if (out == nullptr) return ISOLAB_ERR_NULL_POINTER;
  return guarded([&] {
    isolab::PrimeField f(p);
    *out = isolab::char_sum(f, c1, c0);
    return ISOLAB_OK;
  });
}

int isolab_curve_new(uint64_t p, int64_t a, int64_t b,
                     isolab_curve_t** out) {
  if (out == nullptr) return ISOLAB_ERR_NULL_POINTER;
  *out = nullptr;
  return guarded([&] {
    *out = new isolab_curve_struct{isolab::Curve(p, a, b)};
    return ISOLAB_OK;
  });
}

int isolab_curve_free(isolab_curve_t* curve) {
  delete curve;
  return ISOLAB_OK;
}

int isolab_hasse_check(const isolab_curve_t* curve,
                       isolab_count_report_t* out) {
  if (curve == nullptr || out == nullptr) return ISOLAB_ERR_NULL_POINTER;
  return guarded([&] {
    fill_report(isolab::hasse_check(curve->curve), out);
    return ISOLAB_OK;
  });
}

int isolab_hasse_sweep(uint64_t p_min, uint64_t p_max, isolab_report_cb cb,
                       void* user, double* max_ratio_out) {
  if (cb == nullptr) return ISOLAB_ERR_NULL_POINTER;
  return guarded([&] {
    isolab::SweepSummary s = isolab::exhaustive_sweep(p_min, p_max);
    for (const isolab::CountReport& r : s.reports) {
      isolab_count_report_t rec;
      fill_report(r, &rec);
      int rc = cb(&rec, user);
      if (rc != 0) return rc;
    }
    if (max_ratio_out != nullptr) *max_ratio_out = s.max_ratio;
    return ISOLAB_OK;
  });
}

int isolab_degree_form(const isolab_curve_t* curve, int64_t m, int64_t n,
                       int64_t* out) {
  if (curve == nullptr || out == nullptr) return ISOLAB_ERR_NULL_POINTER;
  return guarded([&] {
    *out = isolab::degree_form(curve->curve, m, n);
    return ISOLAB_OK;
  });
}

int isolab_char_equation_check(const isolab_curve_t* curve, int64_t m,
                               int64_t n, int64_t sample_size, int* ok_out,
                               int64_t* tr_out, int64_t* nrm_out,
                               int64_t* points_out) {
  if (curve == nullptr || ok_out == nullptr) return ISOLAB_ERR_NULL_POINTER;
  return guarded([&] {
    const isolab::Curve& C = curve->curve;
    std::int64_t t = isolab::trace(C);
    bool ok = isolab::general_endo_char_check(C, m, n, sample_size);
    *ok_out = ok ? 1 : 0;
    if (tr_out != nullptr) *tr_out = 2 * m + n * t;
    if (nrm_out != nullptr) {
      *nrm_out = isolab::degree_form_with_trace(C.p(), t, m, n);
    }
    if (points_out != nullptr) {
      auto total = static_cast<std::int64_t>(
          isolab::enumerate_points(C, isolab::Ext::kQuadratic).size());
      *points_out =
          sample_size > 0 && sample_size < total ? sample_size : total;
    }
    return ISOLAB_OK;
  });
}

int isolab_kernel_count_one_plus_pi(const isolab_curve_t* curve,
                                    int64_t* out) {
  if (curve == nullptr || out == nullptr) return ISOLAB_ERR_NULL_POINTER;
  return guarded([&] {
    *out = isolab::kernel_count_one_plus_pi(curve->curve);
    return ISOLAB_OK;
  });
}

int isolab_parallelogram_mult_maps(const isolab_curve_t* curve, int64_t m,
                                   int64_t n, int64_t* lhs_out,
                                   int64_t* rhs_out, int* ok_out) {
  if (curve == nullptr || lhs_out == nullptr || rhs_out == nullptr ||
      ok_out == nullptr) {
    return ISOLAB_ERR_NULL_POINTER;
  }
  return guarded([&] {
    isolab::XMap phi = isolab::mult_by_m_xmap(curve->curve, m);
    isolab::XMap psi = isolab::mult_by_m_xmap(curve->curve, n);
    isolab::ParallelogramResult r = isolab::parallelogram_check(phi, psi);
    isolab::verify_u_constant(isolab::compose_sum_product(phi, psi));
    *lhs_out = r.lhs;
    *rhs_out = r.rhs;
    *ok_out = r.ok ? 1 : 0;
    return ISOLAB_OK;
  });
}

int isolab_parallelogram_frobenius(const isolab_curve_t* curve,
                                   int64_t* lhs_out, int64_t* rhs_out,
                                   int* ok_out) {
  if (curve == nullptr || lhs_out == nullptr || rhs_out == nullptr ||
      ok_out == nullptr) {
    return ISOLAB_ERR_NULL_POINTER;
  }
  return guarded([&] {
    isolab::XMap phi = isolab::identity_xmap(curve->curve);
    isolab::XMap psi = isolab::frobenius_xmap(curve->curve);
    isolab::ParallelogramResult r = isolab::parallelogram_check(phi, psi);
    isolab::verify_u_constant(isolab::compose_sum_product(phi, psi));
    *lhs_out = r.lhs;
    *rhs_out = r.rhs;
    *ok_out = r.ok ? 1 : 0;
    return ISOLAB_OK;
  });
}

int isolab_mult_map_check(const isolab_curve_t* curve, int64_t m,
                          int64_t* degree_out, int* oracle_match_out) {
  if (curve == nullptr || degree_out == nullptr ||
      oracle_match_out == nullptr) {
    return ISOLAB_ERR_NULL_POINTER;
  }
  return guarded([&] {
    isolab::XMap built = isolab::mult_by_m_xmap(curve->curve, m);
    isolab::XMap oracle = isolab::division_poly_xmap(curve->curve, m);
    *degree_out = isolab::xmap_degree(built);
    *oracle_match_out = built == oracle ? 1 : 0;
    return ISOLAB_OK;
  });
}

int isolab_mult_map_coeffs(const isolab_curve_t* curve, int64_t m,
                           int which, uint64_t* buf, size_t cap,
                           size_t* len_out) {
  if (curve == nullptr || len_out == nullptr) return ISOLAB_ERR_NULL_POINTER;
  if (which != 0 && which != 1) return ISOLAB_ERR_USAGE;
  return guarded([&] {
    isolab::XMap map = isolab::mult_by_m_xmap(curve->curve, m);
    const auto& c = (which == 0 ? map.num : map.den).coeffs();
    *len_out = c.size();
    if (c.size() > cap) return ISOLAB_ERR_BUFFER_TOO_SMALL;
    if (buf == nullptr && !c.empty()) return ISOLAB_ERR_NULL_POINTER;
    if (!c.empty()) std::memcpy(buf, c.data(), c.size() * sizeof(uint64_t));
    return ISOLAB_OK;
  });
}

int isolab_resultant_identity(const isolab_curve_t* curve,
                              uint64_t* constant_out, int* ok_out) {
  if (curve == nullptr || constant_out == nullptr || ok_out == nullptr) {
    return ISOLAB_ERR_NULL_POINTER;
  }
  return guarded([&] {
    isolab::Fp c = isolab::resultant_identity_check(curve->curve);
    *constant_out = c.v;
    *ok_out = 1;
    return ISOLAB_OK;
  });
}

int isolab_pair_height_fuzz(uint64_t p, int max_deg, uint64_t iters,
                            uint64_t seed, uint64_t* checked_out,
                            uint64_t* failures_out) {
  if (checked_out == nullptr || failures_out == nullptr) {
    return ISOLAB_ERR_NULL_POINTER;
  }
  return guarded([&] {
    isolab::FuzzStats st = isolab::pair_height_fuzz(p, max_deg, iters, seed);
    *checked_out = st.checked;
    *failures_out = st.height_failures;
    return ISOLAB_OK;
  });
}

int isolab_sum_diff_height_fuzz(uint64_t p, int max_deg, uint64_t iters,
                                uint64_t seed, uint64_t* checked_out,
                                uint64_t* height_failures_out,
                                uint64_t* u_failures_out) {
  if (checked_out == nullptr || height_failures_out == nullptr ||
      u_failures_out == nullptr) {
    return ISOLAB_ERR_NULL_POINTER;
  }
  return guarded([&] {
    isolab::FuzzStats st =
        isolab::sum_diff_height_fuzz(p, max_deg, iters, seed);
    *checked_out = st.checked;
    *height_failures_out = st.height_failures;
    *u_failures_out = st.u_failures;
    return ISOLAB_OK;
  });
}

int isolab_zagier_verify(uint64_t p, isolab_zagier_record_t* out) {
  if (out == nullptr) return ISOLAB_ERR_NULL_POINTER;
  return guarded([&] {
    fill_zagier(isolab::zagier_verify(p), out);
    return ISOLAB_OK;
  });
}

int isolab_zagier_sweep(uint64_t p_max, isolab_zagier_cb cb, void* user) {
  if (cb == nullptr) return ISOLAB_ERR_NULL_POINTER;
  return guarded([&] {
    for (const isolab::ZagierRecord& r : isolab::zagier_sweep(p_max)) {
      isolab_zagier_record_t rec;
      fill_zagier(r, &rec);
      int rc = cb(&rec, user);
      if (rc != 0) return rc;
    }
    return ISOLAB_OK;
  });
}

}  // extern "C"
