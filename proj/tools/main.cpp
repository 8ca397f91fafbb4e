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

// isolab: command-line front end over the shared C interface. One
// subcommand per verified claim; machine-readable output; deterministic
// for a fixed seed.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "isogeny_lab.h"
#include "json.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

// ---- row model and emitters ------------------------------------------

using Val = std::variant<std::monostate, std::int64_t, std::uint64_t, bool,
                         double, std::string>;
using Row = std::vector<std::pair<std::string, Val>>;

std::string fmt_double6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

std::string val_to_token(const Val& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(std::uint64_t x) const {
      return std::to_string(x);
    }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(double x) const { return fmt_double6(x); }
    std::string operator()(const std::string& x) const { return x; }
  };
  return std::visit(Visitor{}, v);
}

nlohmann::ordered_json row_to_json(const Row& row) {
  nlohmann::ordered_json j;
  for (const auto& [k, v] : row) {
    if (std::holds_alternative<std::monostate>(v)) {
      j[k] = nullptr;
    } else if (const auto* i = std::get_if<std::int64_t>(&v)) {
      j[k] = *i;
    } else if (const auto* u = std::get_if<std::uint64_t>(&v)) {
      j[k] = *u;
    } else if (const auto* b = std::get_if<bool>(&v)) {
      j[k] = *b;
    } else if (const auto* d = std::get_if<double>(&v)) {
      // Render ratios as fixed 6-decimal strings so output is
      // byte-reproducible.
      j[k] = fmt_double6(*d);
    } else {
      j[k] = std::get<std::string>(v);
    }
  }
  return j;
}

void emit_json_lines(std::ostream& os, const std::vector<Row>& rows) {
  for (const Row& row : rows) os << row_to_json(row).dump() << "\n";
}

void emit_csv(std::ostream& os, const std::vector<Row>& rows) {
  if (rows.empty()) return;
  for (std::size_t i = 0; i < rows.front().size(); ++i) {
    os << (i ? "," : "") << rows.front()[i].first;
  }
  os << "\n";
  for (const Row& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << val_to_token(row[i].second);
    }
    os << "\n";
  }
}

void emit_human(std::ostream& os, const std::vector<Row>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (std::size_t i = 0; i < rows.front().size(); ++i) {
    width[i] = rows.front()[i].first.size();
  }
  std::vector<std::vector<std::string>> cells;
  for (const Row& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string tok = val_to_token(row[i].second);
      if (tok.empty()) tok = "-";
      width[i] = std::max(width[i], tok.size());
      line.push_back(std::move(tok));
    }
    cells.push_back(std::move(line));
  }
  auto pad = [&](const std::string& s, std::size_t w, bool last) {
    os << s;
    if (!last) os << std::string(w - s.size() + 2, ' ');
  };
  for (std::size_t i = 0; i < rows.front().size(); ++i) {
    pad(rows.front()[i].first, width[i], i + 1 == rows.front().size());
  }
  os << "\n";
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      pad(line[i], width[i], i + 1 == line.size());
    }
    os << "\n";
  }
}

struct OutputConfig {
  std::string format = "human";
  std::string out_path;
};

// Emits rows plus optional trailing summary lines; returns false on I/O
// failure.
bool emit(const OutputConfig& cfg, const std::vector<Row>& rows,
          const std::vector<Row>& summary = {}) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      std::cerr << "error: cannot open " << cfg.out_path << "\n";
      return false;
    }
    os = &file;
  }
  if (cfg.format == "json-lines") {
    emit_json_lines(*os, rows);
    emit_json_lines(*os, summary);
  } else if (cfg.format == "csv") {
    emit_csv(*os, rows);  // summary omitted: csv stays one homogeneous table
  } else {
    emit_human(*os, rows);
    for (const Row& row : summary) {
      for (const auto& [k, v] : row) {
        *os << k << ": " << val_to_token(v) << "\n";
      }
    }
  }
  os->flush();
  return os->good();
}

// ---- C-API plumbing ---------------------------------------------------

struct CurveHandle {
  isolab_curve_t* c = nullptr;
  ~CurveHandle() { isolab_curve_free(c); }
};

// Returns the process exit code for a failed C call: identity violations
// mean a falsified claim (1); everything else is a usage problem (2).
int report_api_error(const char* what, int rc) {
  const char* detail = isolab_last_error();
  std::cerr << "error: " << what << ": "
            << (detail[0] ? detail : isolab_strerror(rc)) << "\n";
  return rc == ISOLAB_ERR_IDENTITY_VIOLATION ? kExitFail : kExitUsage;
}

Row count_report_row(const isolab_count_report_t& r) {
  return Row{{"p", std::uint64_t{r.p}},   {"a", std::uint64_t{r.a}},
             {"b", std::uint64_t{r.b}},   {"n", std::int64_t{r.n}},
             {"t", std::int64_t{r.t}},    {"bound_ok", r.bound_ok != 0}};
}

Row zagier_row(const isolab_zagier_record_t& r) {
  const char* cls = r.class7 == ISOLAB_CLASS7_QR
                        ? "QR"
                        : (r.class7 == ISOLAB_CLASS7_NQR ? "NQR"
                                                         : "EXCLUDED");
  const char* verdict =
      r.verdict == ISOLAB_VERDICT_ZERO_OK
          ? "ZERO_OK"
          : (r.verdict == ISOLAB_VERDICT_TWO_A_OK
                 ? "TWO_A_OK"
                 : (r.verdict == ISOLAB_VERDICT_FAIL ? "FAIL" : "SKIPPED"));
  Row row{{"p", std::uint64_t{r.p}}, {"class7", std::string(cls)},
          {"s", std::int64_t{r.s}}};
  if (r.has_rep) {
    row.emplace_back("a", std::uint64_t{r.a});
    row.emplace_back("b", std::uint64_t{r.b});
  } else {
    row.emplace_back("a", std::monostate{});
    row.emplace_back("b", std::monostate{});
  }
  row.emplace_back("verdict", std::string(verdict));
  return row;
}

// ---- subcommand runners ------------------------------------------------

struct CommonArgs {
  std::uint64_t p = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  OutputConfig out;
  bool inject_fault = false;
};

int run_count_like(const CommonArgs& args) {
  CurveHandle h;
  int rc = isolab_curve_new(args.p, args.a, args.b, &h.c);
  if (rc != ISOLAB_OK) return report_api_error("curve", rc);
  isolab_count_report_t r;
  rc = isolab_hasse_check(h.c, &r);
  if (rc != ISOLAB_OK) return report_api_error("hasse-check", rc);
  if (args.inject_fault) {
    r.t += 1;
    r.bound_ok = 0;
  }
  if (!emit(args.out, {count_report_row(r)})) return kExitFail;
  return r.bound_ok ? kExitPass : kExitFail;
}

int run_hasse_sweep(std::uint64_t p_min, std::uint64_t p_max,
                    const OutputConfig& out) {
  struct Ctx {
    std::vector<Row> rows;
    bool all_ok = true;
  } ctx;
  auto cb = [](const isolab_count_report_t* r, void* user) {
    auto* c = static_cast<Ctx*>(user);
    c->rows.push_back(count_report_row(*r));
    if (!r->bound_ok) c->all_ok = false;
    return 0;
  };
  double max_ratio = 0.0;
  int rc = isolab_hasse_sweep(p_min, p_max, cb, &ctx, &max_ratio);
  if (rc != ISOLAB_OK) return report_api_error("hasse-sweep", rc);
  std::vector<Row> summary{
      Row{{"curves", std::uint64_t{ctx.rows.size()}},
          {"max_ratio", max_ratio}}};
  if (!emit(out, ctx.rows, summary)) return kExitFail;
  return ctx.all_ok ? kExitPass : kExitFail;
}

int run_parallelogram(const CommonArgs& args, std::int64_t m, std::int64_t n,
                      bool use_frobenius) {
  CurveHandle h;
  int rc = isolab_curve_new(args.p, args.a, args.b, &h.c);
  if (rc != ISOLAB_OK) return report_api_error("curve", rc);
  std::int64_t lhs = 0, rhs = 0;
  int ok = 0;
  Row row{{"p", std::uint64_t{args.p}},
          {"a", std::int64_t{args.a}},
          {"b", std::int64_t{args.b}}};
  if (use_frobenius) {
    rc = isolab_parallelogram_frobenius(h.c, &lhs, &rhs, &ok);
    if (rc != ISOLAB_OK) return report_api_error("parallelogram", rc);
    row.emplace_back("pair", std::string("identity,frobenius"));
  } else {
    rc = isolab_parallelogram_mult_maps(h.c, m, n, &lhs, &rhs, &ok);
    if (rc != ISOLAB_OK) return report_api_error("parallelogram", rc);
    row.emplace_back("m", std::int64_t{m});
    row.emplace_back("n", std::int64_t{n});
  }
  row.emplace_back("lhs", std::int64_t{lhs});
  row.emplace_back("rhs", std::int64_t{rhs});
  row.emplace_back("ok", ok != 0);
  if (!emit(args.out, {row})) return kExitFail;
  return ok ? kExitPass : kExitFail;
}

int run_mult_map(const CommonArgs& args, std::int64_t m) {
  CurveHandle h;
  int rc = isolab_curve_new(args.p, args.a, args.b, &h.c);
  if (rc != ISOLAB_OK) return report_api_error("curve", rc);
  std::int64_t degree = 0;
  int oracle = 0;
  rc = isolab_mult_map_check(h.c, m, &degree, &oracle);
  if (rc != ISOLAB_OK) return report_api_error("mult-map", rc);
  bool ok = oracle != 0 && degree == m * m;
  Row row{{"p", std::uint64_t{args.p}},
          {"a", std::int64_t{args.a}},
          {"b", std::int64_t{args.b}},
          {"m", std::int64_t{m}},
          {"degree", std::int64_t{degree}},
          {"expected_degree", std::int64_t{m * m}},
          {"oracle_match", oracle != 0},
          {"ok", ok}};
  std::vector<Row> summary;
  if (args.out.format == "human") {
    // Show the reduced map itself in human mode.
    for (int which = 0; which < 2; ++which) {
      std::size_t len = 0;
      (void)isolab_mult_map_coeffs(h.c, m, which, nullptr, 0, &len);
      std::vector<std::uint64_t> c(len);
      rc = isolab_mult_map_coeffs(h.c, m, which, c.data(), c.size(), &len);
      if (rc != ISOLAB_OK) return report_api_error("mult-map", rc);
      std::string s;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(c[i]);
      }
      summary.push_back(Row{{which == 0 ? "numerator coefficients"
                                        : "denominator coefficients",
                             s}});
    }
  }
  if (!emit(args.out, {row}, summary)) return kExitFail;
  return ok ? kExitPass : kExitFail;
}

int run_char_eq(const CommonArgs& args, std::int64_t m, std::int64_t n,
                std::int64_t sample) {
  CurveHandle h;
  int rc = isolab_curve_new(args.p, args.a, args.b, &h.c);
  if (rc != ISOLAB_OK) return report_api_error("curve", rc);
  int ok = 0;
  std::int64_t tr = 0, nrm = 0, points = 0;
  rc = isolab_char_equation_check(h.c, m, n, sample, &ok, &tr, &nrm,
                                  &points);
  if (rc != ISOLAB_OK) return report_api_error("char-eq", rc);
  Row row{{"p", std::uint64_t{args.p}}, {"a", std::int64_t{args.a}},
          {"b", std::int64_t{args.b}},  {"m", std::int64_t{m}},
          {"n", std::int64_t{n}},       {"tr", std::int64_t{tr}},
          {"nrm", std::int64_t{nrm}},   {"points", std::int64_t{points}},
          {"ok", ok != 0}};
  if (!emit(args.out, {row})) return kExitFail;
  return ok ? kExitPass : kExitFail;
}

int run_zagier(std::optional<std::uint64_t> p,
               std::optional<std::uint64_t> p_max, const OutputConfig& out,
               bool inject_fault) {
  std::vector<isolab_zagier_record_t> recs;
  if (p.has_value()) {
    isolab_zagier_record_t r;
    int rc = isolab_zagier_verify(*p, &r);
    if (rc != ISOLAB_OK) return report_api_error("zagier", rc);
    recs.push_back(r);
  } else {
    auto cb = [](const isolab_zagier_record_t* r, void* user) {
      static_cast<std::vector<isolab_zagier_record_t>*>(user)->push_back(*r);
      return 0;
    };
    int rc = isolab_zagier_sweep(*p_max, cb, &recs);
    if (rc != ISOLAB_OK) return report_api_error("zagier", rc);
  }
  if (inject_fault && !recs.empty()) {
    recs.front().s += 1;
    recs.front().verdict = ISOLAB_VERDICT_FAIL;
  }
  bool all_ok = true;
  std::vector<Row> rows;
  for (const auto& r : recs) {
    if (r.verdict == ISOLAB_VERDICT_FAIL) all_ok = false;
    rows.push_back(zagier_row(r));
  }
  if (!emit(out, rows)) return kExitFail;
  return all_ok ? kExitPass : kExitFail;
}

int run_height_fuzz(std::uint64_t p, int max_deg, std::uint64_t iters,
                    std::uint64_t seed, const OutputConfig& out) {
  std::uint64_t pair_checked = 0, pair_fail = 0;
  int rc = isolab_pair_height_fuzz(p, max_deg, iters, seed, &pair_checked,
                                   &pair_fail);
  if (rc != ISOLAB_OK) return report_api_error("height-fuzz", rc);
  std::uint64_t quad_checked = 0, quad_fail = 0, u_fail = 0;
  rc = isolab_sum_diff_height_fuzz(p, max_deg, iters, seed, &quad_checked,
                                   &quad_fail, &u_fail);
  if (rc != ISOLAB_OK) return report_api_error("height-fuzz", rc);
  bool ok = pair_fail == 0 && quad_fail == 0 && u_fail == 0;
  Row row{{"p", std::uint64_t{p}},
          {"max_deg", std::int64_t{max_deg}},
          {"iters", std::uint64_t{iters}},
          {"seed", std::uint64_t{seed}},
          {"pair_checked", std::uint64_t{pair_checked}},
          {"pair_failures", std::uint64_t{pair_fail}},
          {"quad_checked", std::uint64_t{quad_checked}},
          {"quad_failures", std::uint64_t{quad_fail}},
          {"gcd_failures", std::uint64_t{u_fail}},
          {"ok", ok}};
  if (!emit(out, {row})) return kExitFail;
  return ok ? kExitPass : kExitFail;
}

int run_resultant_id(std::uint64_t p, std::optional<std::int64_t> a,
                     std::optional<std::int64_t> b, std::uint64_t iters,
                     std::uint64_t seed, const OutputConfig& out) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  if (a.has_value() && b.has_value()) {
    pairs.emplace_back(*a, *b);
  } else {
    // Random nonsingular (a, b): rejection through curve construction.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    while (pairs.size() < iters) {
      auto ca = static_cast<std::int64_t>(d(rng));
      auto cb = static_cast<std::int64_t>(d(rng));
      isolab_curve_t* probe = nullptr;
      if (isolab_curve_new(p, ca, cb, &probe) == ISOLAB_OK) {
        pairs.emplace_back(ca, cb);
      }
      isolab_curve_free(probe);
    }
  }
  bool all_ok = true;
  std::vector<Row> rows;
  for (auto [ca, cb] : pairs) {
    CurveHandle h;
    int rc = isolab_curve_new(p, ca, cb, &h.c);
    if (rc != ISOLAB_OK) return report_api_error("resultant-id", rc);
    std::uint64_t constant = 0;
    int ok = 0;
    rc = isolab_resultant_identity(h.c, &constant, &ok);
    if (rc == ISOLAB_ERR_IDENTITY_VIOLATION) {
      ok = 0;
    } else if (rc != ISOLAB_OK) {
      return report_api_error("resultant-id", rc);
    }
    all_ok = all_ok && ok != 0;
    rows.push_back(Row{{"p", std::uint64_t{p}},
                       {"a", std::int64_t{ca}},
                       {"b", std::int64_t{cb}},
                       {"constant", std::uint64_t{constant}},
                       {"ok", ok != 0}});
  }
  if (!emit(out, rows)) return kExitFail;
  return all_ok ? kExitPass : kExitFail;
}

void add_output_flags(CLI::App* cmd, OutputConfig* out) {
  cmd->add_option("--format", out->format, "Output format")
      ->check(CLI::IsMember({"json-lines", "csv", "human"}))
      ->capture_default_str();
  cmd->add_option("--out", out->out_path, "Write output to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isogeny-lab: exhaustive small-field verification of the "
               "height/degree calculus behind the Hasse bound"};
  app.set_version_flag("--version", std::string(isolab_version()));
  app.require_subcommand(1);

  CommonArgs count_args, trace_args, check_args, par_args, mult_args,
      chareq_args;

  auto add_curve_flags = [](CLI::App* cmd, CommonArgs* a) {
    cmd->add_option("--p", a->p, "Field characteristic (prime > 3)")
        ->required();
    cmd->add_option("--a", a->a, "Curve coefficient a")->required();
    cmd->add_option("--b", a->b, "Curve coefficient b")->required();
    add_output_flags(cmd, &a->out);
  };

  CLI::App* c_count = app.add_subcommand(
      "count", "Point count N = p + 1 + sum of legendre(x^3+ax+b)");
  add_curve_flags(c_count, &count_args);

  CLI::App* c_trace =
      app.add_subcommand("trace", "Frobenius trace t = p + 1 - N");
  add_curve_flags(c_trace, &trace_args);

  CLI::App* c_check = app.add_subcommand(
      "hasse-check", "Check the trace bound t^2 <= 4p for one curve");
  add_curve_flags(c_check, &check_args);
  c_check->add_flag("--inject-fault", check_args.inject_fault,
                    "Corrupt the record before verdicts (test hook)")
      ->group("");

  std::uint64_t sweep_min = 5, sweep_max = 47;
  OutputConfig sweep_out;
  CLI::App* c_sweep = app.add_subcommand(
      "hasse-sweep",
      "Trace bound over every nonsingular curve for primes in a range");
  c_sweep->add_option("--p-min", sweep_min, "Smallest prime")
      ->capture_default_str();
  c_sweep->add_option("--p-max", sweep_max, "Largest prime (<= 128)")
      ->capture_default_str();
  add_output_flags(c_sweep, &sweep_out);

  std::int64_t par_m = 2, par_n = 3;
  bool par_frob = false;
  CLI::App* c_par = app.add_subcommand(
      "parallelogram",
      "Degree law d(phi+psi) + d(phi-psi) = 2d(phi) + 2d(psi)");
  add_curve_flags(c_par, &par_args);
  c_par->add_option("--m", par_m, "phi = [m]")->capture_default_str();
  c_par->add_option("--n", par_n, "psi = [n]")->capture_default_str();
  c_par->add_flag("--frobenius", par_frob,
                  "Use (identity, Frobenius) instead of ([m], [n])");

  std::int64_t mult_m = 2;
  CLI::App* c_mult = app.add_subcommand(
      "mult-map",
      "Multiplication-by-m x-map vs the division-polynomial oracle");
  add_curve_flags(c_mult, &mult_args);
  c_mult->add_option("--m", mult_m, "Multiplier (1..12, p must not divide)")
      ->capture_default_str();

  std::int64_t ce_m = 0, ce_n = 1, ce_sample = 0;
  CLI::App* c_chareq = app.add_subcommand(
      "char-eq",
      "Characteristic equation of [m] + [n]*pi checked on E(F_p^2)");
  add_curve_flags(c_chareq, &chareq_args);
  c_chareq->add_option("--m", ce_m, "Coefficient of the identity")
      ->capture_default_str();
  c_chareq->add_option("--n", ce_n, "Coefficient of Frobenius")
      ->capture_default_str();
  c_chareq->add_option("--sample", ce_sample,
                       "Points to check (0 = all of E(F_p^2))")
      ->capture_default_str();

  std::optional<std::uint64_t> z_p;
  std::optional<std::uint64_t> z_pmax;
  OutputConfig z_out;
  bool z_fault = false;
  CLI::App* c_zagier = app.add_subcommand(
      "zagier",
      "Character sum of x^3 - 35x + 98: zero or +-2A with p = A^2 + 7B^2");
  c_zagier->add_option("--p", z_p, "Single prime");
  c_zagier->add_option("--p-max", z_pmax, "Sweep all primes up to here");
  c_zagier->add_flag("--inject-fault", z_fault,
                     "Corrupt the first record (test hook)")
      ->group("");
  add_output_flags(c_zagier, &z_out);

  std::uint64_t hf_p = 101, hf_iters = 500, hf_seed = kDefaultSeed;
  int hf_maxdeg = 6;
  OutputConfig hf_out;
  CLI::App* c_fuzz = app.add_subcommand(
      "height-fuzz",
      "Random coprime pairs/quadruples: product and sum/difference height "
      "laws");
  c_fuzz->add_option("--p", hf_p, "Field characteristic")
      ->capture_default_str();
  c_fuzz->add_option("--max-deg", hf_maxdeg, "Degree cap for draws")
      ->capture_default_str();
  c_fuzz->add_option("--iters", hf_iters, "Iterations per law")
      ->capture_default_str();
  c_fuzz->add_option("--seed", hf_seed, "Generator seed")
      ->capture_default_str();
  add_output_flags(c_fuzz, &hf_out);

  std::uint64_t ri_p = 97, ri_iters = 100, ri_seed = kDefaultSeed;
  std::optional<std::int64_t> ri_a, ri_b;
  OutputConfig ri_out;
  CLI::App* c_resid = app.add_subcommand(
      "resultant-id",
      "Degree-witness expansion equals 4a^3 + 27b^2 exactly");
  c_resid->add_option("--p", ri_p, "Field characteristic")
      ->capture_default_str();
  c_resid->add_option("--a", ri_a, "Fixed coefficient a");
  c_resid->add_option("--b", ri_b, "Fixed coefficient b");
  c_resid->add_option("--iters", ri_iters, "Random (a, b) draws")
      ->capture_default_str();
  c_resid->add_option("--seed", ri_seed, "Generator seed")
      ->capture_default_str();
  add_output_flags(c_resid, &ri_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_count->parsed()) return run_count_like(count_args);
    if (c_trace->parsed()) return run_count_like(trace_args);
    if (c_check->parsed()) return run_count_like(check_args);
    if (c_sweep->parsed()) {
      return run_hasse_sweep(sweep_min, sweep_max, sweep_out);
    }
    if (c_par->parsed()) {
      return run_parallelogram(par_args, par_m, par_n, par_frob);
    }
    if (c_mult->parsed()) return run_mult_map(mult_args, mult_m);
    if (c_chareq->parsed()) {
      return run_char_eq(chareq_args, ce_m, ce_n, ce_sample);
    }
    if (c_zagier->parsed()) {
      if (!z_p.has_value() && !z_pmax.has_value()) {
        std::cerr << "error: zagier needs --p or --p-max\n";
        return kExitUsage;
      }
      return run_zagier(z_p, z_pmax, z_out, z_fault);
    }
    if (c_fuzz->parsed()) {
      return run_height_fuzz(hf_p, hf_maxdeg, hf_iters, hf_seed, hf_out);
    }
    if (c_resid->parsed()) {
      return run_resultant_id(ri_p, ri_a, ri_b, ri_iters, ri_seed, ri_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
